#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bisa::csv {

// Shortest round-trip decimal form of a double, locale-independent.
// Every number the tool emits goes through here so that repeated runs
// produce byte-identical files.
std::string format_double(double value);

// Strict double parse of a full cell; `context` (e.g. "data.csv row 3,
// column force_N") prefixes the error message.
double parse_double(const std::string& cell, const std::string& context);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style reader: quoted cells, doubled quotes, LF or CRLF line
// endings. The first record is the header; every row must match its
// width. Structural problems raise a domain error naming file and row;
// an unreadable path raises a domain error too (bad user path), while
// stream failures after a successful open raise an I/O error.
Table read_csv(const std::filesystem::path& path);

// Writes header + rows, quoting cells only when needed. Failures to open
// or flush raise an I/O error.
void write_csv(const std::filesystem::path& path, const Table& table);

std::string escape_cell(const std::string& cell);

}  // namespace bisa::csv
