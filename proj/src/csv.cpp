#include "bisa/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "bisa/errors.hpp"

namespace bisa::csv {

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) {
    throw DomainError("number cannot be formatted");
  }
  return std::string(buffer, ptr);
}

double parse_double(const std::string& cell, const std::string& context) {
  // Trim ASCII whitespace; from_chars accepts none of it.
  std::size_t begin = cell.find_first_not_of(" \t\r");
  std::size_t end = cell.find_last_not_of(" \t\r");
  if (begin == std::string::npos) {
    throw DomainError(context + ": empty numeric cell");
  }
  const char* first = cell.data() + begin;
  const char* last = cell.data() + end + 1;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DomainError(context + ": '" + cell + "' is not a number");
  }
  detail::require_finite(value, context.c_str());
  return value;
}

namespace {

// Splits a whole file into records, honouring quotes: commas, CR/LF and
// doubled quotes inside a quoted cell belong to the cell. Record numbers
// count records, not physical lines, so error messages stay meaningful
// when cells span lines.
std::vector<std::vector<std::string>> split_records(const std::string& text,
                                                    const std::string& name) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;  // distinguishes "" from an absent cell

  auto where = [&] { return name + " row " + std::to_string(records.size() + 1); };
  auto end_cell = [&] {
    cells.push_back(std::move(cell));
    cell.clear();
    cell_started = false;
  };
  auto end_record = [&] {
    end_cell();
    records.push_back(std::move(cells));
    cells.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      if (cell_started) {
        throw DomainError(where() + ": quote inside unquoted cell");
      }
      quoted = true;
      cell_started = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\n') {
      end_record();
    } else if (c == '\r') {
      // swallow the LF of a CRLF pair; a bare CR also ends the record
      if (i + 1 < text.size() && text[i + 1] == '\n') {
        ++i;
      }
      end_record();
    } else {
      cell.push_back(c);
      cell_started = true;
    }
  }
  if (quoted) {
    throw DomainError(where() + ": unterminated quoted cell");
  }
  if (cell_started || !cells.empty()) {
    end_record();  // file without a trailing newline
  }
  return records;
}

}  // namespace

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("error while reading '" + path.string() + "'");
  }

  const std::string name = path.filename().string();
  Table table;
  std::vector<std::vector<std::string>> records = split_records(buffer.str(), name);
  for (std::size_t rec = 0; rec < records.size(); ++rec) {
    std::vector<std::string>& cells = records[rec];
    if (cells.size() == 1 && cells[0].empty()) {
      continue;  // blank line
    }
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size()) {
        throw DomainError(name + " row " + std::to_string(rec + 1) + ": expected " +
                          std::to_string(table.header.size()) + " cells, found " +
                          std::to_string(cells.size()));
      }
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) {
    throw DomainError("'" + path.string() + "' is empty");
  }
  return table;
}

std::string escape_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) {
    return cell;
  }
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  auto write_record = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) {
        out.put(',');
      }
      out << escape_cell(cells[i]);
    }
    out.put('\n');
  };
  write_record(table.header);
  for (const std::vector<std::string>& row : table.rows) {
    write_record(row);
  }
  out.flush();
  if (!out) {
    throw IoError("error while writing '" + path.string() + "'");
  }
}

}  // namespace bisa::csv
