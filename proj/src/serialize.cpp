#include "bisa/serialize.hpp"

#include <cmath>

#include "bisa/errors.hpp"
#include "bisa/units.hpp"

namespace bisa {

namespace {

using csv::format_double;
using csv::parse_double;
using nlohmann::json;
using nlohmann::ordered_json;

void require_header(const csv::Table& table, const std::vector<std::string>& expected,
                    const std::string& source) {
  if (table.header != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      want += (i > 0 ? "," : "") + expected[i];
    }
    throw DomainError(source + " row 1: header must be '" + want + "'");
  }
}

std::string row_context(const std::string& source, std::size_t row_idx,
                        const std::string& column) {
  // +2: rows are 0-based and sit below the header line.
  return source + " row " + std::to_string(row_idx + 2) + ", column " + column;
}

double json_number(const json& document, const char* key, const std::string& source) {
  const auto it = document.find(key);
  if (it == document.end() || !it->is_number()) {
    throw DomainError(source + ": missing numeric key '" + key + "'");
  }
  return it->get<double>();
}

int json_int(const json& document, const char* key, const std::string& source) {
  const auto it = document.find(key);
  if (it == document.end() || !it->is_number_integer()) {
    throw DomainError(source + ": missing integer key '" + key + "'");
  }
  return it->get<int>();
}

bool json_bool(const json& document, const char* key, const std::string& source) {
  const auto it = document.find(key);
  if (it == document.end() || !it->is_boolean()) {
    throw DomainError(source + ": missing boolean key '" + key + "'");
  }
  return it->get<bool>();
}

std::string json_string(const json& document, const char* key, const std::string& source) {
  const auto it = document.find(key);
  if (it == document.end() || !it->is_string()) {
    throw DomainError(source + ": missing string key '" + key + "'");
  }
  return it->get<std::string>();
}

double rms(double sum_squares, int count) {
  return count > 0 ? std::sqrt(sum_squares / static_cast<double>(count)) : 0.0;
}

}  // namespace

csv::Table influence_table(std::span<const double> alphas_deg) {
  csv::Table table;
  table.header = {"alpha_deg", "a_bending", "a_torsion"};
  table.rows.reserve(alphas_deg.size());
  for (double deg : alphas_deg) {
    const double alpha = units::deg_to_rad(deg);
    table.rows.push_back({format_double(deg), format_double(influence_bending(alpha)),
                          format_double(influence_torsion(alpha))});
  }
  return table;
}

csv::Table evaluation_table(const SweepGrid& grid, std::span<const double> alphas_deg) {
  if (!alphas_deg.empty() && alphas_deg.size() != grid.alphas().size()) {
    throw DomainError("degree labels do not match the sweep grid: " +
                      std::to_string(alphas_deg.size()) + " vs " +
                      std::to_string(grid.alphas().size()));
  }
  csv::Table table;
  table.header.reserve(grid.lambdas().size() + 1);
  table.header.push_back("alpha_deg");
  for (double lambda : grid.lambdas()) {
    table.header.push_back("F_lambda_" + format_double(lambda));
  }
  table.rows.reserve(grid.alphas().size());
  for (std::size_t r = 0; r < grid.alphas().size(); ++r) {
    std::vector<std::string> row;
    row.reserve(grid.lambdas().size() + 1);
    const double deg =
        alphas_deg.empty() ? units::rad_to_deg(grid.alphas()[r]) : alphas_deg[r];
    row.push_back(format_double(deg));
    for (std::size_t c = 0; c < grid.lambdas().size(); ++c) {
      row.push_back(format_double(grid.value(r, c)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

csv::Table pose_table(const Pose2D& pose) {
  csv::Table table;
  table.header = {"x_mm", "y_mm"};
  table.rows.reserve(pose.points.size());
  for (const Point2& p : pose.points) {
    table.rows.push_back(
        {format_double(units::m_to_mm(p.x)), format_double(units::m_to_mm(p.y))});
  }
  return table;
}

csv::Table stiffness_table_to_csv(const StiffnessTable& table) {
  csv::Table out;
  out.header = {"label",           "bending_angle_deg",  "pulling_mass_kg",
                "pressure_step_kPa", "stiffness_N_per_mm", "r2"};
  out.rows.reserve(table.rows.size());
  for (const StiffnessRow& row : table.rows) {
    out.rows.push_back({row.meta.label, format_double(row.meta.bending_angle_deg),
                        format_double(row.meta.pulling_mass_kg),
                        format_double(row.meta.pressure_step_kpa),
                        format_double(units::n_per_m_to_n_per_mm(row.stiffness_n_per_m)),
                        format_double(row.r_squared)});
  }
  return out;
}

StiffnessTable stiffness_table_from_csv(const csv::Table& table,
                                        const std::string& source) {
  require_header(table,
                 {"label", "bending_angle_deg", "pulling_mass_kg", "pressure_step_kPa",
                  "stiffness_N_per_mm", "r2"},
                 source);
  StiffnessTable out;
  out.rows.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::vector<std::string>& cells = table.rows[i];
    StiffnessRow row;
    row.meta.label = cells[0];
    row.meta.bending_angle_deg =
        parse_double(cells[1], row_context(source, i, "bending_angle_deg"));
    row.meta.pulling_mass_kg =
        parse_double(cells[2], row_context(source, i, "pulling_mass_kg"));
    row.meta.pressure_step_kpa =
        parse_double(cells[3], row_context(source, i, "pressure_step_kPa"));
    row.stiffness_n_per_m = units::n_per_mm_to_n_per_m(
        parse_double(cells[4], row_context(source, i, "stiffness_N_per_mm")));
    row.r_squared = parse_double(cells[5], row_context(source, i, "r2"));
    out.rows.push_back(std::move(row));
  }
  return out;
}

csv::Table series_table(std::span<const double> displacement_mm,
                        std::span<const double> force_n) {
  if (displacement_mm.size() != force_n.size()) {
    throw DomainError("displacement and force must have equal length");
  }
  csv::Table table;
  table.header = {"displacement_mm", "force_N"};
  table.rows.reserve(displacement_mm.size());
  for (std::size_t i = 0; i < displacement_mm.size(); ++i) {
    table.rows.push_back({format_double(displacement_mm[i]), format_double(force_n[i])});
  }
  return table;
}

ForceDispSeries series_from_csv(const csv::Table& table, const json& meta,
                                const std::string& source) {
  require_header(table, {"displacement_mm", "force_N"}, source);
  std::vector<double> displacement;
  std::vector<double> force;
  displacement.reserve(table.rows.size());
  force.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    displacement.push_back(units::mm_to_m(
        parse_double(table.rows[i][0], row_context(source, i, "displacement_mm"))));
    force.push_back(parse_double(table.rows[i][1], row_context(source, i, "force_N")));
  }

  const std::string meta_source = source + " sidecar";
  SeriesMeta parsed;
  parsed.bending_angle_deg = json_number(meta, "bending_angle_deg", meta_source);
  parsed.pulling_mass_kg = json_number(meta, "pulling_mass_kg", meta_source);
  parsed.pressure_step_kpa = json_number(meta, "pressure_step_kPa", meta_source);
  parsed.label = json_string(meta, "label", meta_source);
  return ForceDispSeries(std::move(displacement), std::move(force), std::move(parsed));
}

ordered_json series_meta_to_json(const SeriesMeta& meta) {
  ordered_json doc;
  doc["bending_angle_deg"] = meta.bending_angle_deg;
  doc["pulling_mass_kg"] = meta.pulling_mass_kg;
  doc["pressure_step_kPa"] = meta.pressure_step_kpa;
  doc["label"] = meta.label;
  return doc;
}

ordered_json bls_calibration_to_json(const BlsCalibration& calibration) {
  ordered_json doc;
  doc["scale_N_per_m"] = calibration.scale_n_per_m;
  doc["residual_rms_N_per_m"] =
      rms(calibration.residual_sum_squares, calibration.sample_count);
  doc["sample_count"] = calibration.sample_count;
  return doc;
}

BlsCalibration bls_calibration_from_json(const json& document, const std::string& source) {
  BlsCalibration calibration{};
  calibration.scale_n_per_m = json_number(document, "scale_N_per_m", source);
  calibration.sample_count = json_int(document, "sample_count", source);
  const double residual_rms = json_number(document, "residual_rms_N_per_m", source);
  calibration.residual_sum_squares =
      residual_rms * residual_rms * static_cast<double>(calibration.sample_count);
  return calibration;
}

ordered_json chamber_calibration_to_json(const ChamberCalibration& calibration) {
  ordered_json doc;
  doc["chamber_count"] = calibration.chamber_count;
  // N·m per Pa (m^3) -> N·mm per kPa: x1000 for the moment, x1000 for the
  // pressure step.
  doc["pressure_coefficient_Nmm_per_kPa"] = calibration.pressure_coefficient_m3 * 1e6;
  doc["restoring_moment_Nmm"] = units::nm_to_nmm(calibration.restoring_moment_nm);
  doc["residual_rms_Nmm"] = units::nm_to_nmm(
      rms(calibration.residual_sum_squares, calibration.sample_count));
  doc["unphysical"] = calibration.unphysical;
  doc["sample_count"] = calibration.sample_count;
  return doc;
}

ChamberCalibration chamber_calibration_from_json(const json& document,
                                                 const std::string& source) {
  ChamberCalibration calibration{};
  calibration.chamber_count = json_int(document, "chamber_count", source);
  calibration.pressure_coefficient_m3 =
      json_number(document, "pressure_coefficient_Nmm_per_kPa", source) * 1e-6;
  calibration.restoring_moment_nm =
      units::nmm_to_nm(json_number(document, "restoring_moment_Nmm", source));
  calibration.unphysical = json_bool(document, "unphysical", source);
  calibration.sample_count = json_int(document, "sample_count", source);
  const double residual_rms =
      units::nmm_to_nm(json_number(document, "residual_rms_Nmm", source));
  calibration.residual_sum_squares =
      residual_rms * residual_rms * static_cast<double>(calibration.sample_count);
  return calibration;
}

ordered_json angle_pressure_fit_to_json(int degree, std::span<const PolyFit> fits) {
  ordered_json doc;
  doc["degree"] = degree;
  ordered_json branches = ordered_json::array();
  for (const PolyFit& fit : fits) {
    ordered_json entry;
    entry["branch"] = fit.branch;
    entry["coefficients_deg_per_kPa_power"] = fit.coefficients;
    entry["residual_rms_deg"] = rms(fit.residual_sum_squares, fit.sample_count);
    entry["sample_count"] = fit.sample_count;
    branches.push_back(std::move(entry));
  }
  doc["branches"] = std::move(branches);
  return doc;
}

AnglePressureFitDoc angle_pressure_fit_from_json(const json& document,
                                                 const std::string& source) {
  AnglePressureFitDoc doc;
  doc.degree = json_int(document, "degree", source);
  const auto branches = document.find("branches");
  if (branches == document.end() || !branches->is_array() || branches->empty()) {
    throw DomainError(source + ": missing non-empty array 'branches'");
  }
  for (const json& entry : *branches) {
    PolyFit fit;
    fit.branch = json_string(entry, "branch", source);
    const auto coeffs = entry.find("coefficients_deg_per_kPa_power");
    if (coeffs == entry.end() || !coeffs->is_array()) {
      throw DomainError(source + ": missing array 'coefficients_deg_per_kPa_power'");
    }
    fit.coefficients = coeffs->get<std::vector<double>>();
    fit.sample_count = json_int(entry, "sample_count", source);
    const double residual_rms = json_number(entry, "residual_rms_deg", source);
    fit.residual_sum_squares =
        residual_rms * residual_rms * static_cast<double>(fit.sample_count);
    doc.fits.push_back(std::move(fit));
  }
  return doc;
}

std::vector<std::pair<double, double>> chamber_samples_from_csv(
    const csv::Table& table, const std::string& source) {
  require_header(table, {"pressure_kPa", "withstand_Nmm"}, source);
  std::vector<std::pair<double, double>> samples;
  samples.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const double pressure = units::kpa_to_pa(
        parse_double(table.rows[i][0], row_context(source, i, "pressure_kPa")));
    const double withstand = units::nmm_to_nm(
        parse_double(table.rows[i][1], row_context(source, i, "withstand_Nmm")));
    samples.emplace_back(pressure, withstand);
  }
  return samples;
}

std::vector<AnglePressureSample> angle_pressure_from_csv(const csv::Table& table,
                                                         const std::string& source) {
  require_header(table, {"pressure_kPa", "angle_deg", "branch"}, source);
  std::vector<AnglePressureSample> samples;
  samples.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    AnglePressureSample sample;
    sample.pressure_kpa =
        parse_double(table.rows[i][0], row_context(source, i, "pressure_kPa"));
    sample.angle_deg = parse_double(table.rows[i][1], row_context(source, i, "angle_deg"));
    sample.branch = table.rows[i][2];
    samples.push_back(std::move(sample));
  }
  return samples;
}

}  // namespace bisa
