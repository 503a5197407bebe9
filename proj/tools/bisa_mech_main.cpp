// bisa-mech: mechanics toolkit for a tendon/pneumatic bending actuator.
// Subcommands: sweep (dimensionless stiffness grids), stiffness (one-shot
// model evaluation), fit (measurement ingestion and calibration), report
// (combined JSON for plotting and review).
//
// Exit codes: 0 success, 2 invalid input or out-of-domain parameter,
// 3 I/O failure. All numeric output is byte-deterministic.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisa/bending.hpp"
#include "bisa/config.hpp"
#include "bisa/csv.hpp"
#include "bisa/errors.hpp"
#include "bisa/gripper.hpp"
#include "bisa/jsonschema.hpp"
#include "bisa/lateral.hpp"
#include "bisa/report.hpp"
#include "bisa/serialize.hpp"
#include "bisa/units.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct SweepArgs {
  std::string config_path;
  std::string lambda_list;
  std::string alpha_range;
  std::optional<double> nu;
  std::string out_dir = ".";
};

struct StiffnessArgs {
  std::string config_path;
  double alpha_deg = 90.0;
  std::string mode = "lateral";
  std::optional<double> pressure_kpa;
};

struct FitArgs {
  std::string config_path;
  std::vector<std::string> files;
  std::string kind;
  int degree = 2;
  std::string out_dir = ".";
};

struct ReportArgs {
  std::string config_path;
  std::string data_dir = ".";
  std::string out_path;
};

bisa::RunConfig resolve_config(const std::string& path) {
  if (path.empty()) {
    return bisa::default_config();
  }
  return bisa::load_config(path);
}

// "start:stop:step" in degrees -> inclusive grid.
void apply_alpha_range(const std::string& text, bisa::SweepSpec& spec) {
  const std::size_t first = text.find(':');
  const std::size_t second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw bisa::DomainError("--alpha-range must look like start:stop:step (degrees)");
  }
  const std::string context = "--alpha-range";
  spec.alpha_start_deg = bisa::csv::parse_double(text.substr(0, first), context);
  spec.alpha_stop_deg =
      bisa::csv::parse_double(text.substr(first + 1, second - first - 1), context);
  spec.alpha_step_deg = bisa::csv::parse_double(text.substr(second + 1), context);
  if (spec.alpha_start_deg <= 0.0 || spec.alpha_stop_deg > 180.0 ||
      spec.alpha_start_deg > spec.alpha_stop_deg || spec.alpha_step_deg <= 0.0) {
    throw bisa::DomainError(
        "--alpha-range must satisfy 0 < start <= stop <= 180 with step > 0");
  }
}

std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> lambdas;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    lambdas.push_back(
        bisa::csv::parse_double(text.substr(begin, end - begin), "--lambda-list"));
    begin = end + 1;
  }
  return lambdas;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw bisa::IoError("cannot create output directory '" + dir.string() + "'");
  }
}

void write_json_file(const fs::path& path, const ordered_json& document) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw bisa::IoError("cannot open '" + path.string() + "' for writing");
  }
  out << document.dump(2) << '\n';
  out.flush();
  if (!out) {
    throw bisa::IoError("error while writing '" + path.string() + "'");
  }
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw bisa::DomainError("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw bisa::DomainError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

int run_sweep(const SweepArgs& args) {
  bisa::RunConfig config = resolve_config(args.config_path);
  bisa::SweepSpec spec = config.sweep;
  if (!args.alpha_range.empty()) {
    apply_alpha_range(args.alpha_range, spec);
  }
  if (!args.lambda_list.empty()) {
    spec.lambdas = parse_lambda_list(args.lambda_list);
  }
  if (args.nu.has_value()) {
    spec.poisson_ratio = *args.nu;
  }

  const std::vector<double> alphas_deg = spec.alphas_deg();
  const std::vector<double> alphas_rad = spec.alphas_rad();
  const bisa::SweepGrid grid =
      bisa::sweep_evaluation(alphas_rad, spec.lambdas, spec.poisson_ratio);

  const fs::path out_dir(args.out_dir);
  ensure_directory(out_dir);
  bisa::csv::write_csv(out_dir / "influence.csv", bisa::influence_table(alphas_deg));
  bisa::csv::write_csv(out_dir / "evaluation.csv", bisa::evaluation_table(grid, alphas_deg));

  std::cout << "wrote " << (out_dir / "influence.csv").string() << " and "
            << (out_dir / "evaluation.csv").string() << " (" << alphas_deg.size()
            << " rows)\n";
  return 0;
}

int run_stiffness(const StiffnessArgs& args) {
  const bisa::RunConfig config = resolve_config(args.config_path);
  if (args.alpha_deg <= 0.0 || args.alpha_deg > 180.0) {
    throw bisa::DomainError("--alpha must lie in (0, 180] degrees");
  }
  const double alpha = bisa::units::deg_to_rad(args.alpha_deg);
  const double pressure_pa = args.pressure_kpa.has_value()
                                 ? bisa::units::kpa_to_pa(*args.pressure_kpa)
                                 : config.load.pressure();
  if (pressure_pa < 0.0) {
    throw bisa::DomainError("--pressure must be non-negative");
  }

  const bisa::WorkingCondition wc = bisa::working_condition(config.bls, config.load);
  ordered_json out;
  if (args.mode == "lateral") {
    const bisa::LateralResult result = bisa::lateral_stiffness(config.bls, alpha);
    out["mode"] = "lateral";
    out["alpha_deg"] = args.alpha_deg;
    if (config.stiffness_unit == bisa::StiffnessUnit::kNewtonPerMillimetre) {
      out["stiffness_N_per_mm"] =
          bisa::units::n_per_m_to_n_per_mm(result.stiffness_n_per_m);
    } else {
      out["stiffness_N_per_m"] = result.stiffness_n_per_m;
    }
    out["evaluation"] = result.evaluation;
    out["a_bending"] = result.a_bending;
    out["a_torsion"] = result.a_torsion;
  } else if (args.mode == "bending") {
    const bisa::MomentBalance balance = bisa::moment_balance(config.chambers, pressure_pa);
    out["mode"] = "bending";
    out["pressure_kPa"] = bisa::units::pa_to_kpa(pressure_pa);
    out["chamber_count"] = balance.chamber_count;
    out["pressure_moment_Nmm"] = bisa::units::nm_to_nmm(balance.pressure_moment_nm);
    out["contact_moment_Nmm"] = bisa::units::nm_to_nmm(balance.contact_moment_nm);
    out["restoring_moment_Nmm"] = bisa::units::nm_to_nmm(balance.restoring_moment_nm);
    out["withstand_moment_Nmm"] = bisa::units::nm_to_nmm(balance.external_moment_nm);
    out["residual_Nmm"] = bisa::units::nm_to_nmm(balance.residual_nm);
    out["pre_contact"] = balance.pre_contact;
  } else {
    throw bisa::DomainError("--mode must be 'lateral' or 'bending'");
  }
  ordered_json condition;
  condition["satisfied"] = wc.satisfied;
  condition["margin_Nmm"] = bisa::units::nm_to_nmm(wc.margin_nm);
  out["working_condition"] = std::move(condition);

  std::cout << out.dump(2) << '\n';
  return 0;
}

// Files are processed in lexicographic order so the emitted table (and
// every downstream artifact) does not depend on shell glob order.
std::vector<fs::path> sorted_inputs(const std::vector<std::string>& files) {
  std::vector<fs::path> paths(files.begin(), files.end());
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });
  return paths;
}

int run_fit(const FitArgs& args) {
  if (args.files.empty()) {
    throw bisa::DomainError("fit needs at least one input file");
  }
  const bisa::RunConfig config = resolve_config(args.config_path);
  const std::vector<fs::path> inputs = sorted_inputs(args.files);
  const fs::path out_dir(args.out_dir);
  ensure_directory(out_dir);

  ordered_json stdout_doc;
  if (args.kind == "slope") {
    bisa::StiffnessTable table;
    for (const fs::path& path : inputs) {
      const bisa::csv::Table csv_table = bisa::csv::read_csv(path);
      fs::path meta_path = path;
      meta_path.replace_extension(".meta.json");
      if (!fs::exists(meta_path)) {
        throw bisa::DomainError("missing sidecar '" + meta_path.string() + "' for '" +
                                path.string() + "'");
      }
      const json meta = read_json_file(meta_path);
      const bisa::ForceDispSeries series =
          bisa::series_from_csv(csv_table, meta, path.filename().string());
      const bisa::SlopeFit fit = bisa::fit_slope(series);
      table.rows.push_back(
          bisa::StiffnessRow{series.meta(), fit.stiffness_n_per_m, fit.r_squared});
    }
    bisa::csv::write_csv(out_dir / "stiffness_table.csv",
                         bisa::stiffness_table_to_csv(table));

    stdout_doc["kind"] = "slope";
    ordered_json rows = ordered_json::array();
    for (const bisa::StiffnessRow& row : table.rows) {
      ordered_json entry;
      entry["label"] = row.meta.label;
      entry["bending_angle_deg"] = row.meta.bending_angle_deg;
      entry["pulling_mass_kg"] = row.meta.pulling_mass_kg;
      entry["pressure_step_kPa"] = row.meta.pressure_step_kpa;
      entry["stiffness_N_per_mm"] =
          bisa::units::n_per_m_to_n_per_mm(row.stiffness_n_per_m);
      entry["r2"] = row.r_squared;
      rows.push_back(std::move(entry));
    }
    stdout_doc["rows"] = std::move(rows);
    stdout_doc["out"] = (out_dir / "stiffness_table.csv").string();
  } else if (args.kind == "bls") {
    // Calibrates the lateral-stiffness scale EI/C^3 from a stiffness
    // table. Straight-pose rows (0 deg) carry no shape information for
    // the angular model and are skipped.
    std::vector<std::pair<double, double>> samples;
    for (const fs::path& path : inputs) {
      const bisa::StiffnessTable table = bisa::stiffness_table_from_csv(
          bisa::csv::read_csv(path), path.filename().string());
      for (const bisa::StiffnessRow& row : table.rows) {
        if (row.meta.bending_angle_deg == 0.0) {
          continue;
        }
        samples.emplace_back(bisa::units::deg_to_rad(row.meta.bending_angle_deg),
                             row.stiffness_n_per_m);
      }
    }
    if (samples.empty()) {
      throw bisa::DomainError("no rows with a positive bending angle to calibrate from");
    }
    const bisa::BlsCalibration calibration = bisa::calibrate_bls(
        samples, config.material.poisson_ratio(), config.section.aspect_ratio());
    stdout_doc = bisa::bls_calibration_to_json(calibration);
    write_json_file(out_dir / "bls_calibration.json", stdout_doc);
  } else if (args.kind == "chambers") {
    std::vector<std::pair<double, double>> samples;
    for (const fs::path& path : inputs) {
      const auto file_samples = bisa::chamber_samples_from_csv(
          bisa::csv::read_csv(path), path.filename().string());
      samples.insert(samples.end(), file_samples.begin(), file_samples.end());
    }
    const bisa::ChamberCalibration calibration =
        bisa::calibrate_chambers(samples, config.chambers.chamber_count());
    if (calibration.unphysical) {
      std::cerr << "warning: fitted restoring moment is negative (unphysical fit)\n";
    }
    stdout_doc = bisa::chamber_calibration_to_json(calibration);
    write_json_file(out_dir / "chamber_calibration.json", stdout_doc);
  } else if (args.kind == "angle-pressure") {
    std::vector<bisa::AnglePressureSample> samples;
    for (const fs::path& path : inputs) {
      const auto file_samples = bisa::angle_pressure_from_csv(
          bisa::csv::read_csv(path), path.filename().string());
      samples.insert(samples.end(), file_samples.begin(), file_samples.end());
    }
    const std::vector<bisa::PolyFit> fits = bisa::fit_angle_pressure(samples, args.degree);
    stdout_doc = bisa::angle_pressure_fit_to_json(args.degree, fits);
    write_json_file(out_dir / "angle_pressure_fit.json", stdout_doc);
  } else {
    throw bisa::DomainError(
        "--kind must be one of slope, bls, chambers, angle-pressure");
  }

  std::cout << stdout_doc.dump(2) << '\n';
  return 0;
}

int run_report(const ReportArgs& args) {
  const bisa::RunConfig config = resolve_config(args.config_path);
  const fs::path data_dir(args.data_dir);

  const fs::path table_path = data_dir / "stiffness_table.csv";
  const fs::path bls_path = data_dir / "bls_calibration.json";
  const fs::path chambers_path = data_dir / "chamber_calibration.json";
  const fs::path angle_pressure_path = data_dir / "angle_pressure_fit.json";

  std::string missing;
  for (const fs::path& required : {table_path, bls_path, chambers_path}) {
    if (!fs::exists(required)) {
      missing += (missing.empty() ? "" : ", ") + required.string();
    }
  }
  if (!missing.empty()) {
    throw bisa::DomainError("missing report inputs: " + missing);
  }

  bisa::ReportInputs inputs{
      bisa::stiffness_table_from_csv(bisa::csv::read_csv(table_path),
                                     table_path.filename().string()),
      bisa::bls_calibration_from_json(read_json_file(bls_path),
                                      bls_path.filename().string()),
      bisa::chamber_calibration_from_json(read_json_file(chambers_path),
                                          chambers_path.filename().string()),
      std::nullopt,
      {}};
  inputs.input_names = {table_path.filename().string(), bls_path.filename().string(),
                        chambers_path.filename().string()};
  if (fs::exists(angle_pressure_path)) {
    inputs.angle_pressure = bisa::angle_pressure_fit_from_json(
        read_json_file(angle_pressure_path), angle_pressure_path.filename().string());
    inputs.input_names.push_back(angle_pressure_path.filename().string());
  }
  std::sort(inputs.input_names.begin(), inputs.input_names.end());

  const ordered_json report = bisa::build_report(config, inputs);

  // Guard against drift between the builder and the shipped schema.
  const std::vector<std::string> problems =
      bisa::validate_schema(json::parse(report.dump()), bisa::report_schema());
  if (!problems.empty()) {
    std::string message = "internal error: report does not match its schema:";
    for (const std::string& p : problems) {
      message += "\n  " + p;
    }
    throw bisa::DomainError(message);
  }

  const fs::path out_path =
      args.out_path.empty() ? data_dir / "report.json" : fs::path(args.out_path);
  if (out_path.has_parent_path()) {
    ensure_directory(out_path.parent_path());
  }
  write_json_file(out_path, report);
  std::cout << report.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mechanics toolkit for a pneumatic/tendon bidirectional-stiffening "
               "actuator: stiffness sweeps, moment balances, calibration fits and "
               "plot-ready reports."};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Write influence.csv and evaluation.csv over an angle grid");
  sweep->add_option("--config", sweep_args.config_path, "JSON run configuration");
  sweep->add_option("--lambda-list", sweep_args.lambda_list,
                    "Comma-separated aspect ratios (overrides config)");
  sweep->add_option("--alpha-range", sweep_args.alpha_range,
                    "start:stop:step in degrees (overrides config)");
  sweep->add_option("--nu", sweep_args.nu, "Poisson ratio (overrides config)");
  sweep->add_option("--out", sweep_args.out_dir, "Output directory")
      ->capture_default_str();

  StiffnessArgs stiffness_args;
  CLI::App* stiffness = app.add_subcommand(
      "stiffness", "Evaluate one stiffness model at a bending angle");
  stiffness->add_option("--config", stiffness_args.config_path, "JSON run configuration");
  stiffness->add_option("--alpha", stiffness_args.alpha_deg, "Bending angle in degrees")
      ->capture_default_str();
  stiffness
      ->add_option("--mode", stiffness_args.mode,
                   "Which model to evaluate: lateral or bending")
      ->capture_default_str();
  stiffness->add_option("--pressure", stiffness_args.pressure_kpa,
                        "Chamber pressure in kPa (default: config load)");

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand("fit", "Fit measurement CSVs");
  fit->add_option("files", fit_args.files, "Input CSV files")->required();
  fit->add_option("--kind", fit_args.kind,
                  "slope | bls | chambers | angle-pressure")
      ->required();
  fit->add_option("--degree", fit_args.degree,
                  "Polynomial degree for --kind angle-pressure")
      ->capture_default_str();
  fit->add_option("--config", fit_args.config_path, "JSON run configuration");
  fit->add_option("--out", fit_args.out_dir, "Output directory")->capture_default_str();

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand(
      "report", "Combine fit outputs into one validated JSON report");
  report->add_option("--config", report_args.config_path, "JSON run configuration");
  report->add_option("--data-dir", report_args.data_dir,
                     "Directory holding stiffness_table.csv and calibration JSONs")
      ->capture_default_str();
  report->add_option("--out", report_args.out_path,
                     "Report path (default: <data-dir>/report.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep(sweep_args);
    }
    if (stiffness->parsed()) {
      return run_stiffness(stiffness_args);
    }
    if (fit->parsed()) {
      return run_fit(fit_args);
    }
    return run_report(report_args);
  } catch (const bisa::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 3;
  } catch (const bisa::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
