#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisa/config.hpp"
#include "bisa/csv.hpp"
#include "bisa/errors.hpp"
#include "bisa/jsonschema.hpp"
#include "bisa/serialize.hpp"

using namespace bisa;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("bisa-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("default configuration parses into a consistent model") {
  const RunConfig cfg = default_config();
  CHECK(cfg.material.shear_modulus() == doctest::Approx(1.0e9).epsilon(1e-15));  // 2700 MPa, nu 0.35
  CHECK(cfg.section.width() == 0.004);
  CHECK(cfg.section.aspect_ratio() == 1.0);
  CHECK(cfg.bls.arc_length() == 0.08);
  CHECK(cfg.bls.segment_count() == 8);
  CHECK(cfg.chambers.chamber_count() == 9);
  CHECK(cfg.chambers.restoring_moment() == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(cfg.gripper.finger_count == 4);
  CHECK(cfg.load.pressure() == doctest::Approx(45e3).epsilon(1e-12));
  CHECK(cfg.stiffness_unit == StiffnessUnit::kNewtonPerMillimetre);

  const std::vector<double> alphas = cfg.sweep.alphas_deg();
  REQUIRE(alphas.size() == 180);
  CHECK(alphas.front() == 1.0);
  CHECK(alphas.back() == 180.0);
}

TEST_CASE("the shipped example config matches the embedded default") {
  const fs::path example =
      fs::path(BISA_MECH_SOURCE_DIR) / "configs" / "example_config.json";
  std::ifstream in(example);
  REQUIRE(in.good());
  const json on_disk = json::parse(in);
  CHECK(on_disk == json(default_config_json()));
}

TEST_CASE("sweep spec builds inclusive whole-degree grids") {
  json doc = default_config_json();
  doc["sweep"]["alpha_start_deg"] = 10.0;
  doc["sweep"]["alpha_stop_deg"] = 180.0;
  doc["sweep"]["alpha_step_deg"] = 10.0;
  const RunConfig cfg = parse_config(doc);
  const std::vector<double> alphas = cfg.sweep.alphas_deg();
  REQUIRE(alphas.size() == 18);
  CHECK(alphas.front() == 10.0);
  CHECK(alphas.back() == 180.0);
}

TEST_CASE("configuration rejects unknown keys and missing blocks") {
  json doc = default_config_json();
  doc["surprise"] = 1;
  CHECK_THROWS_WITH_AS(parse_config(doc), doctest::Contains("surprise"), DomainError);

  json nested = default_config_json();
  nested["material"]["youngs"] = 3.0;
  CHECK_THROWS_WITH_AS(parse_config(nested), doctest::Contains("youngs"), DomainError);

  json missing = default_config_json();
  missing.erase("chambers");
  CHECK_THROWS_WITH_AS(parse_config(missing), doctest::Contains("chambers"),
                       DomainError);

  json wrong_type = default_config_json();
  wrong_type["material"]["poisson_ratio"] = "high";
  CHECK_THROWS_AS(parse_config(wrong_type), DomainError);

  json bad_unit = default_config_json();
  bad_unit["units"]["stiffness"] = "lbf_per_in";
  CHECK_THROWS_AS(parse_config(bad_unit), DomainError);

  json si_unit = default_config_json();
  si_unit["units"]["stiffness"] = "N_per_m";
  CHECK(parse_config(si_unit).stiffness_unit == StiffnessUnit::kNewtonPerMetre);
}

TEST_CASE("config loads from disk with clear errors") {
  TempDir tmp;
  const fs::path good = tmp.path / "config.json";
  {
    std::ofstream out(good);
    out << default_config_json().dump(2);
  }
  CHECK(load_config(good).bls.arc_length() == 0.08);

  CHECK_THROWS_AS(load_config(tmp.path / "absent.json"), DomainError);

  const fs::path garbled = tmp.path / "garbled.json";
  {
    std::ofstream out(garbled);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_config(garbled), DomainError);
}

TEST_CASE("gripper assembly from config") {
  const RunConfig cfg = default_config();
  const GripperConfig grip = cfg.make_gripper();
  CHECK(grip.finger_count() == 4);
  CHECK(grip.friction_coefficient() == 0.5);
  CHECK(grip.allowable_deflection() == doctest::Approx(0.0092).epsilon(1e-12));
  CHECK_FALSE(grip.fingers()[0].chambers.calibrated());

  ChamberStack fitted(9, 0.01, 0.005, 5e-7, 0.02, 0.1, true);
  const GripperConfig calibrated = cfg.make_gripper(fitted);
  CHECK(calibrated.fingers()[0].chambers.calibrated());
}

TEST_CASE("doubles survive the text round trip") {
  for (double v : {0.1, 344.3412222728581, -1.5e-300, 0.0, 12345.0}) {
    const std::string text = csv::format_double(v);
    CHECK(csv::parse_double(text, "test") == v);
  }
  CHECK(csv::format_double(0.1) == "0.1");
  CHECK(csv::parse_double(" 42 ", "test") == 42.0);
  CHECK_THROWS_WITH_AS(csv::parse_double("abc", "row 3"), doctest::Contains("row 3"),
                       DomainError);
  CHECK_THROWS_AS(csv::parse_double("1e999", "test"), DomainError);
  CHECK_THROWS_AS(csv::parse_double("", "test"), DomainError);
}

TEST_CASE("csv files round trip with quoting") {
  TempDir tmp;
  const fs::path file = tmp.path / "table.csv";

  csv::Table table;
  table.header = {"label", "value"};
  table.rows = {{"plain", "1.5"},
                {"with,comma", "2.5"},
                {"with \"quotes\"", "3.5"},
                {"with\nnewline", "4.5"}};
  csv::write_csv(file, table);

  const csv::Table back = csv::read_csv(file);
  CHECK(back.header == table.header);
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(back.rows[i] == table.rows[i]);
  }
}

TEST_CASE("csv reader reports structural problems precisely") {
  TempDir tmp;
  const fs::path ragged = tmp.path / "ragged.csv";
  {
    std::ofstream out(ragged);
    out << "a,b\n1,2\n3\n";
  }
  CHECK_THROWS_WITH_AS(csv::read_csv(ragged), doctest::Contains("row 3"), DomainError);

  const fs::path empty = tmp.path / "empty.csv";
  { std::ofstream out(empty); }
  CHECK_THROWS_AS(csv::read_csv(empty), DomainError);

  CHECK_THROWS_AS(csv::read_csv(tmp.path / "absent.csv"), DomainError);

  // CRLF endings parse the same as LF
  const fs::path crlf = tmp.path / "crlf.csv";
  {
    std::ofstream out(crlf, std::ios::binary);
    out << "x,y\r\n1,2\r\n";
  }
  const csv::Table t = csv::read_csv(crlf);
  CHECK(t.header == std::vector<std::string>{"x", "y"});
  CHECK(t.rows[0] == std::vector<std::string>{"1", "2"});
}

TEST_CASE("stiffness table csv round trip preserves values and headers") {
  StiffnessTable table;
  table.rows = {
      StiffnessRow{SeriesMeta{0.0, 0.1, 0.0, "base"}, 337.5, 1.0},
      StiffnessRow{SeriesMeta{90.0, 0.1, 20.0, "base"}, 344.3412222728581, 0.9987},
  };
  const csv::Table out = stiffness_table_to_csv(table);
  CHECK(out.header ==
        std::vector<std::string>{"label", "bending_angle_deg", "pulling_mass_kg",
                                 "pressure_step_kPa", "stiffness_N_per_mm", "r2"});
  const StiffnessTable back = stiffness_table_from_csv(out, "test");
  REQUIRE(back.rows.size() == 2);
  CHECK(back.rows[0].stiffness_n_per_m == 337.5);
  CHECK(back.rows[1].stiffness_n_per_m == 344.3412222728581);
  CHECK(back.rows[1].meta.label == "base");
  CHECK(back.rows[1].meta.pressure_step_kpa == 20.0);
  CHECK(back.rows[1].r_squared == 0.9987);
}

TEST_CASE("series csv and sidecar meta round trip") {
  std::vector<double> disp_mm{0.0, 1.0, 2.0};
  std::vector<double> force{0.0, 0.35, 0.7};
  const csv::Table t = series_table(disp_mm, force);
  CHECK(t.header == std::vector<std::string>{"displacement_mm", "force_N"});

  json meta = {{"bending_angle_deg", 90.0},
               {"pulling_mass_kg", 0.2},
               {"pressure_step_kPa", 0.0},
               {"label", "demo"}};
  const ForceDispSeries series = series_from_csv(t, meta, "mem");
  CHECK(series.displacement()[1] == doctest::Approx(0.001).epsilon(1e-14));
  CHECK(series.force()[2] == 0.7);
  CHECK(series.meta().bending_angle_deg == 90.0);
  CHECK(series.meta().label == "demo");

  json incomplete = {{"bending_angle_deg", 90.0}};
  CHECK_THROWS_WITH_AS(series_from_csv(t, incomplete, "mem"), doctest::Contains("mem"),
                       DomainError);
}

TEST_CASE("calibration documents round trip through json") {
  const BlsCalibration bls{112.5, 1.25e-22, 5};
  const json doc = bls_calibration_to_json(bls);
  CHECK(doc.at("scale_N_per_m") == 112.5);
  const BlsCalibration back = bls_calibration_from_json(doc, "mem");
  CHECK(back.scale_n_per_m == 112.5);
  CHECK(back.sample_count == 5);

  const ChamberCalibration ch{2e-5, 0.02, 3.1e-28, false, 9, 4};
  const json chdoc = chamber_calibration_to_json(ch);
  CHECK(chdoc.at("pressure_coefficient_Nmm_per_kPa").get<double>() ==
        doctest::Approx(20.0).epsilon(1e-12));
  const ChamberCalibration chback = chamber_calibration_from_json(chdoc, "mem");
  CHECK(chback.pressure_coefficient_m3 == doctest::Approx(2e-5).epsilon(1e-14));
  CHECK(chback.restoring_moment_nm == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(chback.chamber_count == 9);
  CHECK_FALSE(chback.unphysical);

  std::vector<PolyFit> fits{{"up", {5.0, 2.5}, 0.0, 4}};
  const json apdoc = angle_pressure_fit_to_json(1, fits);
  const AnglePressureFitDoc apback = angle_pressure_fit_from_json(apdoc, "mem");
  CHECK(apback.degree == 1);
  REQUIRE(apback.fits.size() == 1);
  CHECK(apback.fits[0].branch == "up");
  CHECK(apback.fits[0].coefficients == std::vector<double>{5.0, 2.5});
}

TEST_CASE("schema validator catches the usual mistakes") {
  const json schema = {
      {"type", "object"},
      {"additionalProperties", false},
      {"required", json::array({"count", "name"})},
      {"properties",
       {{"count", {{"type", "integer"}, {"minimum", 1}}},
        {"name", {{"type", "string"}}},
        {"mode", {{"enum", json::array({"fast", "slow"})}}},
        {"ratio", {{"type", json::array({"number", "null"})}}},
        {"tags",
         {{"type", "array"}, {"minItems", 1}, {"items", {{"type", "string"}}}}}}}};

  CHECK(validate_schema({{"count", 2}, {"name", "ok"}}, schema).empty());
  CHECK(validate_schema({{"count", 2}, {"name", "ok"}, {"ratio", nullptr}}, schema)
            .empty());
  CHECK(validate_schema({{"count", 2}, {"name", "ok"}, {"ratio", 1.5}}, schema).empty());

  CHECK_FALSE(validate_schema({{"count", 0}, {"name", "ok"}}, schema).empty());
  CHECK_FALSE(validate_schema({{"count", 2}}, schema).empty());
  CHECK_FALSE(validate_schema({{"count", 2}, {"name", 3}}, schema).empty());
  CHECK_FALSE(
      validate_schema({{"count", 2}, {"name", "ok"}, {"extra", 1}}, schema).empty());
  CHECK_FALSE(
      validate_schema({{"count", 2}, {"name", "ok"}, {"mode", "medium"}}, schema)
          .empty());
  CHECK_FALSE(
      validate_schema({{"count", 2}, {"name", "ok"}, {"ratio", "high"}}, schema)
          .empty());
  CHECK_FALSE(
      validate_schema({{"count", 2}, {"name", "ok"}, {"tags", json::array()}}, schema)
          .empty());

  // problems carry a path to the offending node
  const auto problems = validate_schema({{"count", 2}, {"name", 3}}, schema);
  REQUIRE_FALSE(problems.empty());
  CHECK(problems[0].find("name") != std::string::npos);
}

TEST_CASE("embedded schemas are valid json and strict") {
  CHECK(config_schema().is_object());
  CHECK(report_schema().is_object());
  CHECK(config_schema().at("additionalProperties") == false);
  // the default config satisfies its own schema
  CHECK(validate_schema(json(default_config_json()), config_schema()).empty());
}
