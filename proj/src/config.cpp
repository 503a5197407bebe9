#include "bisa/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bisa/errors.hpp"
#include "bisa/jsonschema.hpp"
#include "bisa/units.hpp"
#include "embedded.hpp"

namespace bisa {

using nlohmann::json;

const json& config_schema() {
  static const json schema = json::parse(embedded::kConfigSchema);
  return schema;
}

const json& report_schema() {
  static const json schema = json::parse(embedded::kReportSchema);
  return schema;
}

nlohmann::ordered_json default_config_json() {
  return nlohmann::ordered_json::parse(embedded::kDefaultConfig);
}

std::vector<double> SweepSpec::alphas_deg() const {
  if (!(alpha_start_deg <= alpha_stop_deg)) {
    throw DomainError("alpha range must satisfy start <= stop");
  }
  const double span = alpha_stop_deg - alpha_start_deg;
  const auto count = static_cast<std::size_t>(std::floor(span / alpha_step_deg + 1e-9)) + 1;
  std::vector<double> degrees;
  degrees.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    degrees.push_back(alpha_start_deg + static_cast<double>(i) * alpha_step_deg);
  }
  return degrees;
}

std::vector<double> SweepSpec::alphas_rad() const {
  std::vector<double> result = alphas_deg();
  for (double& value : result) {
    value = units::deg_to_rad(value);
  }
  return result;
}

GripperConfig RunConfig::make_gripper() const { return make_gripper(chambers); }

GripperConfig RunConfig::make_gripper(const ChamberStack& calibrated_chambers) const {
  std::vector<Finger> fingers(static_cast<std::size_t>(gripper.finger_count),
                              Finger{bls, calibrated_chambers});
  return GripperConfig(std::move(fingers), gripper.mount_tilt_deg,
                       gripper.friction_coefficient, gripper.allowable_deflection_m,
                       gripper.tendon_limit_n);
}

RunConfig parse_config(const json& document) {
  const std::vector<std::string> problems = validate_schema(document, config_schema());
  if (!problems.empty()) {
    std::string message = "configuration is invalid:";
    for (const std::string& p : problems) {
      message += "\n  " + p;
    }
    throw DomainError(message);
  }

  const json& mat = document.at("material");
  const json& sec = document.at("section");
  const json& bls = document.at("bls");
  const json& ch = document.at("chambers");
  const json& load = document.at("load");
  const json& grip = document.at("gripper");
  const json& sweep = document.at("sweep");

  Material material(units::mpa_to_pa(mat.at("young_modulus_MPa").get<double>()),
                    mat.at("poisson_ratio").get<double>());
  RectSection section(units::mm_to_m(sec.at("width_mm").get<double>()),
                      sec.at("aspect_ratio").get<double>());
  BlsModel bls_model(material, section, units::mm_to_m(bls.at("arc_length_mm").get<double>()),
                     units::mm_to_m(bls.at("structure_height_mm").get<double>()),
                     units::mm_to_m(bls.at("segment_length_mm").get<double>()),
                     bls.at("segment_count").get<int>(),
                     bls.at("pretension_N").get<double>());
  ChamberStack chambers(ch.at("count").get<int>(),
                        units::mm_to_m(ch.at("half_width_mm").get<double>()),
                        units::mm_to_m(ch.at("half_height_mm").get<double>()),
                        units::mm3_to_m3(ch.at("contact_first_moment_mm3").get<double>()),
                        units::nmm_to_nm(ch.at("restoring_moment_Nmm").get<double>()),
                        units::nmm_to_nm(ch.at("tendon_critical_moment_Nmm").get<double>()));
  LoadCase load_case(load.at("external_force_N").get<double>(),
                     units::kpa_to_pa(load.at("pressure_kPa").get<double>()));

  GripperSpec gripper{
      grip.at("finger_count").get<int>(),
      grip.at("mount_tilt_deg").get<double>(),
      grip.at("friction_coefficient").get<double>(),
      units::mm_to_m(grip.at("allowable_deflection_mm").get<double>()),
      grip.at("tendon_limit_N").get<double>(),
      grip.at("normal_force_per_finger_N").get<double>(),
      units::kpa_to_pa(grip.at("grasp_base_pressure_kPa").get<double>()),
      units::kpa_to_pa(grip.at("grasp_pressure_increment_kPa").get<double>()),
      grip.at("report_angles_deg").get<std::vector<double>>()};

  SweepSpec sweep_spec{sweep.at("alpha_start_deg").get<double>(),
                       sweep.at("alpha_stop_deg").get<double>(),
                       sweep.at("alpha_step_deg").get<double>(),
                       sweep.at("lambdas").get<std::vector<double>>(),
                       sweep.at("nu").get<double>()};
  if (!(sweep_spec.alpha_start_deg <= sweep_spec.alpha_stop_deg)) {
    throw DomainError("sweep alpha range must satisfy start <= stop");
  }

  StiffnessUnit unit = StiffnessUnit::kNewtonPerMillimetre;
  if (document.contains("units")) {
    const json& units_block = document.at("units");
    if (units_block.contains("stiffness") &&
        units_block.at("stiffness").get<std::string>() == "N_per_m") {
      unit = StiffnessUnit::kNewtonPerMetre;
    }
  }

  return RunConfig{material,
                   section,
                   units::mm_to_m(sec.at("width_limit_mm").get<double>()),
                   bls_model,
                   chambers,
                   load_case,
                   std::move(gripper),
                   std::move(sweep_spec),
                   unit};
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot open config '" + path.string() + "'");
  }
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(document);
}

RunConfig default_config() { return parse_config(default_config_json()); }

}  // namespace bisa
