#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "bisa/core.hpp"
#include "bisa/gripper.hpp"

namespace bisa {

enum class StiffnessUnit {
  kNewtonPerMillimetre,  // display default
  kNewtonPerMetre,
};

struct SweepSpec {
  double alpha_start_deg;
  double alpha_stop_deg;
  double alpha_step_deg;
  std::vector<double> lambdas;
  double poisson_ratio;

  // Inclusive whole grid start, start+step, ..., stop (stop included when
  // it lands on the grid within 1e-9 of a step).
  std::vector<double> alphas_rad() const;
  std::vector<double> alphas_deg() const;
};

struct GripperSpec {
  int finger_count;
  double mount_tilt_deg;
  double friction_coefficient;
  double allowable_deflection_m;
  double tendon_limit_n;
  double normal_force_per_finger_n;
  double grasp_base_pressure_pa;
  double grasp_pressure_increment_pa;
  std::vector<double> report_angles_deg;
};

// Fully validated run parameters in SI units. Construct via parse_config /
// load_config / default_config.
struct RunConfig {
  Material material;
  RectSection section;
  double width_limit_m;
  BlsModel bls;
  ChamberStack chambers;
  LoadCase load;
  GripperSpec gripper;
  SweepSpec sweep;
  StiffnessUnit stiffness_unit;

  // Homogeneous gripper: finger_count copies of (bls, chambers).
  GripperConfig make_gripper() const;
  GripperConfig make_gripper(const ChamberStack& calibrated_chambers) const;
};

const nlohmann::json& config_schema();
const nlohmann::json& report_schema();
nlohmann::ordered_json default_config_json();

// Validates against the config schema (unknown keys rejected), then
// converts boundary units (mm, kPa, MPa, N·mm, deg) to SI and constructs
// the domain objects, which re-check their own invariants.
RunConfig parse_config(const nlohmann::json& document);

RunConfig load_config(const std::filesystem::path& path);
RunConfig default_config();

}  // namespace bisa
