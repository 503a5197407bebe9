#include "bisa/gripper.hpp"

#include <cmath>

#include "bisa/errors.hpp"

namespace bisa {

GripperConfig::GripperConfig(std::vector<Finger> fingers, double mount_tilt_deg,
                             double friction_coefficient, double allowable_deflection_m,
                             double tendon_limit_n)
    : fingers_(std::move(fingers)),
      mount_tilt_deg_(mount_tilt_deg),
      friction_coefficient_(friction_coefficient),
      allowable_deflection_(allowable_deflection_m),
      tendon_limit_(tendon_limit_n) {
  if (fingers_.size() < 2) {
    throw DomainError("gripper needs at least two fingers");
  }
  detail::require_finite(mount_tilt_deg, "mount_tilt");
  detail::require_non_negative(friction_coefficient, "friction_coefficient");
  detail::require_positive(allowable_deflection_m, "allowable_deflection");
  detail::require_positive(tendon_limit_n, "tendon_limit");
}

LiftCapacity lift_capacity(const GripperConfig& config, double alpha_rad) {
  LiftCapacity result{0.0, {}, true};
  result.per_finger_n.reserve(config.fingers().size());
  for (const Finger& finger : config.fingers()) {
    const LateralResult lateral = lateral_stiffness(finger.bls, alpha_rad);
    const double force = lateral.stiffness_n_per_m * config.allowable_deflection();
    result.per_finger_n.push_back(force);
    result.force_n += force;
    // The finger must stay in the continuous-beam regime while carrying
    // its own share of the load.
    const WorkingCondition wc =
        working_condition(finger.bls, LoadCase(force, 0.0));
    result.working_ok = result.working_ok && wc.satisfied;
  }
  return result;
}

double inverse_grasp_capacity(const GripperConfig& config, GraspShape shape,
                              double normal_force_per_finger_n) {
  detail::require_non_negative(normal_force_per_finger_n, "normal_force");
  const double n = static_cast<double>(config.finger_count());
  double capacity = 0.0;
  switch (shape) {
    case GraspShape::kCylindrical:
      capacity = n * config.friction_coefficient() * normal_force_per_finger_n;
      break;
    case GraspShape::kReduced:
      capacity = n * normal_force_per_finger_n;
      break;
  }
  return std::min(capacity, config.tendon_limit());
}

NormalGraspReport normal_grasp_report(const GripperConfig& config,
                                      double base_pressure_pa,
                                      double pressure_increment_pa) {
  NormalGraspReport report{{}, std::nullopt, true};
  report.per_finger.reserve(config.fingers().size());
  double sum = 0.0;
  bool all_defined = true;
  for (const Finger& finger : config.fingers()) {
    StiffnessGain gain =
        stiffness_gain(base_pressure_pa, pressure_increment_pa, finger.chambers);
    report.calibrated = report.calibrated && gain.calibrated;
    if (gain.gain.has_value()) {
      sum += *gain.gain;
    } else {
      all_defined = false;
    }
    report.per_finger.push_back(std::move(gain));
  }
  if (all_defined && !report.per_finger.empty()) {
    report.aggregate_gain = sum / static_cast<double>(report.per_finger.size());
  }
  return report;
}

}  // namespace bisa
