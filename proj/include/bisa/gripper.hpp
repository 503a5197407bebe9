#pragma once

#include <optional>
#include <vector>

#include "bisa/bending.hpp"
#include "bisa/core.hpp"
#include "bisa/lateral.hpp"

namespace bisa {

struct Finger {
  BlsModel bls;
  ChamberStack chambers;
};

// Static multi-finger gripper description. mount_tilt is recorded for
// bookkeeping; the capacity estimates treat fingers as parallel springs.
class GripperConfig {
 public:
  GripperConfig(std::vector<Finger> fingers, double mount_tilt_deg,
                double friction_coefficient, double allowable_deflection_m,
                double tendon_limit_n);

  const std::vector<Finger>& fingers() const { return fingers_; }
  int finger_count() const { return static_cast<int>(fingers_.size()); }
  double mount_tilt_deg() const { return mount_tilt_deg_; }
  double friction_coefficient() const { return friction_coefficient_; }
  double allowable_deflection() const { return allowable_deflection_; }
  double tendon_limit() const { return tendon_limit_; }

 private:
  std::vector<Finger> fingers_;
  double mount_tilt_deg_;
  double friction_coefficient_;
  double allowable_deflection_;
  double tendon_limit_;
};

// Horizontal lift estimate: every finger deflected laterally to the
// allowable limit, forces summed. working_ok clears when any finger's
// tendon pre-tension cannot hold its own share as a continuous beam.
struct LiftCapacity {
  double force_n;
  std::vector<double> per_finger_n;
  bool working_ok;
};

LiftCapacity lift_capacity(const GripperConfig& config, double alpha_rad);

enum class GraspShape {
  kCylindrical,  // friction-only transmission
  kReduced,      // geometric interlock, normal force transmits directly
};

// Force the closed gripper can resist along the pull-out axis, capped by
// the tendon limit from the config.
double inverse_grasp_capacity(const GripperConfig& config, GraspShape shape,
                              double normal_force_per_finger_n);

// Per-finger withstand-moment gain for a pressure step, plus the mean.
// aggregate_gain is empty when any finger's base withstand is zero;
// calibrated is true only when every stack was fit from measurements.
struct NormalGraspReport {
  std::vector<StiffnessGain> per_finger;
  std::optional<double> aggregate_gain;
  bool calibrated;
};

NormalGraspReport normal_grasp_report(const GripperConfig& config, double base_pressure_pa,
                                      double pressure_increment_pa);

}  // namespace bisa
