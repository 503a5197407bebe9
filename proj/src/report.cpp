#include "bisa/report.hpp"

#include <algorithm>
#include <cmath>

#include "bisa/bending.hpp"
#include "bisa/errors.hpp"
#include "bisa/gripper.hpp"
#include "bisa/lateral.hpp"
#include "bisa/units.hpp"

namespace bisa {

namespace {

using nlohmann::ordered_json;

ordered_json config_summary(const RunConfig& config) {
  ordered_json material;
  material["young_modulus_MPa"] = units::pa_to_mpa(config.material.young_modulus());
  material["poisson_ratio"] = config.material.poisson_ratio();

  ordered_json section;
  section["width_mm"] = units::m_to_mm(config.section.width());
  section["aspect_ratio"] = config.section.aspect_ratio();
  section["height_mm"] = units::m_to_mm(config.section.height());
  section["width_limit_mm"] = units::m_to_mm(config.width_limit_m);

  ordered_json bls;
  bls["arc_length_mm"] = units::m_to_mm(config.bls.arc_length());
  bls["structure_height_mm"] = units::m_to_mm(config.bls.structure_height());
  bls["segment_length_mm"] = units::m_to_mm(config.bls.segment_length());
  bls["segment_count"] = config.bls.segment_count();
  bls["pretension_N"] = config.bls.pretension();

  ordered_json chambers;
  chambers["count"] = config.chambers.chamber_count();
  chambers["half_width_mm"] = units::m_to_mm(config.chambers.half_width());
  chambers["half_height_mm"] = units::m_to_mm(config.chambers.half_height());
  chambers["contact_first_moment_mm3"] =
      units::m3_to_mm3(config.chambers.contact_first_moment());
  chambers["restoring_moment_Nmm"] = units::nm_to_nmm(config.chambers.restoring_moment());
  chambers["tendon_critical_moment_Nmm"] =
      units::nm_to_nmm(config.chambers.tendon_critical_moment());

  ordered_json gripper;
  gripper["finger_count"] = config.gripper.finger_count;
  gripper["mount_tilt_deg"] = config.gripper.mount_tilt_deg;
  gripper["friction_coefficient"] = config.gripper.friction_coefficient;
  gripper["allowable_deflection_mm"] = units::m_to_mm(config.gripper.allowable_deflection_m);
  gripper["tendon_limit_N"] = config.gripper.tendon_limit_n;

  ordered_json summary;
  summary["material"] = std::move(material);
  summary["section"] = std::move(section);
  summary["bls"] = std::move(bls);
  summary["chambers"] = std::move(chambers);
  summary["gripper"] = std::move(gripper);
  return summary;
}

ordered_json sweep_summary(const RunConfig& config, int sweep_threads,
                           std::optional<double>& recommended) {
  const SweepSpec& spec = config.sweep;
  const std::vector<double> alphas = spec.alphas_rad();
  const SweepGrid grid =
      sweep_evaluation(alphas, spec.lambdas, spec.poisson_ratio, sweep_threads);

  ordered_json lambdas = ordered_json::array();
  for (std::size_t c = 0; c < spec.lambdas.size(); ++c) {
    double f_min = grid.value(0, c);
    double running_max = 0.0;
    bool non_decreasing = true;
    for (std::size_t r = 0; r < alphas.size(); ++r) {
      const double f = grid.value(r, c);
      f_min = std::min(f_min, f);
      // Same screen recommend_aspect_ratio applies: a relative drawdown
      // beyond the tolerance counts as a genuine stiffness loss.
      if (f < running_max * (1.0 - kMonotoneDrawdownTolerance)) {
        non_decreasing = false;
      }
      running_max = std::max(running_max, f);
    }
    ordered_json entry;
    entry["aspect_ratio"] = spec.lambdas[c];
    entry["f_start"] = grid.value(0, c);
    entry["f_end"] = grid.value(alphas.size() - 1, c);
    entry["f_min"] = f_min;
    entry["non_decreasing"] = non_decreasing;
    lambdas.push_back(std::move(entry));
  }

  const AspectRatioRecommendation rec =
      recommend_aspect_ratio(spec.lambdas, spec.poisson_ratio, config.section.width(),
                             config.width_limit_m, 0.0, spec.alpha_stop_deg);
  recommended = rec.aspect_ratio;

  ordered_json summary;
  summary["alpha_start_deg"] = spec.alpha_start_deg;
  summary["alpha_stop_deg"] = spec.alpha_stop_deg;
  summary["alpha_step_deg"] = spec.alpha_step_deg;
  summary["poisson_ratio"] = spec.poisson_ratio;
  summary["lambdas"] = std::move(lambdas);
  if (recommended.has_value()) {
    summary["recommended_aspect_ratio"] = *recommended;
  } else {
    summary["recommended_aspect_ratio"] = nullptr;
  }
  return summary;
}

ordered_json gripper_section(const RunConfig& config, const ReportInputs& inputs) {
  const double scale = inputs.bls.scale_n_per_m;
  const GripperSpec& spec = config.gripper;

  ordered_json lift = ordered_json::array();
  for (double angle_deg : spec.report_angles_deg) {
    const double alpha = units::deg_to_rad(angle_deg);
    const double f = evaluation_function(alpha, config.material.poisson_ratio(),
                                         config.section.aspect_ratio());
    const double stiffness = 4.0 * scale * f;  // calibrated EI/C^3
    const double per_finger = stiffness * spec.allowable_deflection_m;
    const WorkingCondition wc =
        working_condition(config.bls, LoadCase(per_finger, 0.0));
    ordered_json entry;
    entry["bending_angle_deg"] = angle_deg;
    entry["capacity_N"] = static_cast<double>(spec.finger_count) * per_finger;
    entry["working_ok"] = wc.satisfied;
    lift.push_back(std::move(entry));
  }

  const GripperConfig gripper = config.make_gripper();
  ordered_json inverse;
  inverse["normal_force_per_finger_N"] = spec.normal_force_per_finger_n;
  inverse["cylindrical_N"] = inverse_grasp_capacity(gripper, GraspShape::kCylindrical,
                                                    spec.normal_force_per_finger_n);
  inverse["reduced_N"] = inverse_grasp_capacity(gripper, GraspShape::kReduced,
                                                spec.normal_force_per_finger_n);

  const ChamberStack calibrated =
      apply_chamber_calibration(config.chambers, inputs.chambers);
  const NormalGraspReport grasp =
      normal_grasp_report(config.make_gripper(calibrated), spec.grasp_base_pressure_pa,
                          spec.grasp_pressure_increment_pa);
  ordered_json normal;
  normal["base_pressure_kPa"] = units::pa_to_kpa(spec.grasp_base_pressure_pa);
  normal["pressure_increment_kPa"] = units::pa_to_kpa(spec.grasp_pressure_increment_pa);
  if (grasp.aggregate_gain.has_value()) {
    normal["gain"] = *grasp.aggregate_gain;
  } else {
    normal["gain"] = nullptr;
  }
  normal["calibrated"] = grasp.calibrated;

  ordered_json section;
  section["lift"] = std::move(lift);
  section["inverse_grasp"] = std::move(inverse);
  section["normal_grasp"] = std::move(normal);
  return section;
}

}  // namespace

ordered_json build_report(const RunConfig& config, const ReportInputs& inputs,
                          int sweep_threads) {
  ordered_json report;
  report["config_summary"] = config_summary(config);

  ordered_json calibration;
  calibration["bls"] = bls_calibration_to_json(inputs.bls);
  calibration["chambers"] = chamber_calibration_to_json(inputs.chambers);
  report["calibration"] = std::move(calibration);

  ordered_json table = ordered_json::array();
  for (const StiffnessRow& row : inputs.table.rows) {
    ordered_json entry;
    entry["label"] = row.meta.label;
    entry["bending_angle_deg"] = row.meta.bending_angle_deg;
    entry["pulling_mass_kg"] = row.meta.pulling_mass_kg;
    entry["pressure_step_kPa"] = row.meta.pressure_step_kpa;
    entry["stiffness_N_per_mm"] = units::n_per_m_to_n_per_mm(row.stiffness_n_per_m);
    entry["r2"] = row.r_squared;
    table.push_back(std::move(entry));
  }
  report["stiffness_table"] = std::move(table);

  ordered_json curves = ordered_json::array();
  for (const RatioCurve& curve : ratio_curves(inputs.table)) {
    ordered_json entry;
    entry["label"] = curve.label;
    entry["angles_deg"] = curve.angles_deg;
    entry["ratios"] = curve.ratios;
    curves.push_back(std::move(entry));
  }
  report["ratio_curves"] = std::move(curves);

  std::optional<double> recommended;
  report["sweep_summary"] = sweep_summary(config, sweep_threads, recommended);

  if (inputs.angle_pressure.has_value()) {
    report["angle_pressure_fit"] = angle_pressure_fit_to_json(
        inputs.angle_pressure->degree, inputs.angle_pressure->fits);
  }

  report["gripper"] = gripper_section(config, inputs);

  ordered_json names = ordered_json::array();
  for (const std::string& name : inputs.input_names) {
    names.push_back(name);
  }
  report["inputs"] = std::move(names);
  return report;
}

}  // namespace bisa
