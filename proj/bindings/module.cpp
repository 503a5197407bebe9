#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bisa/bending.hpp"
#include "bisa/core.hpp"
#include "bisa/datafit.hpp"
#include "bisa/errors.hpp"
#include "bisa/gripper.hpp"
#include "bisa/kinematics.hpp"
#include "bisa/lateral.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mechanics models for a tendon/pneumatic bidirectional-stiffening actuator";

  py::register_exception<bisa::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<bisa::IoError>(m, "IoError", PyExc_OSError);

  // Core types ------------------------------------------------------------
  py::class_<bisa::Material>(m, "Material")
      .def(py::init<double, double>(), py::arg("young_modulus_pa"),
           py::arg("poisson_ratio"))
      .def_property_readonly("young_modulus", &bisa::Material::young_modulus)
      .def_property_readonly("poisson_ratio", &bisa::Material::poisson_ratio)
      .def_property_readonly("shear_modulus", &bisa::Material::shear_modulus);

  py::class_<bisa::RectSection>(m, "RectSection")
      .def(py::init<double, double>(), py::arg("width_m"), py::arg("aspect_ratio"))
      .def_property_readonly("width", &bisa::RectSection::width)
      .def_property_readonly("aspect_ratio", &bisa::RectSection::aspect_ratio)
      .def_property_readonly("height", &bisa::RectSection::height)
      .def_property_readonly("bending_inertia", &bisa::RectSection::bending_inertia)
      .def_property_readonly("torsion_inertia", &bisa::RectSection::torsion_inertia);

  py::class_<bisa::BlsModel>(m, "BlsModel")
      .def(py::init<bisa::Material, bisa::RectSection, double, double, double, int,
                    double>(),
           py::arg("material"), py::arg("section"), py::arg("arc_length_m"),
           py::arg("structure_height_m"), py::arg("segment_length_m"),
           py::arg("segment_count"), py::arg("pretension_n"))
      .def_property_readonly("material", &bisa::BlsModel::material)
      .def_property_readonly("section", &bisa::BlsModel::section)
      .def_property_readonly("arc_length", &bisa::BlsModel::arc_length)
      .def_property_readonly("structure_height", &bisa::BlsModel::structure_height)
      .def_property_readonly("segment_length", &bisa::BlsModel::segment_length)
      .def_property_readonly("segment_count", &bisa::BlsModel::segment_count)
      .def_property_readonly("pretension", &bisa::BlsModel::pretension);

  py::class_<bisa::ChamberStack>(m, "ChamberStack")
      .def(py::init<int, double, double, double, double, double, bool>(),
           py::arg("chamber_count"), py::arg("half_width_m"), py::arg("half_height_m"),
           py::arg("contact_first_moment_m3"), py::arg("restoring_moment_nm"),
           py::arg("tendon_critical_moment_nm"), py::arg("calibrated") = false)
      .def_property_readonly("chamber_count", &bisa::ChamberStack::chamber_count)
      .def_property_readonly("half_width", &bisa::ChamberStack::half_width)
      .def_property_readonly("half_height", &bisa::ChamberStack::half_height)
      .def_property_readonly("contact_first_moment",
                             &bisa::ChamberStack::contact_first_moment)
      .def_property_readonly("restoring_moment", &bisa::ChamberStack::restoring_moment)
      .def_property_readonly("tendon_critical_moment",
                             &bisa::ChamberStack::tendon_critical_moment)
      .def_property_readonly("calibrated", &bisa::ChamberStack::calibrated);

  py::class_<bisa::LoadCase>(m, "LoadCase")
      .def(py::init<double, double>(), py::arg("external_force_n"), py::arg("pressure_pa"))
      .def_property_readonly("external_force", &bisa::LoadCase::external_force)
      .def_property_readonly("pressure", &bisa::LoadCase::pressure);

  // Lateral stiffness ------------------------------------------------------
  py::class_<bisa::LateralResult>(m, "LateralResult")
      .def_readonly("stiffness_n_per_m", &bisa::LateralResult::stiffness_n_per_m)
      .def_readonly("evaluation", &bisa::LateralResult::evaluation)
      .def_readonly("a_bending", &bisa::LateralResult::a_bending)
      .def_readonly("a_torsion", &bisa::LateralResult::a_torsion);

  py::class_<bisa::WorkingCondition>(m, "WorkingCondition")
      .def_readonly("satisfied", &bisa::WorkingCondition::satisfied)
      .def_readonly("margin_nm", &bisa::WorkingCondition::margin_nm);

  py::class_<bisa::SweepGrid>(m, "SweepGrid")
      .def_property_readonly("alphas", &bisa::SweepGrid::alphas)
      .def_property_readonly("lambdas", &bisa::SweepGrid::lambdas)
      .def_property_readonly("values", &bisa::SweepGrid::values)
      .def("value", &bisa::SweepGrid::value, py::arg("alpha_idx"), py::arg("lambda_idx"));

  py::class_<bisa::AspectRatioCandidate>(m, "AspectRatioCandidate")
      .def_readonly("aspect_ratio", &bisa::AspectRatioCandidate::aspect_ratio)
      .def_readonly("feasible", &bisa::AspectRatioCandidate::feasible)
      .def_readonly("monotone", &bisa::AspectRatioCandidate::monotone)
      .def_readonly("reason", &bisa::AspectRatioCandidate::reason);

  py::class_<bisa::AspectRatioRecommendation>(m, "AspectRatioRecommendation")
      .def_readonly("aspect_ratio", &bisa::AspectRatioRecommendation::aspect_ratio)
      .def_readonly("candidates", &bisa::AspectRatioRecommendation::candidates);

  m.def("influence_bending", &bisa::influence_bending, py::arg("alpha_rad"));
  m.def("influence_torsion", &bisa::influence_torsion, py::arg("alpha_rad"));
  m.def("evaluation_function", &bisa::evaluation_function, py::arg("alpha_rad"),
        py::arg("poisson_ratio"), py::arg("aspect_ratio"));
  m.def("lateral_stiffness", &bisa::lateral_stiffness, py::arg("model"),
        py::arg("alpha_rad"));
  m.def("lateral_stiffness_by_quadrature", &bisa::lateral_stiffness_by_quadrature,
        py::arg("model"), py::arg("alpha_rad"), py::arg("panels"));
  m.def("working_condition", &bisa::working_condition, py::arg("model"), py::arg("load"));
  m.def(
      "sweep_evaluation",
      [](const std::vector<double>& alphas_rad, const std::vector<double>& lambdas,
         double poisson_ratio, int threads) {
        return bisa::sweep_evaluation(alphas_rad, lambdas, poisson_ratio, threads);
      },
      py::arg("alphas_rad"), py::arg("lambdas"), py::arg("poisson_ratio"),
      py::arg("threads") = 0);
  m.def(
      "recommend_aspect_ratio",
      [](const std::vector<double>& candidates, double poisson_ratio, double width_m,
         double width_limit_m, double alpha_lo_deg, double alpha_hi_deg) {
        return bisa::recommend_aspect_ratio(candidates, poisson_ratio, width_m,
                                            width_limit_m, alpha_lo_deg, alpha_hi_deg);
      },
      py::arg("candidates"), py::arg("poisson_ratio"), py::arg("width_m"),
      py::arg("width_limit_m"), py::arg("alpha_lo_deg") = 0.0,
      py::arg("alpha_hi_deg") = 180.0);

  // Bending stiffness -------------------------------------------------------
  py::class_<bisa::MomentBalance>(m, "MomentBalance")
      .def_readonly("pressure_moment_nm", &bisa::MomentBalance::pressure_moment_nm)
      .def_readonly("contact_moment_nm", &bisa::MomentBalance::contact_moment_nm)
      .def_readonly("restoring_moment_nm", &bisa::MomentBalance::restoring_moment_nm)
      .def_readonly("external_moment_nm", &bisa::MomentBalance::external_moment_nm)
      .def_readonly("chamber_count", &bisa::MomentBalance::chamber_count)
      .def_readonly("residual_nm", &bisa::MomentBalance::residual_nm)
      .def_readonly("pre_contact", &bisa::MomentBalance::pre_contact);

  py::enum_<bisa::Regime>(m, "Regime")
      .value("TENDON_TAUT", bisa::Regime::kTendonTaut)
      .value("QUASISTATIC_DEFLECTION", bisa::Regime::kQuasistaticDeflection)
      .value("OVERLOAD", bisa::Regime::kOverload);

  py::class_<bisa::StiffnessGain>(m, "StiffnessGain")
      .def_readonly("gain", &bisa::StiffnessGain::gain)
      .def_readonly("base_withstand_nm", &bisa::StiffnessGain::base_withstand_nm)
      .def_readonly("raised_withstand_nm", &bisa::StiffnessGain::raised_withstand_nm)
      .def_readonly("calibrated", &bisa::StiffnessGain::calibrated);

  m.def("pressure_moment", &bisa::pressure_moment, py::arg("stack"), py::arg("pressure_pa"));
  m.def("contact_moment", &bisa::contact_moment, py::arg("stack"), py::arg("pressure_pa"));
  m.def("moment_balance", &bisa::moment_balance, py::arg("stack"), py::arg("pressure_pa"));
  m.def("withstand_moment", &bisa::withstand_moment, py::arg("stack"),
        py::arg("pressure_pa"));
  m.def("classify_regime", &bisa::classify_regime, py::arg("external_nm"), py::arg("stack"),
        py::arg("pressure_pa"));
  m.def("stiffness_gain", &bisa::stiffness_gain, py::arg("base_pressure_pa"),
        py::arg("pressure_increment_pa"), py::arg("stack"));

  // Kinematics ---------------------------------------------------------------
  py::class_<bisa::Point2>(m, "Point2")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &bisa::Point2::x)
      .def_readonly("y", &bisa::Point2::y);

  py::class_<bisa::Pose2D>(m, "Pose2D")
      .def_readonly("points", &bisa::Pose2D::points)
      .def_readonly("segment_angles", &bisa::Pose2D::segment_angles);

  py::class_<bisa::CirclePatch>(m, "CirclePatch")
      .def_readonly("center", &bisa::CirclePatch::center)
      .def_readonly("radius", &bisa::CirclePatch::radius);

  py::class_<bisa::CouplingError>(m, "CouplingError")
      .def_readonly("max_pairwise_m", &bisa::CouplingError::max_pairwise_m)
      .def_readonly("distal_circle", &bisa::CouplingError::distal_circle);

  m.def("chord_corrected_length", &bisa::chord_corrected_length, py::arg("pose"));
  m.def("arc_pose", &bisa::arc_pose, py::arg("total_length_m"), py::arg("alpha_rad"),
        py::arg("segment_count"));
  m.def(
      "piecewise_pose",
      [](const std::vector<double>& lengths_m, const std::vector<double>& angles_rad) {
        return bisa::piecewise_pose(lengths_m, angles_rad);
      },
      py::arg("lengths_m"), py::arg("angles_rad"));
  m.def(
      "min_enclosing_circle",
      [](const std::vector<bisa::Point2>& points) {
        return bisa::min_enclosing_circle(points);
      },
      py::arg("points"));
  m.def(
      "coupling_error",
      [](const std::vector<bisa::Pose2D>& poses) { return bisa::coupling_error(poses); },
      py::arg("poses_by_load"));

  // Data fitting ---------------------------------------------------------------
  py::class_<bisa::SeriesMeta>(m, "SeriesMeta")
      .def(py::init([](double bending_angle_deg, double pulling_mass_kg,
                       double pressure_step_kpa, const std::string& label) {
             return bisa::SeriesMeta{bending_angle_deg, pulling_mass_kg,
                                     pressure_step_kpa, label};
           }),
           py::arg("bending_angle_deg") = 0.0, py::arg("pulling_mass_kg") = 0.0,
           py::arg("pressure_step_kpa") = 0.0, py::arg("label") = std::string())
      .def_readwrite("bending_angle_deg", &bisa::SeriesMeta::bending_angle_deg)
      .def_readwrite("pulling_mass_kg", &bisa::SeriesMeta::pulling_mass_kg)
      .def_readwrite("pressure_step_kpa", &bisa::SeriesMeta::pressure_step_kpa)
      .def_readwrite("label", &bisa::SeriesMeta::label);

  py::class_<bisa::ForceDispSeries>(m, "ForceDispSeries")
      .def(py::init<std::vector<double>, std::vector<double>, bisa::SeriesMeta>(),
           py::arg("displacement_m"), py::arg("force_n"),
           py::arg("meta") = bisa::SeriesMeta{})
      .def_property_readonly("displacement", &bisa::ForceDispSeries::displacement)
      .def_property_readonly("force", &bisa::ForceDispSeries::force)
      .def_property_readonly("meta", &bisa::ForceDispSeries::meta);

  py::class_<bisa::SlopeFit>(m, "SlopeFit")
      .def_readonly("stiffness_n_per_m", &bisa::SlopeFit::stiffness_n_per_m)
      .def_readonly("intercept_n", &bisa::SlopeFit::intercept_n)
      .def_readonly("r_squared", &bisa::SlopeFit::r_squared);

  py::class_<bisa::BlsCalibration>(m, "BlsCalibration")
      .def_readonly("scale_n_per_m", &bisa::BlsCalibration::scale_n_per_m)
      .def_readonly("residual_sum_squares", &bisa::BlsCalibration::residual_sum_squares)
      .def_readonly("sample_count", &bisa::BlsCalibration::sample_count);

  py::class_<bisa::ChamberCalibration>(m, "ChamberCalibration")
      .def_readonly("pressure_coefficient_m3",
                    &bisa::ChamberCalibration::pressure_coefficient_m3)
      .def_readonly("restoring_moment_nm", &bisa::ChamberCalibration::restoring_moment_nm)
      .def_readonly("residual_sum_squares",
                    &bisa::ChamberCalibration::residual_sum_squares)
      .def_readonly("unphysical", &bisa::ChamberCalibration::unphysical)
      .def_readonly("chamber_count", &bisa::ChamberCalibration::chamber_count)
      .def_readonly("sample_count", &bisa::ChamberCalibration::sample_count);

  m.def("fit_slope", &bisa::fit_slope, py::arg("series"));
  m.def(
      "calibrate_bls",
      [](const std::vector<std::pair<double, double>>& alpha_stiffness,
         double poisson_ratio, double aspect_ratio) {
        return bisa::calibrate_bls(alpha_stiffness, poisson_ratio, aspect_ratio);
      },
      py::arg("alpha_stiffness"), py::arg("poisson_ratio"), py::arg("aspect_ratio"));
  m.def(
      "calibrate_chambers",
      [](const std::vector<std::pair<double, double>>& pressure_withstand,
         int chamber_count) {
        return bisa::calibrate_chambers(pressure_withstand, chamber_count);
      },
      py::arg("pressure_withstand"), py::arg("chamber_count"));
  m.def("apply_chamber_calibration", &bisa::apply_chamber_calibration,
        py::arg("geometry"), py::arg("calibration"));

  py::class_<bisa::AnglePressureSample>(m, "AnglePressureSample")
      .def(py::init([](double pressure_kpa, double angle_deg, const std::string& branch) {
             return bisa::AnglePressureSample{pressure_kpa, angle_deg, branch};
           }),
           py::arg("pressure_kpa"), py::arg("angle_deg"),
           py::arg("branch") = std::string())
      .def_readwrite("pressure_kpa", &bisa::AnglePressureSample::pressure_kpa)
      .def_readwrite("angle_deg", &bisa::AnglePressureSample::angle_deg)
      .def_readwrite("branch", &bisa::AnglePressureSample::branch);

  py::class_<bisa::PolyFit>(m, "PolyFit")
      .def_readonly("branch", &bisa::PolyFit::branch)
      .def_readonly("coefficients", &bisa::PolyFit::coefficients)
      .def_readonly("residual_sum_squares", &bisa::PolyFit::residual_sum_squares)
      .def_readonly("sample_count", &bisa::PolyFit::sample_count);

  m.def(
      "fit_angle_pressure",
      [](const std::vector<bisa::AnglePressureSample>& samples, int degree) {
        return bisa::fit_angle_pressure(samples, degree);
      },
      py::arg("samples"), py::arg("degree"));

  py::class_<bisa::StiffnessRow>(m, "StiffnessRow")
      .def(py::init([](const bisa::SeriesMeta& meta, double stiffness_n_per_m,
                       double r_squared) {
             return bisa::StiffnessRow{meta, stiffness_n_per_m, r_squared};
           }),
           py::arg("meta"), py::arg("stiffness_n_per_m"), py::arg("r_squared"))
      .def_readwrite("meta", &bisa::StiffnessRow::meta)
      .def_readwrite("stiffness_n_per_m", &bisa::StiffnessRow::stiffness_n_per_m)
      .def_readwrite("r_squared", &bisa::StiffnessRow::r_squared);

  py::class_<bisa::StiffnessTable>(m, "StiffnessTable")
      .def(py::init([](const std::vector<bisa::StiffnessRow>& rows) {
             return bisa::StiffnessTable{rows};
           }),
           py::arg("rows") = std::vector<bisa::StiffnessRow>{})
      .def_readwrite("rows", &bisa::StiffnessTable::rows);

  py::class_<bisa::RatioCurve>(m, "RatioCurve")
      .def_readonly("label", &bisa::RatioCurve::label)
      .def_readonly("angles_deg", &bisa::RatioCurve::angles_deg)
      .def_readonly("ratios", &bisa::RatioCurve::ratios);

  m.def("ratio_curves", &bisa::ratio_curves, py::arg("table"));

  // Gripper ---------------------------------------------------------------------
  py::class_<bisa::Finger>(m, "Finger")
      .def(py::init([](const bisa::BlsModel& bls, const bisa::ChamberStack& chambers) {
             return bisa::Finger{bls, chambers};
           }),
           py::arg("bls"), py::arg("chambers"))
      .def_readonly("bls", &bisa::Finger::bls)
      .def_readonly("chambers", &bisa::Finger::chambers);

  py::class_<bisa::GripperConfig>(m, "GripperConfig")
      .def(py::init<std::vector<bisa::Finger>, double, double, double, double>(),
           py::arg("fingers"), py::arg("mount_tilt_deg"), py::arg("friction_coefficient"),
           py::arg("allowable_deflection_m"), py::arg("tendon_limit_n"))
      .def_property_readonly("finger_count", &bisa::GripperConfig::finger_count)
      .def_property_readonly("mount_tilt_deg", &bisa::GripperConfig::mount_tilt_deg)
      .def_property_readonly("friction_coefficient",
                             &bisa::GripperConfig::friction_coefficient)
      .def_property_readonly("allowable_deflection",
                             &bisa::GripperConfig::allowable_deflection)
      .def_property_readonly("tendon_limit", &bisa::GripperConfig::tendon_limit);

  py::enum_<bisa::GraspShape>(m, "GraspShape")
      .value("CYLINDRICAL", bisa::GraspShape::kCylindrical)
      .value("REDUCED", bisa::GraspShape::kReduced);

  py::class_<bisa::LiftCapacity>(m, "LiftCapacity")
      .def_readonly("force_n", &bisa::LiftCapacity::force_n)
      .def_readonly("per_finger_n", &bisa::LiftCapacity::per_finger_n)
      .def_readonly("working_ok", &bisa::LiftCapacity::working_ok);

  py::class_<bisa::NormalGraspReport>(m, "NormalGraspReport")
      .def_readonly("per_finger", &bisa::NormalGraspReport::per_finger)
      .def_readonly("aggregate_gain", &bisa::NormalGraspReport::aggregate_gain)
      .def_readonly("calibrated", &bisa::NormalGraspReport::calibrated);

  m.def("lift_capacity", &bisa::lift_capacity, py::arg("config"), py::arg("alpha_rad"));
  m.def("inverse_grasp_capacity", &bisa::inverse_grasp_capacity, py::arg("config"),
        py::arg("shape"), py::arg("normal_force_per_finger_n"));
  m.def("normal_grasp_report", &bisa::normal_grasp_report, py::arg("config"),
        py::arg("base_pressure_pa"), py::arg("pressure_increment_pa"));
}
