#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisa/csv.hpp"
#include "bisa/datafit.hpp"
#include "bisa/kinematics.hpp"
#include "bisa/lateral.hpp"

namespace bisa {

// CSV table builders. All angles cross this boundary in degrees, lengths
// in millimetres, stiffness in N/mm — matching the file schemas the CLI
// documents.

// Header: alpha_deg,a_bending,a_torsion
csv::Table influence_table(std::span<const double> alphas_deg);

// Header: alpha_deg,F_lambda_<v>,... one column per aspect ratio.
// Pass the original degree grid so the angle column prints the values the
// caller asked for; when empty, degrees are recomputed from the radians.
csv::Table evaluation_table(const SweepGrid& grid, std::span<const double> alphas_deg = {});

// Header: x_mm,y_mm
csv::Table pose_table(const Pose2D& pose);

// Header: label,bending_angle_deg,pulling_mass_kg,pressure_step_kPa,
//         stiffness_N_per_mm,r2
csv::Table stiffness_table_to_csv(const StiffnessTable& table);
StiffnessTable stiffness_table_from_csv(const csv::Table& table, const std::string& source);

// Series files: displacement_mm,force_N plus a JSON sidecar carrying the
// test condition.
csv::Table series_table(std::span<const double> displacement_mm,
                        std::span<const double> force_n);
ForceDispSeries series_from_csv(const csv::Table& table, const nlohmann::json& meta,
                                const std::string& source);
nlohmann::ordered_json series_meta_to_json(const SeriesMeta& meta);

// Calibration documents (display units at the boundary).
nlohmann::ordered_json bls_calibration_to_json(const BlsCalibration& calibration);
BlsCalibration bls_calibration_from_json(const nlohmann::json& document,
                                         const std::string& source);
nlohmann::ordered_json chamber_calibration_to_json(const ChamberCalibration& calibration);
ChamberCalibration chamber_calibration_from_json(const nlohmann::json& document,
                                                 const std::string& source);
nlohmann::ordered_json angle_pressure_fit_to_json(int degree,
                                                  std::span<const PolyFit> fits);

struct AnglePressureFitDoc {
  int degree;
  std::vector<PolyFit> fits;
};
AnglePressureFitDoc angle_pressure_fit_from_json(const nlohmann::json& document,
                                                 const std::string& source);

// Chamber measurement files: pressure_kPa,withstand_Nmm.
std::vector<std::pair<double, double>> chamber_samples_from_csv(const csv::Table& table,
                                                                const std::string& source);

// Angle–pressure files: pressure_kPa,angle_deg,branch.
std::vector<AnglePressureSample> angle_pressure_from_csv(const csv::Table& table,
                                                         const std::string& source);

}  // namespace bisa
