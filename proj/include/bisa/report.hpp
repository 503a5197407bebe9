#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisa/config.hpp"
#include "bisa/datafit.hpp"
#include "bisa/serialize.hpp"

namespace bisa {

// Everything cmd_report consumes after the fit stage.
struct ReportInputs {
  StiffnessTable table;
  BlsCalibration bls;
  ChamberCalibration chambers;
  std::optional<AnglePressureFitDoc> angle_pressure;
  std::vector<std::string> input_names;  // file names, sorted
};

// Combines calibrations, the stiffness table with its ratio curves, a
// sweep summary over the configured grid, and gripper capacity estimates
// into one ordered JSON document (stable key order, deterministic bytes).
// The gripper section uses the calibrated scale (lateral) and calibrated
// chamber stack (normal grasp); sweep_threads is forwarded to the grid
// evaluation and cannot change the emitted values.
nlohmann::ordered_json build_report(const RunConfig& config, const ReportInputs& inputs,
                                    int sweep_threads = 0);

}  // namespace bisa
