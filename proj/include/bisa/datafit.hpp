#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bisa/core.hpp"

namespace bisa {

// Test-condition labels carried alongside a measured series. pulling_mass
// is the tendon load (converted to force at 9.81 m/s^2 where needed);
// pressure_step is the chamber increment applied during the test.
struct SeriesMeta {
  double bending_angle_deg = 0.0;
  double pulling_mass_kg = 0.0;
  double pressure_step_kpa = 0.0;
  std::string label;
};

// One force–displacement sweep: strictly increasing displacements with the
// force read at each, plus the condition it was measured under.
class ForceDispSeries {
 public:
  ForceDispSeries(std::vector<double> displacement_m, std::vector<double> force_n,
                  SeriesMeta meta);

  const std::vector<double>& displacement() const { return displacement_; }
  const std::vector<double>& force() const { return force_; }
  const SeriesMeta& meta() const { return meta_; }

 private:
  std::vector<double> displacement_;
  std::vector<double> force_;
  SeriesMeta meta_;
};

struct SlopeFit {
  double stiffness_n_per_m;  // least-squares slope of force vs displacement
  double intercept_n;        // free intercept (absorbs gauge preload)
  double r_squared;
};

// Ordinary least squares with a free intercept. Throws on zero
// displacement variance (cannot happen for a valid series, kept as a
// guard for direct callers).
SlopeFit fit_slope(const ForceDispSeries& series);

struct StiffnessRow {
  SeriesMeta meta;
  double stiffness_n_per_m;
  double r_squared;
};

struct StiffnessTable {
  std::vector<StiffnessRow> rows;
};

// Stiffness relative to the same group's straight-pose (0 deg) value.
struct RatioCurve {
  std::string label;
  std::vector<double> angles_deg;  // ascending
  std::vector<double> ratios;      // entry at 0 deg is exactly 1
};

// Groups table rows by label and divides each stiffness by the group's
// 0-degree baseline. Throws a domain error naming the group when a
// baseline is missing or zero. Curves are ordered by label.
std::vector<RatioCurve> ratio_curves(const StiffnessTable& table);

struct BlsCalibration {
  double scale_n_per_m;  // EI/C^3 such that k = 4 * scale * F(alpha)
  double residual_sum_squares;
  int sample_count;
};

// One-parameter least squares of measured (alpha, lateral stiffness)
// pairs against k = 4*s*F(alpha): s = sum(k_i F_i) / (4 sum F_i^2).
BlsCalibration calibrate_bls(std::span<const std::pair<double, double>> alpha_stiffness,
                             double poisson_ratio, double aspect_ratio);

struct ChamberCalibration {
  double pressure_coefficient_m3;  // c in M = c*P - d
  double restoring_moment_nm;      // M_w = d / (2(n-1))
  double residual_sum_squares;
  bool unphysical;  // fitted restoring moment came out negative
  int chamber_count;
  int sample_count;
};

// Linear least squares of withstand moment against pressure. Requires at
// least two distinct pressures. A negative fitted restoring moment is
// reported as-is with the unphysical flag set.
ChamberCalibration calibrate_chambers(
    std::span<const std::pair<double, double>> pressure_withstand, int chamber_count);

// Rebuilds a stack from measured behaviour: keeps the geometry and tendon
// limit of `geometry`, derives the contact first moment from the fitted
// pressure coefficient (c = 8(n-1)ab^2 + (n-1)S_contact) and replaces the
// restoring moment. The result carries calibrated() == true.
ChamberStack apply_chamber_calibration(const ChamberStack& geometry,
                                       const ChamberCalibration& calibration);

struct AnglePressureSample {
  double pressure_kpa;
  double angle_deg;
  std::string branch;  // e.g. "inflation"/"deflation"; empty means unlabeled
};

struct PolyFit {
  std::string branch;
  std::vector<double> coefficients;  // ascending powers of pressure in kPa
  double residual_sum_squares;
  int sample_count;
};

// Per-branch least-squares polynomial angle(pressure), degree 1..4.
// Unlabeled samples form the "all" branch; branches are fit independently
// and returned in lexicographic order. Underdetermined branches (fewer
// than degree+1 samples, or rank-deficient pressures) are an error.
std::vector<PolyFit> fit_angle_pressure(std::span<const AnglePressureSample> samples,
                                        int degree);

}  // namespace bisa
