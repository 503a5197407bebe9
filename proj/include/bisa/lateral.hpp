#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bisa/core.hpp"

namespace bisa {

// Closed-form lateral stiffness of a constant-curvature cantilever with a
// tip load perpendicular to the bending plane, plus its intermediate
// dimensionless factors. stiffness = (4*E*I/C^3) * evaluation.
struct LateralResult {
  double stiffness_n_per_m;
  double evaluation;  // F(alpha), dimensionless
  double a_bending;   // bending influence of the tip load
  double a_torsion;   // torsion influence of the tip load
};

// Bending influence A_b(alpha) = 2/alpha^2 - sin(2*alpha)/alpha^3.
// Valid for alpha in (0, pi]; tends to 4/3 as alpha -> 0.
double influence_bending(double alpha_rad);

// Torsion influence A_t(alpha) = 6/alpha^2 + sin(2*alpha)/alpha^3
//                                - 8*sin(alpha)/alpha^3.
// Valid for alpha in (0, pi]; tends to 0 (as alpha^2/5) for alpha -> 0.
double influence_torsion(double alpha_rad);

// F(alpha) = 1 / [A_b + 2(1+nu)*A_t/(1+lambda^2)]. Dimensionless factor
// mapping bending angle, material and section shape to lateral stiffness.
double evaluation_function(double alpha_rad, double poisson_ratio, double aspect_ratio);

LateralResult lateral_stiffness(const BlsModel& model, double alpha_rad);

// Independent check of the closed form: composite-Simpson integration of
// the bending and torsion strain-energy integrands over the arc, with the
// tip-load derivative taken analytically. Returns stiffness in N/m.
// panels must be even and at least 16.
double lateral_stiffness_by_quadrature(const BlsModel& model, double alpha_rad, int panels);

// Tendon-pretension condition for the segment chain to act as a
// continuous beam: F_t * h >= F_ext * L. margin = F_t*h - F_ext*L.
struct WorkingCondition {
  bool satisfied;
  double margin_nm;
};

WorkingCondition working_condition(const BlsModel& model, const LoadCase& load);

// F(alpha, lambda) sampled on an (alphas x lambdas) grid, row-major by alpha.
class SweepGrid {
 public:
  SweepGrid(std::vector<double> alphas_rad, std::vector<double> lambdas,
            std::vector<double> values);

  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t alpha_idx, std::size_t lambda_idx) const {
    return values_[alpha_idx * lambdas_.size() + lambda_idx];
  }

 private:
  std::vector<double> alphas_;
  std::vector<double> lambdas_;
  std::vector<double> values_;
};

// Evaluates F over the grid. threads = 0 picks a count automatically
// (BISA_MECH_THREADS, when set, is used verbatim as the worker count);
// results do not depend on the thread count.
SweepGrid sweep_evaluation(std::span<const double> alphas_rad,
                           std::span<const double> lambdas, double poisson_ratio,
                           int threads = 0);

struct AspectRatioCandidate {
  double aspect_ratio;
  bool feasible;
  bool monotone;
  std::string reason;  // empty when the candidate passes
};

struct AspectRatioRecommendation {
  std::optional<double> aspect_ratio;
  std::vector<AspectRatioCandidate> candidates;
};

// Picks the smallest candidate aspect ratio whose section (width b, height
// lambda*b) fits within width_limit in both dimensions and whose F(alpha)
// does not decrease over the angle range, sampled at whole degrees with
// lo_deg < alpha <= hi_deg. "Does not decrease" tolerates a relative
// drawdown of 1e-3 from the running maximum, below any physically
// meaningful stiffness loss but above grid-level wiggle of near-flat
// curves. Returns an empty recommendation when no candidate qualifies.
AspectRatioRecommendation recommend_aspect_ratio(std::span<const double> candidates,
                                                 double poisson_ratio, double width_m,
                                                 double width_limit_m, double alpha_lo_deg,
                                                 double alpha_hi_deg);

// Relative drawdown tolerated by the monotonicity screen above.
inline constexpr double kMonotoneDrawdownTolerance = 1e-3;

// Number of threads sweep_evaluation uses for `threads` <= 0:
// BISA_MECH_THREADS when set, hardware concurrency otherwise, never more
// than there are work items.
int resolve_thread_count(int requested, std::size_t work_items);

}  // namespace bisa
