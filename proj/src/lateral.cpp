#include "bisa/lateral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bisa/errors.hpp"
#include "bisa/units.hpp"

namespace bisa {

namespace {

void require_angle_in_domain(double alpha_rad, const char* name) {
  detail::require_finite(alpha_rad, name);
  if (alpha_rad <= 0.0 || alpha_rad > std::numbers::pi) {
    throw DomainError(std::string(name) + " must lie in (0, pi]");
  }
}

// x - sin(x) without cancellation. For small x the direct difference loses
// up to half the mantissa; the alternating series converges in a handful of
// terms and keeps full precision.
double x_minus_sin(double x) {
  if (std::abs(x) >= 1.0) {
    return x - std::sin(x);
  }
  // sum_{k>=1} (-1)^(k+1) x^(2k+1) / (2k+1)!
  double term = x * x * x / 6.0;  // k = 1
  double sum = term;
  const double x2 = x * x;
  for (int k = 2; k <= 12; ++k) {
    term *= -x2 / static_cast<double>((2 * k) * (2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

// 6*alpha + sin(2*alpha) - 8*sin(alpha) without cancellation. The three
// terms cancel to O(alpha^5), so the direct form is unusable for small
// angles; expanding the sines gives
//   sum_{k>=2} (-1)^k (2^(2k+1) - 8) alpha^(2k+1) / (2k+1)!
double torsion_numerator(double alpha) {
  if (std::abs(alpha) >= 0.9) {
    return 6.0 * alpha + std::sin(2.0 * alpha) - 8.0 * std::sin(alpha);
  }
  const double a2 = alpha * alpha;
  double power = alpha * a2 * a2;   // alpha^5
  double factorial = 120.0;         // 5!
  double sign = 1.0;                // (-1)^k at k = 2
  double sum = 0.0;
  for (int k = 2; k <= 14; ++k) {
    const double coeff = std::ldexp(2.0, 2 * k) - 8.0;  // 2^(2k+1) - 8
    const double term = sign * coeff * power / factorial;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 2) {
      break;
    }
    power *= a2;
    factorial *= static_cast<double>((2 * k + 2) * (2 * k + 3));
    sign = -sign;
  }
  return sum;
}

}  // namespace

double influence_bending(double alpha_rad) {
  require_angle_in_domain(alpha_rad, "alpha");
  // 2/a^2 - sin(2a)/a^3 = (2a - sin(2a)) / a^3
  const double a3 = alpha_rad * alpha_rad * alpha_rad;
  return x_minus_sin(2.0 * alpha_rad) / a3;
}

double influence_torsion(double alpha_rad) {
  require_angle_in_domain(alpha_rad, "alpha");
  const double a3 = alpha_rad * alpha_rad * alpha_rad;
  return torsion_numerator(alpha_rad) / a3;
}

double evaluation_function(double alpha_rad, double poisson_ratio, double aspect_ratio) {
  detail::require_finite(poisson_ratio, "poisson_ratio");
  detail::require_positive(aspect_ratio, "aspect_ratio");
  if (poisson_ratio < 0.0 || poisson_ratio >= 0.5) {
    throw DomainError("poisson_ratio must lie in [0, 0.5)");
  }
  const double a_b = influence_bending(alpha_rad);
  const double a_t = influence_torsion(alpha_rad);
  const double lambda2 = aspect_ratio * aspect_ratio;
  return 1.0 / (a_b + 2.0 * (1.0 + poisson_ratio) * a_t / (1.0 + lambda2));
}

LateralResult lateral_stiffness(const BlsModel& model, double alpha_rad) {
  const double a_b = influence_bending(alpha_rad);
  const double a_t = influence_torsion(alpha_rad);
  const Material& mat = model.material();
  const RectSection& sec = model.section();
  const double lambda2 = sec.aspect_ratio() * sec.aspect_ratio();
  const double f =
      1.0 / (a_b + 2.0 * (1.0 + mat.poisson_ratio()) * a_t / (1.0 + lambda2));
  const double c = model.arc_length();
  const double k = 4.0 * mat.young_modulus() * sec.bending_inertia() / (c * c * c) * f;
  return LateralResult{k, f, a_b, a_t};
}

double lateral_stiffness_by_quadrature(const BlsModel& model, double alpha_rad,
                                       int panels) {
  require_angle_in_domain(alpha_rad, "alpha");
  if (panels < 16 || panels % 2 != 0) {
    throw DomainError("panels must be even and at least 16");
  }
  const Material& mat = model.material();
  const RectSection& sec = model.section();
  const double radius = model.arc_length() / alpha_rad;
  const double ei = mat.young_modulus() * sec.bending_inertia();
  const double gip = mat.shear_modulus() * sec.torsion_inertia();

  // Tip load F normal to the arc plane. At arc position phi (measured from
  // the clamped end) the load arm to the tip spans the angle alpha - phi,
  // giving bending moment F*R*sin(alpha - phi) and torsion moment
  // F*R*(1 - cos(alpha - phi)). Unit-load compliance:
  //   delta/F = R^3 [ integral sin^2(a-phi)/EI + integral (1-cos(a-phi))^2/GIp ]
  auto integrand = [&](double phi) {
    const double s = std::sin(alpha_rad - phi);
    const double c = 1.0 - std::cos(alpha_rad - phi);
    return s * s / ei + c * c / gip;
  };

  const double h = alpha_rad / static_cast<double>(panels);
  double sum = integrand(0.0) + integrand(alpha_rad);
  for (int i = 1; i < panels; ++i) {
    const double w = (i % 2 == 1) ? 4.0 : 2.0;
    sum += w * integrand(h * static_cast<double>(i));
  }
  const double integral = sum * h / 3.0;
  const double compliance = radius * radius * radius * integral;
  return 1.0 / compliance;
}

WorkingCondition working_condition(const BlsModel& model, const LoadCase& load) {
  const double hold = model.pretension() * model.structure_height();
  const double demand = load.external_force() * model.segment_length();
  return WorkingCondition{hold >= demand, hold - demand};
}

SweepGrid::SweepGrid(std::vector<double> alphas_rad, std::vector<double> lambdas,
                     std::vector<double> values)
    : alphas_(std::move(alphas_rad)),
      lambdas_(std::move(lambdas)),
      values_(std::move(values)) {
  if (values_.size() != alphas_.size() * lambdas_.size()) {
    throw DomainError("sweep values must have one entry per (alpha, lambda) cell");
  }
}

int resolve_thread_count(int requested, std::size_t work_items) {
  int count = requested;
  if (count <= 0) {
    // BISA_MECH_THREADS is authoritative when set: the sweep runs with
    // exactly that many workers (work permitting), so determinism can be
    // exercised with more threads than cores. Hardware concurrency is only
    // the fallback default.
    bool from_env = false;
    if (const char* env = std::getenv("BISA_MECH_THREADS")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) {
        count = static_cast<int>(std::min<long>(parsed, 256));
        from_env = true;
      }
    }
    if (!from_env) {
      count = static_cast<int>(std::thread::hardware_concurrency());
      if (count <= 0) {
        count = 1;
      }
    }
  }
  if (work_items > 0) {
    count = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(count), work_items));
  }
  return std::max(count, 1);
}

SweepGrid sweep_evaluation(std::span<const double> alphas_rad,
                           std::span<const double> lambdas, double poisson_ratio,
                           int threads) {
  if (alphas_rad.empty() || lambdas.empty()) {
    throw DomainError("sweep grid axes must be non-empty");
  }
  for (std::size_t i = 0; i + 1 < alphas_rad.size(); ++i) {
    if (!(alphas_rad[i] < alphas_rad[i + 1])) {
      throw DomainError("sweep angles must be strictly increasing");
    }
  }
  for (double alpha : alphas_rad) {
    require_angle_in_domain(alpha, "alpha");
  }
  for (double lambda : lambdas) {
    detail::require_positive(lambda, "aspect_ratio");
  }

  const std::size_t rows = alphas_rad.size();
  const std::size_t cols = lambdas.size();
  std::vector<double> values(rows * cols);

  // Each cell depends only on its own (alpha, lambda), so any partition of
  // the index space yields identical values; ordering is fixed by the
  // row-major layout, not by the schedule.
  auto fill_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t r = idx / cols;
      const std::size_t c = idx % cols;
      values[idx] = evaluation_function(alphas_rad[r], poisson_ratio, lambdas[c]);
    }
  };

  const std::size_t total = rows * cols;
  const int nthreads = resolve_thread_count(threads, total);
  if (nthreads <= 1) {
    fill_range(0, total);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(nthreads));
    const std::size_t chunk = (total + static_cast<std::size_t>(nthreads) - 1) /
                              static_cast<std::size_t>(nthreads);
    for (int t = 0; t < nthreads; ++t) {
      const std::size_t begin = static_cast<std::size_t>(t) * chunk;
      const std::size_t end = std::min(begin + chunk, total);
      if (begin >= end) {
        break;
      }
      workers.emplace_back(fill_range, begin, end);
    }
    for (std::thread& w : workers) {
      w.join();
    }
  }

  return SweepGrid(std::vector<double>(alphas_rad.begin(), alphas_rad.end()),
                   std::vector<double>(lambdas.begin(), lambdas.end()),
                   std::move(values));
}

AspectRatioRecommendation recommend_aspect_ratio(std::span<const double> candidates,
                                                 double poisson_ratio, double width_m,
                                                 double width_limit_m, double alpha_lo_deg,
                                                 double alpha_hi_deg) {
  if (candidates.empty()) {
    throw DomainError("candidate list must be non-empty");
  }
  detail::require_positive(width_m, "width");
  detail::require_positive(width_limit_m, "width_limit");
  detail::require_finite(alpha_lo_deg, "alpha_lo_deg");
  detail::require_finite(alpha_hi_deg, "alpha_hi_deg");
  if (!(alpha_lo_deg < alpha_hi_deg)) {
    throw DomainError("alpha range must satisfy lo < hi");
  }
  if (alpha_lo_deg < 0.0 || alpha_hi_deg > 180.0) {
    throw DomainError("alpha range must lie within [0, 180] degrees");
  }

  std::vector<double> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());

  AspectRatioRecommendation rec;
  rec.candidates.reserve(sorted.size());

  for (double lambda : sorted) {
    detail::require_positive(lambda, "aspect_ratio");
    AspectRatioCandidate entry{lambda, true, true, ""};

    if (width_m > width_limit_m || lambda * width_m > width_limit_m) {
      entry.feasible = false;
      entry.reason = "section exceeds the width limit";
    } else {
      // Whole-degree sampling over (lo, hi]; running-max drawdown screen.
      double running_max = 0.0;
      bool have_any = false;
      const int d_lo = static_cast<int>(std::floor(alpha_lo_deg)) + 1;
      const int d_hi = static_cast<int>(std::floor(alpha_hi_deg));
      for (int d = d_lo; d <= d_hi; ++d) {
        const double alpha = units::deg_to_rad(static_cast<double>(d));
        if (alpha <= 0.0 || alpha > std::numbers::pi) {
          continue;
        }
        const double f = evaluation_function(alpha, poisson_ratio, lambda);
        if (have_any && f < running_max * (1.0 - kMonotoneDrawdownTolerance)) {
          entry.monotone = false;
          entry.reason = "stiffness factor drops over the angle range";
          break;
        }
        running_max = std::max(running_max, f);
        have_any = true;
      }
      if (!have_any) {
        throw DomainError("alpha range contains no whole-degree samples");
      }
    }

    const bool passes = entry.feasible && entry.monotone;
    rec.candidates.push_back(std::move(entry));
    if (passes && !rec.aspect_ratio.has_value()) {
      rec.aspect_ratio = lambda;  // sorted ascending: first hit is smallest
    }
  }

  return rec;
}

}  // namespace bisa
