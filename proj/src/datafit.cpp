#include "bisa/datafit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "bisa/errors.hpp"
#include "bisa/lateral.hpp"

namespace bisa {

ForceDispSeries::ForceDispSeries(std::vector<double> displacement_m,
                                 std::vector<double> force_n, SeriesMeta meta)
    : displacement_(std::move(displacement_m)),
      force_(std::move(force_n)),
      meta_(std::move(meta)) {
  if (displacement_.size() != force_.size()) {
    throw DomainError("displacement and force must have equal length");
  }
  if (displacement_.size() < 2) {
    throw DomainError("series needs at least two samples");
  }
  for (double d : displacement_) {
    detail::require_finite(d, "displacement");
  }
  for (double f : force_) {
    detail::require_finite(f, "force");
  }
  for (std::size_t i = 0; i + 1 < displacement_.size(); ++i) {
    if (!(displacement_[i] < displacement_[i + 1])) {
      throw DomainError("displacements must be strictly increasing");
    }
  }
}

SlopeFit fit_slope(const ForceDispSeries& series) {
  const std::vector<double>& x = series.displacement();
  const std::vector<double>& y = series.force();
  const double n = static_cast<double>(x.size());

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) {
    throw DomainError("displacement variance is zero");
  }

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    ss_res += r * r;
  }
  // Constant force: any horizontal line is a perfect fit, so report 1
  // when the residual is zero rather than 0/0.
  double r2;
  if (syy > 0.0) {
    r2 = 1.0 - ss_res / syy;
    r2 = std::clamp(r2, 0.0, 1.0);
  } else {
    r2 = ss_res == 0.0 ? 1.0 : 0.0;
  }
  return SlopeFit{slope, intercept, r2};
}

std::vector<RatioCurve> ratio_curves(const StiffnessTable& table) {
  if (table.rows.empty()) {
    throw DomainError("stiffness table is empty");
  }

  std::map<std::string, std::vector<const StiffnessRow*>> groups;
  for (const StiffnessRow& row : table.rows) {
    detail::require_finite(row.stiffness_n_per_m, "stiffness");
    groups[row.meta.label].push_back(&row);
  }

  std::vector<RatioCurve> curves;
  curves.reserve(groups.size());
  for (auto& [label, rows] : groups) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const StiffnessRow* a, const StiffnessRow* b) {
                       return a->meta.bending_angle_deg < b->meta.bending_angle_deg;
                     });
    const StiffnessRow* baseline = nullptr;
    for (const StiffnessRow* row : rows) {
      if (row->meta.bending_angle_deg == 0.0) {
        baseline = row;
        break;
      }
    }
    if (baseline == nullptr) {
      throw DomainError("group '" + label + "' has no 0-degree baseline row");
    }
    if (baseline->stiffness_n_per_m == 0.0) {
      throw DomainError("group '" + label + "' has a zero 0-degree baseline");
    }

    RatioCurve curve;
    curve.label = label;
    curve.angles_deg.reserve(rows.size());
    curve.ratios.reserve(rows.size());
    for (const StiffnessRow* row : rows) {
      curve.angles_deg.push_back(row->meta.bending_angle_deg);
      curve.ratios.push_back(row == baseline
                                 ? 1.0
                                 : row->stiffness_n_per_m / baseline->stiffness_n_per_m);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

BlsCalibration calibrate_bls(std::span<const std::pair<double, double>> alpha_stiffness,
                             double poisson_ratio, double aspect_ratio) {
  if (alpha_stiffness.empty()) {
    throw DomainError("calibration needs at least one measurement");
  }
  double sum_kf = 0.0;
  double sum_ff = 0.0;
  std::vector<double> factors;
  factors.reserve(alpha_stiffness.size());
  for (const auto& [alpha, k] : alpha_stiffness) {
    detail::require_finite(k, "stiffness");
    const double f = evaluation_function(alpha, poisson_ratio, aspect_ratio);
    factors.push_back(f);
    sum_kf += k * f;
    sum_ff += f * f;
  }
  const double scale = sum_kf / (4.0 * sum_ff);

  double residual = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const double r = alpha_stiffness[i].second - 4.0 * scale * factors[i];
    residual += r * r;
  }
  return BlsCalibration{scale, residual, static_cast<int>(alpha_stiffness.size())};
}

ChamberCalibration calibrate_chambers(
    std::span<const std::pair<double, double>> pressure_withstand, int chamber_count) {
  if (chamber_count < 2) {
    throw DomainError("chamber_count must be at least 2");
  }
  if (pressure_withstand.size() < 2) {
    throw DomainError("calibration needs at least two measurements");
  }
  std::set<double> distinct;
  for (const auto& [p, m] : pressure_withstand) {
    detail::require_non_negative(p, "pressure");
    detail::require_finite(m, "withstand moment");
    distinct.insert(p);
  }
  if (distinct.size() < 2) {
    throw DomainError("calibration needs at least two distinct pressures");
  }

  const double n = static_cast<double>(pressure_withstand.size());
  double mean_p = 0.0, mean_m = 0.0;
  for (const auto& [p, m] : pressure_withstand) {
    mean_p += p;
    mean_m += m;
  }
  mean_p /= n;
  mean_m /= n;

  double spp = 0.0, spm = 0.0;
  for (const auto& [p, m] : pressure_withstand) {
    spp += (p - mean_p) * (p - mean_p);
    spm += (p - mean_p) * (m - mean_m);
  }
  const double c = spm / spp;                 // M = c*P - d
  const double d = c * mean_p - mean_m;       // -intercept
  const double pairs = 2.0 * static_cast<double>(chamber_count - 1);
  const double m_w = d / pairs;

  double residual = 0.0;
  for (const auto& [p, m] : pressure_withstand) {
    const double r = m - (c * p - d);
    residual += r * r;
  }
  return ChamberCalibration{c,       m_w, residual, m_w < 0.0, chamber_count,
                            static_cast<int>(pressure_withstand.size())};
}

ChamberStack apply_chamber_calibration(const ChamberStack& geometry,
                                       const ChamberCalibration& calibration) {
  if (geometry.chamber_count() != calibration.chamber_count) {
    throw DomainError("calibration chamber count does not match the stack");
  }
  if (calibration.unphysical) {
    throw DomainError("cannot apply an unphysical calibration (negative restoring moment)");
  }
  const double pairs = static_cast<double>(geometry.chamber_count() - 1);
  const double a = geometry.half_width();
  const double b = geometry.half_height();
  // c = 2(n-1)*4ab^2 + (n-1)*S_contact, solved for S_contact.
  const double s_contact = calibration.pressure_coefficient_m3 / pairs - 8.0 * a * b * b;
  if (s_contact < 0.0) {
    throw DomainError("fitted pressure coefficient is below the pressure-moment floor");
  }
  return ChamberStack(geometry.chamber_count(), a, b, s_contact,
                      calibration.restoring_moment_nm, geometry.tendon_critical_moment(),
                      /*calibrated=*/true);
}

std::vector<PolyFit> fit_angle_pressure(std::span<const AnglePressureSample> samples,
                                        int degree) {
  if (degree < 1 || degree > 4) {
    throw DomainError("degree must lie in [1, 4]");
  }
  if (samples.empty()) {
    throw DomainError("no samples");
  }

  std::map<std::string, std::vector<const AnglePressureSample*>> branches;
  for (const AnglePressureSample& s : samples) {
    detail::require_finite(s.pressure_kpa, "pressure");
    detail::require_finite(s.angle_deg, "angle");
    branches[s.branch.empty() ? "all" : s.branch].push_back(&s);
  }

  std::vector<PolyFit> fits;
  fits.reserve(branches.size());
  const int terms = degree + 1;
  for (const auto& [branch, rows] : branches) {
    if (static_cast<int>(rows.size()) < terms) {
      throw DomainError("branch '" + branch + "' is underdetermined for degree " +
                        std::to_string(degree));
    }

    // Normal equations in long double: the Vandermonde products span a
    // wide dynamic range at degree 4 and kPa scales.
    long double ata[5][5] = {};
    long double atb[5] = {};
    for (const AnglePressureSample* s : rows) {
      long double powers[5];
      powers[0] = 1.0L;
      for (int t = 1; t < terms; ++t) {
        powers[t] = powers[t - 1] * static_cast<long double>(s->pressure_kpa);
      }
      for (int r = 0; r < terms; ++r) {
        for (int col = 0; col < terms; ++col) {
          ata[r][col] += powers[r] * powers[col];
        }
        atb[r] += powers[r] * static_cast<long double>(s->angle_deg);
      }
    }

    // Gaussian elimination with partial pivoting.
    int perm[5] = {0, 1, 2, 3, 4};
    for (int col = 0; col < terms; ++col) {
      int pivot = col;
      for (int r = col + 1; r < terms; ++r) {
        if (std::abs(ata[perm[r]][col]) > std::abs(ata[perm[pivot]][col])) {
          pivot = r;
        }
      }
      std::swap(perm[col], perm[pivot]);
      const long double diag = ata[perm[col]][col];
      if (std::abs(static_cast<double>(diag)) < 1e-30) {
        throw DomainError("branch '" + branch + "' is underdetermined for degree " +
                          std::to_string(degree));
      }
      for (int r = col + 1; r < terms; ++r) {
        const long double factor = ata[perm[r]][col] / diag;
        for (int c = col; c < terms; ++c) {
          ata[perm[r]][c] -= factor * ata[perm[col]][c];
        }
        atb[perm[r]] -= factor * atb[perm[col]];
      }
    }
    long double solution[5] = {};
    for (int r = terms - 1; r >= 0; --r) {
      long double acc = atb[perm[r]];
      for (int c = r + 1; c < terms; ++c) {
        acc -= ata[perm[r]][c] * solution[c];
      }
      solution[r] = acc / ata[perm[r]][r];
    }

    PolyFit fit;
    fit.branch = branch;
    fit.coefficients.resize(static_cast<std::size_t>(terms));
    for (int t = 0; t < terms; ++t) {
      fit.coefficients[static_cast<std::size_t>(t)] = static_cast<double>(solution[t]);
    }
    double residual = 0.0;
    for (const AnglePressureSample* s : rows) {
      double value = 0.0;
      for (int t = terms - 1; t >= 0; --t) {
        value = value * s->pressure_kpa + fit.coefficients[static_cast<std::size_t>(t)];
      }
      const double r = s->angle_deg - value;
      residual += r * r;
    }
    fit.residual_sum_squares = residual;
    fit.sample_count = static_cast<int>(rows.size());
    fits.push_back(std::move(fit));
  }
  return fits;
}

}  // namespace bisa
