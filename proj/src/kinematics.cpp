#include "bisa/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bisa/errors.hpp"

namespace bisa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin(x)/x, smooth through x = 0.
double sinc(double x) {
  if (std::abs(x) < 1e-8) {
    return 1.0 - x * x / 6.0;
  }
  return std::sin(x) / x;
}

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool circle_contains(const CirclePatch& c, const Point2& p) {
  return distance(c.center, p) <= c.radius + 1e-12;
}

CirclePatch diameter_circle(const Point2& a, const Point2& b) {
  return CirclePatch{{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}, distance(a, b) / 2.0};
}

CirclePatch circumcircle(const Point2& a, const Point2& b, const Point2& c) {
  // Translate a to the origin for accuracy.
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  if (std::abs(d) < 1e-30) {
    // Collinear: the widest pair's diameter circle covers all three.
    CirclePatch best = diameter_circle(a, b);
    for (const CirclePatch& cand : {diameter_circle(a, c), diameter_circle(b, c)}) {
      if (cand.radius > best.radius) {
        best = cand;
      }
    }
    return best;
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  return CirclePatch{{a.x + ux, a.y + uy}, std::hypot(ux, uy)};
}

}  // namespace

double chord_corrected_length(const Pose2D& pose) {
  if (pose.points.size() != pose.segment_angles.size() + 1) {
    throw DomainError("pose must have one more point than segment angles");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < pose.segment_angles.size(); ++i) {
    const double chord = distance(pose.points[i], pose.points[i + 1]);
    total += chord / sinc(pose.segment_angles[i] / 2.0);
  }
  return total;
}

Pose2D arc_pose(double total_length_m, double alpha_rad, int segment_count) {
  detail::require_positive(total_length_m, "total_length");
  detail::require_finite(alpha_rad, "alpha");
  if (alpha_rad < 0.0 || alpha_rad >= kTwoPi) {
    throw DomainError("alpha must lie in [0, 2*pi)");
  }
  if (segment_count < 1) {
    throw DomainError("segment_count must be at least 1");
  }

  Pose2D pose;
  pose.points.reserve(static_cast<std::size_t>(segment_count) + 1);
  pose.segment_angles.assign(static_cast<std::size_t>(segment_count),
                             alpha_rad / static_cast<double>(segment_count));
  if (alpha_rad == 0.0) {
    for (int i = 0; i <= segment_count; ++i) {
      pose.points.push_back(
          {total_length_m * static_cast<double>(i) / static_cast<double>(segment_count),
           0.0});
    }
    return pose;
  }

  const double radius = total_length_m / alpha_rad;
  for (int i = 0; i <= segment_count; ++i) {
    const double theta =
        alpha_rad * static_cast<double>(i) / static_cast<double>(segment_count);
    pose.points.push_back({radius * std::sin(theta), radius * (1.0 - std::cos(theta))});
  }
  return pose;
}

Pose2D piecewise_pose(std::span<const double> lengths_m,
                      std::span<const double> angles_rad) {
  if (lengths_m.size() != angles_rad.size()) {
    throw DomainError("lengths and angles must have equal length");
  }
  if (lengths_m.empty()) {
    throw DomainError("piecewise pose needs at least one segment");
  }
  for (double len : lengths_m) {
    detail::require_positive(len, "segment length");
  }
  for (double ang : angles_rad) {
    detail::require_finite(ang, "segment angle");
    if (std::abs(ang) >= kTwoPi) {
      throw DomainError("segment angle magnitude must be below 2*pi");
    }
  }

  Pose2D pose;
  pose.points.reserve(lengths_m.size() + 1);
  pose.segment_angles.assign(angles_rad.begin(), angles_rad.end());
  pose.points.push_back({0.0, 0.0});

  double tangent = 0.0;  // base tangent along +x
  for (std::size_t i = 0; i < lengths_m.size(); ++i) {
    const double theta = angles_rad[i];
    // Chord of an arc of length l turning by theta:
    //   l * sinc(theta/2), directed along the mid-tangent.
    const double chord = lengths_m[i] * sinc(theta / 2.0);
    const double mid = tangent + theta / 2.0;
    const Point2& prev = pose.points.back();
    pose.points.push_back({prev.x + chord * std::cos(mid), prev.y + chord * std::sin(mid)});
    tangent += theta;
  }
  return pose;
}

CirclePatch min_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) {
    throw DomainError("min_enclosing_circle needs at least one point");
  }
  for (const Point2& p : points) {
    detail::require_finite(p.x, "point.x");
    detail::require_finite(p.y, "point.y");
  }

  // Canonical order first (sort + dedupe), then a fixed-seed shuffle: the
  // randomized pass sees the same sequence no matter how the caller ordered
  // the input, so the output is bitwise permutation-invariant while keeping
  // the expected-linear behaviour of the incremental construction.
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  std::mt19937 rng(0x9e3779b9u);
  std::shuffle(pts.begin(), pts.end(), rng);

  CirclePatch circle{{pts[0].x, pts[0].y}, 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (circle_contains(circle, pts[i])) {
      continue;
    }
    circle = CirclePatch{{pts[i].x, pts[i].y}, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (circle_contains(circle, pts[j])) {
        continue;
      }
      circle = diameter_circle(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!circle_contains(circle, pts[k])) {
          circle = circumcircle(pts[i], pts[j], pts[k]);
        }
      }
    }
  }
  return circle;
}

CouplingError coupling_error(std::span<const Pose2D> poses_by_load) {
  if (poses_by_load.size() < 2) {
    throw DomainError("coupling_error needs at least two poses");
  }
  std::vector<Point2> tips;
  tips.reserve(poses_by_load.size());
  for (const Pose2D& pose : poses_by_load) {
    if (pose.points.empty()) {
      throw DomainError("pose has no points");
    }
    tips.push_back(pose.points.back());
  }

  double max_pairwise = 0.0;
  for (std::size_t i = 0; i < tips.size(); ++i) {
    for (std::size_t j = i + 1; j < tips.size(); ++j) {
      max_pairwise = std::max(max_pairwise, distance(tips[i], tips[j]));
    }
  }
  return CouplingError{max_pairwise, min_enclosing_circle(tips)};
}

}  // namespace bisa
