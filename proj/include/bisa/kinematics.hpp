#pragma once

#include <span>
#include <utility>
#include <vector>

namespace bisa {

struct Point2 {
  double x;
  double y;
};

// Polyline sampled along one or more constant-curvature segments, base at
// the origin with the base tangent along +x. points has one more entry
// than segment_angles; segment_angles holds each segment's tangent-angle
// change (signed, radians).
struct Pose2D {
  std::vector<Point2> points;
  std::vector<double> segment_angles;
};

// Recovers the arc length represented by a pose from its chords: each
// chord c subtending angle theta came from an arc of length
// c * (theta/2) / sin(theta/2). Exact for poses built by this module.
double chord_corrected_length(const Pose2D& pose);

// Single constant-curvature arc of the given length, bent by alpha,
// sampled as segment_count equal sub-arcs. alpha = 0 yields a straight
// chain along +x.
Pose2D arc_pose(double total_length_m, double alpha_rad, int segment_count);

// Chains per-segment arcs with tangent continuity: segment i has arc
// length lengths[i] and tangent-angle change angles[i] (0 = straight).
Pose2D piecewise_pose(std::span<const double> lengths_m, std::span<const double> angles_rad);

struct CirclePatch {
  Point2 center;
  double radius;
};

// Exact minimum enclosing circle (randomized incremental construction).
// The input is canonicalized before the randomized pass, so the result is
// bitwise independent of input point order.
CirclePatch min_enclosing_circle(std::span<const Point2> points);

// Spread of the distal (tip) points across load cases: the maximum
// pairwise distance and the minimum circle covering all tips. The circle
// center doubles as the average tip position.
struct CouplingError {
  double max_pairwise_m;
  CirclePatch distal_circle;
};

CouplingError coupling_error(std::span<const Pose2D> poses_by_load);

}  // namespace bisa
