#pragma once

#include <aniso/vec2.hpp>

#include <span>

namespace aniso {

struct SegmentHit {
  enum class Kind { none, point, overlap };
  Kind kind = Kind::none;
  // For point hits: parameters of the hit on each segment. For overlaps: the
  // overlap as a parameter interval [ta, ta_end] on the first segment.
  double ta = 0.0;
  double tb = 0.0;
  double ta_end = 0.0;
  Vec2 point;
};

/// Intersection of closed segments [a0, a1] and [b0, b1] with coincidence
/// tolerance eps (scene units). Endpoint touches are snapped to the endpoint.
SegmentHit intersect_segments(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double eps);

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b);

/// Parameter of the orthogonal projection of p onto the line through a, b.
double project_param(Vec2 p, Vec2 a, Vec2 b);

/// Signed winding number of a closed polygon around p (p not on the boundary).
int winding_number(std::span<const Vec2> polygon, Vec2 p);

double signed_area(std::span<const Vec2> polygon);

}  // namespace aniso
