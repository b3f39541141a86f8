#include <aniso/predicates.hpp>

#include <algorithm>
#include <cmath>

namespace aniso {

double project_param(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double dd = dot(d, d);
  return dd == 0.0 ? 0.0 : dot(p - a, d) / dd;
}

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) {
  const double t = std::clamp(project_param(p, a, b), 0.0, 1.0);
  return distance(p, lerp(a, b, t));
}

SegmentHit intersect_segments(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double eps) {
  SegmentHit hit;
  const Vec2 da = a1 - a0;
  const Vec2 db = b1 - b0;
  const double la = norm(da);
  const double lb = norm(db);

  // Bounding boxes, inflated by eps.
  if (std::max(a0.x, a1.x) + eps < std::min(b0.x, b1.x) || std::max(b0.x, b1.x) + eps < std::min(a0.x, a1.x) ||
      std::max(a0.y, a1.y) + eps < std::min(b0.y, b1.y) || std::max(b0.y, b1.y) + eps < std::min(a0.y, a1.y)) {
    return hit;
  }

  const bool b_on_line_a = std::abs(cross(da, b0 - a0)) <= eps * la && std::abs(cross(da, b1 - a0)) <= eps * la;
  const bool a_on_line_b = std::abs(cross(db, a0 - b0)) <= eps * lb && std::abs(cross(db, a1 - b0)) <= eps * lb;
  if (b_on_line_a || a_on_line_b) {
    // Collinear: intersect parameter intervals on the longer segment.
    const bool use_a = la >= lb;
    const Vec2 p0 = use_a ? a0 : b0;
    const Vec2 p1 = use_a ? a1 : b1;
    const double len = use_a ? la : lb;
    const double s0 = project_param(use_a ? b0 : a0, p0, p1);
    const double s1 = project_param(use_a ? b1 : a1, p0, p1);
    const double lo = std::max(0.0, std::min(s0, s1));
    const double hi = std::min(1.0, std::max(s0, s1));
    if ((hi - lo) * len > eps) {
      hit.kind = SegmentHit::Kind::overlap;
      const Vec2 q0 = lerp(p0, p1, lo);
      const Vec2 q1 = lerp(p0, p1, hi);
      hit.ta = project_param(q0, a0, a1);
      hit.ta_end = project_param(q1, a0, a1);
      if (hit.ta > hit.ta_end) std::swap(hit.ta, hit.ta_end);
      hit.point = q0;
      return hit;
    }
    if ((hi - lo) * len < -eps) return hit;
    // Touch at a single point; fall through to the endpoint tests.
  }

  // Endpoint touches.
  const auto touch = [&](Vec2 p, Vec2 s0, Vec2 s1) { return distance_to_segment(p, s0, s1) <= eps; };
  if (touch(b0, a0, a1)) {
    hit.kind = SegmentHit::Kind::point;
    hit.ta = std::clamp(project_param(b0, a0, a1), 0.0, 1.0);
    hit.tb = 0.0;
    hit.point = b0;
    return hit;
  }
  if (touch(b1, a0, a1)) {
    hit.kind = SegmentHit::Kind::point;
    hit.ta = std::clamp(project_param(b1, a0, a1), 0.0, 1.0);
    hit.tb = 1.0;
    hit.point = b1;
    return hit;
  }
  if (touch(a0, b0, b1)) {
    hit.kind = SegmentHit::Kind::point;
    hit.ta = 0.0;
    hit.tb = std::clamp(project_param(a0, b0, b1), 0.0, 1.0);
    hit.point = a0;
    return hit;
  }
  if (touch(a1, b0, b1)) {
    hit.kind = SegmentHit::Kind::point;
    hit.ta = 1.0;
    hit.tb = std::clamp(project_param(a1, b0, b1), 0.0, 1.0);
    hit.point = a1;
    return hit;
  }

  // Proper crossing.
  const double d1 = cross(db, a0 - b0);
  const double d2 = cross(db, a1 - b0);
  const double d3 = cross(da, b0 - a0);
  const double d4 = cross(da, b1 - a0);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    hit.kind = SegmentHit::Kind::point;
    hit.ta = d1 / (d1 - d2);
    hit.tb = d3 / (d3 - d4);
    hit.point = lerp(a0, a1, hit.ta);
  }
  return hit;
}

int winding_number(std::span<const Vec2> polygon, Vec2 p) {
  int wn = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = polygon[i];
    const Vec2 b = polygon[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && cross(b - a, p - a) > 0.0) ++wn;
    } else {
      if (b.y <= p.y && cross(b - a, p - a) < 0.0) --wn;
    }
  }
  return wn;
}

double signed_area(std::span<const Vec2> polygon) {
  // Relative to the first vertex to limit cancellation far from the origin.
  double s = 0.0;
  const std::size_t n = polygon.size();
  if (n < 3) return 0.0;
  const Vec2 o = polygon[0];
  for (std::size_t i = 1; i + 1 < n; ++i) s += cross(polygon[i] - o, polygon[i + 1] - o);
  return 0.5 * s;
}

}  // namespace aniso
