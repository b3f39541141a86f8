#include <aniso/polygon.hpp>

#include <aniso/error.hpp>
#include <aniso/predicates.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace aniso {

double Loop::signed_area() const { return aniso::signed_area(vertices_); }

double Loop::perimeter() const {
  double p = 0.0;
  for (std::size_t i = 0; i < size(); ++i) p += edge_length(i);
  return p;
}

Vec2 Loop::net_normal() const {
  Vec2 sum;
  for (std::size_t i = 0; i < size(); ++i) sum += outward_normal(i) * edge_length(i);
  return sum;
}

std::vector<Vec2> normalize_loop(std::vector<Vec2> v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3;) {
      const std::size_t n = v.size();
      const Vec2 prev = v[(i + n - 1) % n];
      const Vec2 cur = v[i];
      const Vec2 next = v[(i + 1) % n];
      const Vec2 a = cur - prev;
      const Vec2 b = next - cur;
      const double la = norm(a);
      const double lb = norm(b);
      const bool duplicate = la <= kTol.merge_distance;
      // Straight continuations and zero-width spikes both carry no reduced boundary.
      const bool collinear = !duplicate && lb > kTol.merge_distance &&
                             std::abs(cross(a, b)) <= kTol.collinear_sine * la * lb;
      if (duplicate || collinear) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  if (v.size() < 3) v.clear();
  return v;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::invalid_polygon, msg); }

// A point on the loop that is not within eps of the other boundary, if any.
bool sample_point_off(const Loop& loop, const Loop& other, Vec2& out) {
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec2 m = lerp(loop.vertex(i), loop.vertex(i + 1), 0.5);
    bool clear = true;
    for (std::size_t j = 0; j < other.size() && clear; ++j) {
      clear = distance_to_segment(m, other.vertex(j), other.vertex(j + 1)) > kTol.on_segment;
    }
    if (clear) {
      out = m;
      return true;
    }
  }
  return false;
}

void check_simple(const Loop& loop, std::size_t index) {
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const auto hit = intersect_segments(loop.vertex(i), loop.vertex(i + 1), loop.vertex(j), loop.vertex(j + 1),
                                          kTol.on_segment);
      if (adjacent ? hit.kind == SegmentHit::Kind::overlap : hit.kind != SegmentHit::Kind::none) {
        std::ostringstream os;
        os << "loop " << index << " is not simple: edges " << i << " and " << j << " intersect near " << hit.point;
        fail(os.str());
      }
    }
  }
}

}  // namespace

void validate_loops(std::span<const Loop> loops) {
  for (std::size_t k = 0; k < loops.size(); ++k) {
    const Loop& loop = loops[k];
    if (loop.size() < 3) fail("loop " + std::to_string(k) + " has fewer than three vertices");
    for (const Vec2 p : loop.vertices()) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail("loop " + std::to_string(k) + " has a non-finite vertex");
    }
    for (std::size_t i = 0; i < loop.size(); ++i) {
      if (loop.edge_length(i) <= kTol.merge_distance) fail("loop " + std::to_string(k) + " has a zero-length edge");
    }
    if (loop.signed_area() == 0.0) fail("loop " + std::to_string(k) + " encloses no area");
    check_simple(loop, k);
  }

  // Distinct loops: no overlaps, no proper crossings, no crossings through vertices.
  for (std::size_t a = 0; a < loops.size(); ++a) {
    for (std::size_t b = a + 1; b < loops.size(); ++b) {
      const Loop& la = loops[a];
      const Loop& lb = loops[b];
      for (std::size_t i = 0; i < la.size(); ++i) {
        for (std::size_t j = 0; j < lb.size(); ++j) {
          const auto hit = intersect_segments(la.vertex(i), la.vertex(i + 1), lb.vertex(j), lb.vertex(j + 1),
                                              kTol.on_segment);
          if (hit.kind == SegmentHit::Kind::overlap) {
            fail("loops " + std::to_string(a) + " and " + std::to_string(b) + " share a boundary segment");
          }
          if (hit.kind == SegmentHit::Kind::point && hit.ta > 0.0 && hit.ta < 1.0 && hit.tb > 0.0 && hit.tb < 1.0) {
            fail("loops " + std::to_string(a) + " and " + std::to_string(b) + " cross");
          }
        }
      }
      // Remaining crossings can only happen at vertices; they would split one
      // loop into parts lying on both sides of the other.
      for (const auto& [inner, outer] : {std::pair{&la, &lb}, std::pair{&lb, &la}}) {
        int side = 0;
        for (std::size_t i = 0; i < inner->size(); ++i) {
          const Vec2 m = lerp(inner->vertex(i), inner->vertex(i + 1), 0.5);
          bool on = false;
          for (std::size_t j = 0; j < outer->size() && !on; ++j) {
            on = distance_to_segment(m, outer->vertex(j), outer->vertex(j + 1)) <= kTol.on_segment;
          }
          if (on) continue;
          const int s = winding_number(outer->vertices(), m) != 0 ? 1 : -1;
          if (side == 0) side = s;
          if (s != side) fail("loops " + std::to_string(a) + " and " + std::to_string(b) + " cross at a vertex");
        }
      }
    }
  }

  // Orientation must alternate with nesting depth.
  for (std::size_t k = 0; k < loops.size(); ++k) {
    int depth = 0;
    for (std::size_t other = 0; other < loops.size(); ++other) {
      if (other == k) continue;
      Vec2 p;
      if (!sample_point_off(loops[k], loops[other], p)) continue;
      if (winding_number(loops[other].vertices(), p) != 0) ++depth;
    }
    const bool expect_positive = depth % 2 == 0;
    if (loops[k].positive() != expect_positive) {
      fail("loop " + std::to_string(k) + " orientation is inconsistent with its nesting depth");
    }
  }
}

PolygonalSet::PolygonalSet(std::vector<std::vector<Vec2>> loops) {
  for (auto& raw : loops) {
    auto v = normalize_loop(std::move(raw));
    if (!v.empty()) loops_.emplace_back(std::move(v));
  }
  validate_loops(loops_);
}

std::size_t PolygonalSet::edge_count() const {
  std::size_t n = 0;
  for (const auto& l : loops_) n += l.size();
  return n;
}

double PolygonalSet::area() const {
  double a = 0.0;
  for (const auto& l : loops_) a += l.signed_area();
  return a;
}

double PolygonalSet::perimeter() const {
  double p = 0.0;
  for (const auto& l : loops_) p += l.perimeter();
  return p;
}

bool PolygonalSet::contains(Vec2 p) const {
  int w = 0;
  for (const auto& l : loops_) w += winding_number(l.vertices(), p);
  return w > 0;
}

double PolygonalSet::distance_to_boundary(Vec2 p) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& l : loops_) {
    for (std::size_t i = 0; i < l.size(); ++i) d = std::min(d, distance_to_segment(p, l.vertex(i), l.vertex(i + 1)));
  }
  return d;
}

std::vector<std::vector<Vec2>> PolygonalSet::raw_loops() const {
  std::vector<std::vector<Vec2>> out;
  for (const auto& l : loops_) out.emplace_back(l.vertices().begin(), l.vertices().end());
  return out;
}

std::vector<std::vector<Vec2>> outward_normals(const PolygonalSet& set) {
  std::vector<std::vector<Vec2>> out;
  for (const auto& l : set.loops()) {
    auto& normals = out.emplace_back();
    for (std::size_t i = 0; i < l.size(); ++i) normals.push_back(l.outward_normal(i));
  }
  return out;
}

}  // namespace aniso
