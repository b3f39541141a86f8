#include <aniso/arc.hpp>

#include <aniso/error.hpp>
#include <aniso/predicates.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace aniso {

Arc Arc::from_polyline(std::vector<Vec2> points) {
  if (points.size() < 2) throw std::invalid_argument("arc needs at least two points");
  Arc a;
  a.points = std::move(points);
  return a;
}

Arc make_arc(const PolygonalSet& set, std::size_t loop, std::size_t first_edge, std::size_t edge_count) {
  const Loop& l = set.loop(loop);
  return make_arc(set, loop, first_edge, edge_count, l.vertex(first_edge), l.vertex(first_edge + edge_count));
}

Arc make_arc(const PolygonalSet& set, std::size_t loop, std::size_t first_edge, std::size_t edge_count, Vec2 x1,
             Vec2 x2) {
  const Loop& l = set.loop(loop);
  if (edge_count == 0 || edge_count >= l.size()) throw std::invalid_argument("arc must cover 1..n-1 edges");
  Arc a;
  a.loop = loop;
  a.first_edge = first_edge % l.size();
  a.points.reserve(edge_count + 1);
  a.points.push_back(x1);
  for (std::size_t k = 1; k < edge_count; ++k) a.points.push_back(l.vertex(first_edge + k));
  a.points.push_back(x2);
  return a;
}

Chord chord_of(const Arc& arc) { return {arc.start(), arc.end()}; }

Vec2 net_normal(const Arc& arc) {
  // normal * length of each edge is exactly its edge vector rotated by -90 degrees.
  Vec2 sum;
  for (std::size_t i = 0; i < arc.edge_count(); ++i) sum += rotate_cw(arc.edge_vector(i));
  return sum;
}

double normal_spread(const Arc& arc) {
  double spread = 0.0;
  const std::size_t m = arc.edge_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      spread = std::max(spread, angle_between(arc.edge_vector(i), arc.edge_vector(j)));
    }
  }
  return spread;
}

namespace {

struct ChordHit {
  double t = 0.0;         // parameter along the chord
  bool on_arc = false;
  std::size_t edge = 0;   // arc edge index, when on_arc
  double s = 0.0;         // parameter along that arc edge
};

bool in_arc_range(std::size_t edge, const Arc& arc, std::size_t n) {
  return (edge + n - arc.first_edge) % n < arc.edge_count();
}

}  // namespace

ShortenResult shorten_chord(const Arc& arc, const PolygonalSet& set) {
  ShortenResult result;
  result.arc = arc;
  result.chord = chord_of(arc);
  const Vec2 c0 = result.chord.start;
  const Vec2 c1 = result.chord.end;
  const double len = distance(c0, c1);
  if (!(len > kTol.on_segment)) {
    result.status = ShortenResult::Status::degenerate;
    return result;
  }
  const double t_eps = kTol.on_segment / len;
  const double eps = kTol.on_segment;

  std::vector<ChordHit> hits;
  bool overlap = false;
  const auto add = [&](Vec2 s0, Vec2 s1, bool on_arc, std::size_t edge) {
    const auto h = intersect_segments(c0, c1, s0, s1, eps);
    if (h.kind == SegmentHit::Kind::overlap) {
      overlap = true;
    } else if (h.kind == SegmentHit::Kind::point && h.ta > t_eps && h.ta < 1.0 - t_eps) {
      hits.push_back({h.ta, on_arc, edge, h.tb});
    }
  };

  for (std::size_t j = 0; j < arc.edge_count(); ++j) add(arc.points[j], arc.points[j + 1], true, j);
  for (std::size_t li = 0; li < set.loops().size(); ++li) {
    const Loop& l = set.loop(li);
    const std::size_t n = l.size();
    for (std::size_t e = 0; e < n; ++e) {
      if (li == arc.loop && in_arc_range(e, arc, n)) continue;
      add(l.vertex(e), l.vertex(e + 1), false, 0);
    }
    if (li == arc.loop) {
      const Vec2 v_first = l.vertex(arc.first_edge);
      const Vec2 v_after = l.vertex(arc.first_edge + arc.edge_count());
      if (distance(v_first, arc.start()) > kTol.merge_distance) add(v_first, arc.start(), false, 0);
      if (distance(arc.end(), v_after) > kTol.merge_distance) add(arc.end(), v_after, false, 0);
    }
  }
  if (overlap) {
    result.status = ShortenResult::Status::degenerate;
    return result;
  }
  if (hits.empty()) return result;

  std::sort(hits.begin(), hits.end(), [](const ChordHit& a, const ChordHit& b) { return a.t < b.t; });
  std::vector<ChordHit> seq;
  seq.push_back({0.0, true, 0, 0.0});
  for (const auto& h : hits) {
    if (seq.size() > 1 && h.t - seq.back().t <= t_eps) {
      // Same point reported by two edges (a vertex); it is on the arc if either says so.
      if (h.on_arc && !seq.back().on_arc) seq.back() = h;
      continue;
    }
    seq.push_back(h);
  }
  seq.push_back({1.0, true, arc.edge_count() - 1, 1.0});

  std::size_t k = 0;
  while (k + 1 < seq.size() && !(seq[k].on_arc && seq[k + 1].on_arc)) ++k;
  if (k + 1 >= seq.size()) {
    result.status = ShortenResult::Status::blocked;
    return result;
  }

  struct Pos {
    std::size_t edge;
    double s;
  };
  const std::size_t m = arc.edge_count();
  const auto canonical = [&](std::size_t edge, double s) {
    if (s >= 1.0 - 1e-12 && edge + 1 < m) return Pos{edge + 1, 0.0};
    return Pos{edge, std::clamp(s, 0.0, 1.0)};
  };
  Pos pa = canonical(seq[k].edge, seq[k].s);
  Pos pb = canonical(seq[k + 1].edge, seq[k + 1].s);
  if (pb.edge < pa.edge || (pb.edge == pa.edge && pb.s < pa.s)) std::swap(pa, pb);
  if (pa.edge == pb.edge) {
    result.status = ShortenResult::Status::degenerate;
    return result;
  }
  const auto at = [&](Pos p) {
    return p.s == 0.0 ? arc.points[p.edge] : lerp(arc.points[p.edge], arc.points[p.edge + 1], p.s);
  };

  Arc sub;
  sub.loop = arc.loop;
  sub.first_edge = arc.first_edge + pa.edge;
  if (!set.empty() && arc.loop < set.loops().size()) sub.first_edge %= set.loop(arc.loop).size();
  sub.points.push_back(at(pa));
  for (std::size_t j = pa.edge + 1; j <= pb.edge; ++j) sub.points.push_back(arc.points[j]);
  const Vec2 end = at(pb);
  if (distance(end, sub.points.back()) > kTol.merge_distance) sub.points.push_back(end);
  if (sub.edge_count() < 2) {
    result.status = ShortenResult::Status::degenerate;
    return result;
  }
  result.status = ShortenResult::Status::shortened;
  result.arc = std::move(sub);
  result.chord = chord_of(result.arc);
  return result;
}

PolygonalSet enclosed_region(const Arc& arc, const Chord& chord) {
  if (arc.edge_count() == 0 || distance(arc.start(), chord.start) > kTol.merge_distance ||
      distance(arc.end(), chord.end) > kTol.merge_distance) {
    throw std::logic_error("chord does not join the arc endpoints");
  }
  std::vector<Vec2> pts = arc.points;
  if (signed_area(pts) < 0.0) std::reverse(pts.begin(), pts.end());
  try {
    return PolygonalSet({std::move(pts)});
  } catch (const Error& e) {
    throw std::logic_error(std::string("arc and chord do not form a Jordan curve: ") + e.what());
  }
}

RegionSide region_side_by_orientation(const Arc& arc) {
  return signed_area(arc.points) > 0.0 ? RegionSide::inside_E : RegionSide::outside_E;
}

std::vector<Vec2> interior_samples(const Loop& loop, std::size_t max_samples) {
  std::vector<double> ys;
  for (const Vec2 v : loop.vertices()) ys.push_back(v.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  struct Gap {
    double width;
    double y;
  };
  std::vector<Gap> gaps;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) gaps.push_back({ys[i + 1] - ys[i], 0.5 * (ys[i] + ys[i + 1])});
  std::sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.width > b.width; });

  std::vector<Vec2> out;
  for (const Gap& g : gaps) {
    if (out.size() >= max_samples) break;
    std::vector<double> xs;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vec2 a = loop.vertex(i);
      const Vec2 b = loop.vertex(i + 1);
      if ((a.y < g.y) != (b.y < g.y)) xs.push_back(a.x + (g.y - a.y) / (b.y - a.y) * (b.x - a.x));
    }
    std::sort(xs.begin(), xs.end());
    double best_w = -1.0;
    double best_x = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      if (xs[i + 1] - xs[i] > best_w) {
        best_w = xs[i + 1] - xs[i];
        best_x = 0.5 * (xs[i] + xs[i + 1]);
      }
    }
    if (best_w > 0.0) out.push_back({best_x, g.y});
  }
  return out;
}

RegionSide classify_region(const PolygonalSet& region, const PolygonalSet& set) {
  if (region.empty()) throw Error(ErrorCode::degenerate_region, "cannot classify an empty region");
  for (const Vec2 p : interior_samples(region.loop(0))) {
    if (region.distance_to_boundary(p) <= kTol.sample_clearance) continue;
    if (set.distance_to_boundary(p) <= kTol.sample_clearance) continue;
    return set.contains(p) ? RegionSide::inside_E : RegionSide::outside_E;
  }
  throw Error(ErrorCode::degenerate_region, "no interior sample point clear of both boundaries");
}

bool region_is_clear(const Arc& arc, const PolygonalSet& region, const PolygonalSet& set) {
  if (region.empty()) return false;
  // A boundary component that does not meet arc + chord lies wholly on one side
  // of it, so one clear sample point decides.
  const auto probe_inside = [&](Vec2 s0, Vec2 s1, bool& decided) {
    const Vec2 m = lerp(s0, s1, 0.5);
    if (region.distance_to_boundary(m) <= kTol.on_segment) return false;
    decided = true;
    return region.contains(m);
  };
  for (std::size_t li = 0; li < set.loops().size(); ++li) {
    const Loop& l = set.loop(li);
    const std::size_t n = l.size();
    bool decided = false;
    if (li != arc.loop) {
      for (std::size_t e = 0; e < n && !decided; ++e) {
        if (probe_inside(l.vertex(e), l.vertex(e + 1), decided)) return false;
      }
      continue;
    }
    // Rest of the arc's own loop: leftover pieces of the end edges, then whole edges.
    const Vec2 v_after = l.vertex(arc.first_edge + arc.edge_count());
    const Vec2 v_first = l.vertex(arc.first_edge);
    if (distance(arc.end(), v_after) > kTol.merge_distance && probe_inside(arc.end(), v_after, decided)) return false;
    if (!decided && distance(v_first, arc.start()) > kTol.merge_distance &&
        probe_inside(v_first, arc.start(), decided)) {
      return false;
    }
    for (std::size_t k = arc.edge_count(); k < n && !decided; ++k) {
      const std::size_t e = arc.first_edge + k;
      if (probe_inside(l.vertex(e), l.vertex(e + 1), decided)) return false;
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace aniso
