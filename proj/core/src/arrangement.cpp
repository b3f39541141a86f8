#include "arrangement.hpp"

#include <aniso/error.hpp>
#include <aniso/predicates.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace aniso::detail {
namespace {

struct Edge {
  Vec2 a;
  Vec2 b;
  int owner;
  std::vector<std::pair<double, Vec2>> splits;
};

std::vector<Edge> collect_edges(const PolygonalSet& set, int owner) {
  std::vector<Edge> out;
  for (const auto& loop : set.loops()) {
    for (std::size_t i = 0; i < loop.size(); ++i) out.push_back({loop.vertex(i), loop.vertex(i + 1), owner, {}});
  }
  return out;
}

// Adds p as a split of e if it lies on e's interior.
bool split_at(Edge& e, Vec2 p) {
  const double eps = kTol.on_segment;
  if (distance(p, e.a) <= eps || distance(p, e.b) <= eps) return false;
  if (distance_to_segment(p, e.a, e.b) > eps) return false;
  e.splits.emplace_back(project_param(p, e.a, e.b), p);
  return true;
}

bool boxes_apart(const Edge& e, const Edge& f, double eps) {
  return std::max(e.a.x, e.b.x) + eps < std::min(f.a.x, f.b.x) || std::max(f.a.x, f.b.x) + eps < std::min(e.a.x, e.b.x) ||
         std::max(e.a.y, e.b.y) + eps < std::min(f.a.y, f.b.y) || std::max(f.a.y, f.b.y) + eps < std::min(e.a.y, e.b.y);
}

bool same_point(Vec2 p, Vec2 q) { return distance(p, q) <= kTol.on_segment; }

}  // namespace

Arrangement build_arrangement(const PolygonalSet& first, const PolygonalSet& second) {
  auto ea = collect_edges(first, 0);
  auto eb = collect_edges(second, 1);
  const double eps = kTol.on_segment;
  for (auto& e : ea) {
    for (auto& f : eb) {
      if (boxes_apart(e, f, eps)) continue;
      bool touched = split_at(e, f.a);
      touched |= split_at(e, f.b);
      touched |= split_at(f, e.a);
      touched |= split_at(f, e.b);
      if (touched) continue;
      const auto hit = intersect_segments(e.a, e.b, f.a, f.b, eps);
      if (hit.kind == SegmentHit::Kind::point && hit.ta > 0.0 && hit.ta < 1.0 && hit.tb > 0.0 && hit.tb < 1.0) {
        e.splits.emplace_back(hit.ta, hit.point);
        f.splits.emplace_back(hit.tb, hit.point);
      }
    }
  }

  Arrangement arr;
  for (auto* edges : {&ea, &eb}) {
    for (auto& e : *edges) {
      std::sort(e.splits.begin(), e.splits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      Vec2 prev = e.a;
      for (const auto& [t, p] : e.splits) {
        if (distance(prev, p) <= kTol.merge_distance || distance(p, e.b) <= kTol.merge_distance) continue;
        arr.fragments.push_back({prev, p, e.owner});
        prev = p;
      }
      arr.fragments.push_back({prev, e.b, e.owner});
    }
  }

  // Pair up coincident fragments of the two sets.
  auto& fr = arr.fragments;
  for (std::size_t i = 0; i < fr.size(); ++i) {
    if (fr[i].owner != 0) continue;
    for (std::size_t j = 0; j < fr.size(); ++j) {
      if (fr[j].owner != 1 || fr[j].twin >= 0) continue;
      const bool same = same_point(fr[i].a, fr[j].a) && same_point(fr[i].b, fr[j].b);
      const bool opposite = same_point(fr[i].a, fr[j].b) && same_point(fr[i].b, fr[j].a);
      if (same || opposite) {
        fr[i].twin = static_cast<int>(j);
        fr[j].twin = static_cast<int>(i);
        fr[i].twin_same = fr[j].twin_same = same;
        break;
      }
    }
  }
  return arr;
}

std::vector<std::vector<Vec2>> stitch_loops(const std::vector<std::pair<Vec2, Vec2>>& segs) {
  const double eps = kTol.on_segment;
  std::vector<bool> used(segs.size(), false);
  std::vector<std::vector<Vec2>> loops;
  for (std::size_t start = 0; start < segs.size(); ++start) {
    if (used[start]) continue;
    std::vector<Vec2> pts;
    std::size_t cur = start;
    for (std::size_t guard = 0;; ++guard) {
      if (guard > segs.size()) throw Error(ErrorCode::boolean_failure, "boundary stitching did not close");
      used[cur] = true;
      pts.push_back(segs[cur].first);
      const Vec2 end = segs[cur].second;
      const Vec2 dir = end - segs[cur].first;
      std::size_t best = segs.size();
      double best_turn = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < segs.size(); ++j) {
        if (distance(segs[j].first, end) > eps) continue;
        const double turn = signed_angle(dir, segs[j].second - segs[j].first);
        if (turn > best_turn) {
          best_turn = turn;
          best = j;
        }
      }
      if (best == segs.size()) throw Error(ErrorCode::boolean_failure, "dangling boundary fragment");
      if (best == start) break;
      if (used[best]) throw Error(ErrorCode::boolean_failure, "inconsistent boundary orientation");
      cur = best;
    }
    loops.push_back(std::move(pts));
  }
  return loops;
}

}  // namespace aniso::detail
