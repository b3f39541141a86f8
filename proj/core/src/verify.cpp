#include <aniso/verify.hpp>

#include <aniso/energy.hpp>
#include <aniso/error.hpp>
#include <aniso/predicates.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace aniso {

namespace {

double turn_at(const Loop& loop, std::size_t v) {
  return signed_angle(loop.edge_vector(v + loop.size() - 1), loop.edge_vector(v));
}

double sagitta(const std::vector<Vec2>& pts) {
  double worst = 0.0;
  for (const Vec2 p : pts) worst = std::max(worst, distance_to_segment(p, pts.front(), pts.back()));
  return worst;
}

FlatRun measure_run(const Loop& loop, std::size_t li, std::size_t first, std::size_t count) {
  FlatRun run{li, first, count, 0.0, 0.0};
  double turn = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Vec2> pts{loop.vertex(first)};
  for (std::size_t k = 1; k <= count; ++k) {
    pts.push_back(loop.vertex(first + k));
    if (k == count) break;
    turn += turn_at(loop, first + k);
    lo = std::min(lo, turn);
    hi = std::max(hi, turn);
  }
  run.spread = hi - lo;
  run.sagitta = sagitta(pts);
  return run;
}

}  // namespace

FlatnessReport flatness(const PolygonalSet& set, double tol, double corner_angle) {
  FlatnessReport report;
  report.tolerance = tol;
  for (std::size_t li = 0; li < set.loops().size(); ++li) {
    const Loop& loop = set.loop(li);
    const std::size_t n = loop.size();
    std::vector<std::size_t> corners;
    for (std::size_t v = 0; v < n; ++v) {
      if (std::abs(turn_at(loop, v)) > corner_angle) corners.push_back(v);
    }
    double loop_max = 0.0;
    auto add = [&](FlatRun run) {
      loop_max = std::max(loop_max, run.spread);
      report.max_sagitta = std::max(report.max_sagitta, run.sagitta);
      report.runs.push_back(run);
    };
    if (corners.empty()) {
      add(measure_run(loop, li, 0, n));
    } else {
      for (std::size_t c = 0; c < corners.size(); ++c) {
        const std::size_t from = corners[c];
        const std::size_t to = c + 1 < corners.size() ? corners[c + 1] : corners.front() + n;
        add(measure_run(loop, li, from, to - from));
      }
    }
    report.loop_spread.push_back(loop_max);
    report.max_spread = std::max(report.max_spread, loop_max);
  }
  report.is_union_of_segments = report.max_spread <= tol;
  return report;
}

WindowFlatnessReport flatness_in_window(const PolygonalSet& set, const Window& window, double tol, double margin) {
  WindowFlatnessReport report;
  report.tolerance = tol;
  for (const Loop& loop : set.loops()) {
    const std::size_t n = loop.size();
    std::vector<char> eligible(n);
    for (std::size_t v = 0; v < n; ++v) eligible[v] = window.signed_distance(loop.vertex(v)) > margin;
    // Start each chain right after an ineligible vertex; a fully eligible loop is one chain.
    std::size_t start = 0;
    while (start < n && eligible[start]) ++start;
    const bool closed_chain = start == n;
    if (closed_chain) start = 0;
    double turn = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = (start + k) % n;
      if (!eligible[v]) {
        turn = lo = hi = 0.0;
        continue;
      }
      ++report.eligible_vertices;
      const double a = turn_at(loop, v);
      if (std::abs(a) > tol) ++report.nonflat_vertices;
      turn += a;
      lo = std::min(lo, turn);
      hi = std::max(hi, turn);
      if (hi - lo > report.max_spread) {
        report.max_spread = hi - lo;
        report.worst_vertex = loop.vertex(v);
      }
    }
  }
  report.flat = report.max_spread <= tol;
  return report;
}

double density_ratio(const PolygonalSet& set, Vec2 x, double r) {
  if (!(r > 0.0)) throw std::domain_error("density_ratio: radius must be positive");
  if (set.empty() || set.distance_to_boundary(x) > 1e-9) {
    throw std::domain_error("density_ratio: point is not on the boundary");
  }
  const Window ball = Window::disk(x, r);
  double length = 0.0;
  for (const Loop& loop : set.loops()) {
    for (std::size_t e = 0; e < loop.size(); ++e) length += ball.clipped_length(loop.vertex(e), loop.vertex(e + 1));
  }
  return length / r;
}

std::vector<Vec2> detect_crossings(const std::vector<std::vector<Vec2>>& loops) {
  struct Edge {
    std::size_t loop;
    std::size_t index;
    Vec2 a;
    Vec2 b;
  };
  std::vector<Edge> edges;
  for (std::size_t li = 0; li < loops.size(); ++li) {
    const auto& l = loops[li];
    for (std::size_t i = 0; i < l.size(); ++i) edges.push_back({li, i, l[i], l[(i + 1) % l.size()]});
  }
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& p = edges[i];
      const Edge& q = edges[j];
      if (p.loop == q.loop) {
        const std::size_t n = loops[p.loop].size();
        if ((p.index + 1) % n == q.index || (q.index + 1) % n == p.index) continue;
      }
      const auto h = intersect_segments(p.a, p.b, q.a, q.b, kTol.on_segment);
      if (h.kind != SegmentHit::Kind::point) continue;
      const double ea = kTol.on_segment / std::max(norm(p.b - p.a), kTol.on_segment);
      const double eb = kTol.on_segment / std::max(norm(q.b - q.a), kTol.on_segment);
      if (h.ta <= ea || h.ta >= 1.0 - ea || h.tb <= eb || h.tb >= 1.0 - eb) continue;
      const bool dup = std::any_of(out.begin(), out.end(), [&](Vec2 c) { return distance(c, h.point) <= kTol.on_segment; });
      if (!dup) out.push_back(h.point);
    }
  }
  return out;
}

BruteForceResult brute_force_best_competitor(const PolygonalSet& set, const Window& window,
                                             const Integrand& integrand, std::size_t vertex_budget) {
  if (vertex_budget > 6) throw Error(ErrorCode::invalid_argument, "vertex_budget must be at most 6");

  // Loops with window crossings inserted as pinned vertices.
  struct Node {
    Vec2 p;
    bool deletable;
  };
  std::vector<std::vector<Node>> loops;
  std::vector<char> island;
  std::vector<std::pair<std::size_t, std::size_t>> free_nodes;
  for (const Loop& loop : set.loops()) {
    std::vector<Node> nodes;
    bool all_inside = true;
    for (std::size_t e = 0; e < loop.size(); ++e) {
      const Vec2 a = loop.vertex(e);
      const Vec2 b = loop.vertex(e + 1);
      const bool inside = window.contains(a);
      all_inside = all_inside && inside;
      nodes.push_back({a, inside});
      if (const auto c = window.clip(a, b)) {
        for (const double t : {c->first, c->second}) {
          if (t > 0.0 && t < 1.0) {
            const Vec2 pin = lerp(a, b, t);
            if (distance(pin, nodes.back().p) > kTol.merge_distance && distance(pin, b) > kTol.merge_distance) {
              nodes.push_back({pin, false});
            }
          }
        }
      }
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k].deletable) free_nodes.emplace_back(loops.size(), k);
    }
    island.push_back(all_inside ? 1 : 0);
    loops.push_back(std::move(nodes));
  }
  if (free_nodes.size() > 8) {
    throw Error(ErrorCode::invalid_argument, "brute force oracle supports at most 8 vertices inside the window");
  }

  BruteForceResult result;
  result.base_energy = phi_total(set, window, integrand);
  result.best_energy = result.base_energy;
  result.best = set;

  std::vector<std::size_t> island_ids;
  for (std::size_t li = 0; li < island.size(); ++li) {
    if (island[li]) island_ids.push_back(li);
  }
  const std::size_t nf = free_nodes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << nf); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > vertex_budget) continue;
    for (std::size_t drop = 0; drop < (std::size_t{1} << island_ids.size()); ++drop) {
      std::vector<std::vector<char>> removed(loops.size());
      for (std::size_t li = 0; li < loops.size(); ++li) removed[li].assign(loops[li].size(), 0);
      for (std::size_t k = 0; k < nf; ++k) {
        if (mask >> k & 1) removed[free_nodes[k].first][free_nodes[k].second] = 1;
      }
      std::vector<std::vector<Vec2>> out;
      bool admissible = true;
      for (std::size_t li = 0; li < loops.size() && admissible; ++li) {
        const auto it = std::find(island_ids.begin(), island_ids.end(), li);
        if (it != island_ids.end() && (drop >> (it - island_ids.begin()) & 1)) continue;
        std::vector<Vec2> kept;
        for (std::size_t k = 0; k < loops[li].size(); ++k) {
          if (!removed[li][k]) kept.push_back(loops[li][k].p);
        }
        if (kept.size() < 3) {
          admissible = false;
          break;
        }
        // Chords must run through the open window.
        for (std::size_t k = 0; k < kept.size(); ++k) {
          const Vec2 a = kept[k];
          const Vec2 b = kept[(k + 1) % kept.size()];
          if (!window.contains(a) && !window.contains(b) && !window.contains(lerp(a, b, 0.5))) {
            // Unchanged edges outside the window are fine; new chords are not.
            bool original = false;
            for (std::size_t j = 0; j < loops[li].size(); ++j) {
              if (loops[li][j].p == a && loops[li][(j + 1) % loops[li].size()].p == b) original = true;
            }
            if (!original) admissible = false;
          }
        }
        out.push_back(std::move(kept));
      }
      if (!admissible) continue;
      std::optional<PolygonalSet> competitor;
      try {
        competitor.emplace(out);
      } catch (const Error&) {
        continue;
      }
      ++result.competitors;
      const double e = phi_total(*competitor, window, integrand);
      if (e < result.best_energy) {
        result.best_energy = e;
        result.best = std::move(*competitor);
      }
    }
  }
  return result;
}

}  // namespace aniso
