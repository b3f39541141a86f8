#include <aniso/descent.hpp>

#include <aniso/boolean.hpp>
#include <aniso/energy.hpp>
#include <aniso/error.hpp>
#include <aniso/predicates.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace aniso {

void DescentParams::validate() const {
  if (!(gain_tol > 0.0)) throw Error(ErrorCode::invalid_argument, "gain_tol must be positive");
  if (!(flat_tol >= 0.0)) throw Error(ErrorCode::invalid_argument, "flat_tol must be nonnegative");
  if (max_arc_edges < 2) throw Error(ErrorCode::invalid_argument, "max_arc_edges must be at least 2");
  if (!(trim_fraction > 0.0 && trim_fraction < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "trim_fraction must lie in (0, 1)");
  }
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::converged_flat: return "converged_flat";
    case Termination::gain_below_tol: return "gain_below_tol";
    case Termination::max_steps: return "max_steps";
  }
  return "unknown";
}

namespace {

constexpr int kMaxShrink = 48;
// Gains below this fraction of the total energy are lost in the rounding of
// the energy sum and cannot be certified as a strict decrease.
constexpr double kGainFloor = 1e-13;
// Trimmed endpoints stay this far from the window boundary, well above the
// coincidence tolerance, so the slivers they cut off remain decidable.
constexpr double kTrimFloor = 1e-10;

struct Item {
  double gain = 0.0;
  std::size_t edges = 0;
  std::size_t loop = 0;
  std::size_t first_edge = 0;
  bool island = false;
  bool resolved = false;
  int shrink = 0;
  Vec2 x1;
  Vec2 x2;
  Arc enumerated;
  Arc arc;
};

// Max-heap order: larger gain first, then fewer edges, then lower loop/edge index.
struct ItemLess {
  bool operator()(const Item& a, const Item& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.edges != b.edges) return a.edges > b.edges;
    if (a.loop != b.loop) return a.loop > b.loop;
    return a.first_edge > b.first_edge;
  }
};

using Excluded = std::vector<std::pair<Vec2, Vec2>>;

bool is_excluded(const Excluded& excluded, Vec2 a, Vec2 b) {
  return std::any_of(excluded.begin(), excluded.end(), [&](const auto& e) { return e.first == a && e.second == b; });
}

bool points_inside(const Window& window, const std::vector<Vec2>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](Vec2 p) { return window.contains(p); });
}

// Cumulative turning angle range along a run of edges; equals the maximal
// pairwise normal angle whenever it is small.
class TurnProfile {
 public:
  explicit TurnProfile(const Loop& loop) : turn_(loop.size()) {
    for (std::size_t v = 0; v < loop.size(); ++v) {
      turn_[v] = signed_angle(loop.edge_vector(v + loop.size() - 1), loop.edge_vector(v));
    }
  }
  double at(std::size_t vertex) const { return turn_[vertex % turn_.size()]; }

 private:
  std::vector<double> turn_;
};

bool island_clear(std::size_t loop_index, const PolygonalSet& region, const PolygonalSet& set) {
  for (std::size_t li = 0; li < set.loops().size(); ++li) {
    if (li == loop_index) continue;
    const Loop& l = set.loop(li);
    for (std::size_t e = 0; e < l.size(); ++e) {
      const Vec2 m = lerp(l.vertex(e), l.vertex(e + 1), 0.5);
      if (region.distance_to_boundary(m) <= kTol.on_segment) continue;
      if (region.contains(m)) return false;
      break;
    }
  }
  return true;
}

// Point on the segment inside -> outside, short of the window exit by the
// given fraction of the inside part, but never closer than kTrimFloor.
std::optional<Vec2> trimmed_endpoint(const Window& window, Vec2 inside, Vec2 outside, double fraction) {
  const Vec2 p = window.exit_point(inside, outside);
  const double inside_length = distance(inside, p);
  const double gap = std::max(fraction * inside_length, kTrimFloor);
  if (gap >= inside_length) return std::nullopt;
  const Vec2 x = p + (inside - p) * (gap / inside_length);
  if (!window.contains(x) || distance(x, inside) <= kTol.merge_distance) return std::nullopt;
  return x;
}

std::optional<Candidate> admit(const Item& item, const PolygonalSet& set, const Window& window) {
  Candidate c;
  if (item.island) {
    const Loop& loop = set.loop(item.loop);
    std::vector<Vec2> pts(loop.vertices().begin(), loop.vertices().end());
    if (!points_inside(window, pts)) return std::nullopt;
    if (!loop.positive()) std::reverse(pts.begin(), pts.end());
    c.kind = Candidate::Kind::island;
    c.island_loop = item.loop;
    c.region = PolygonalSet({pts});
    if (!island_clear(item.loop, c.region, set)) return std::nullopt;
    c.side = loop.positive() ? RegionSide::inside_E : RegionSide::outside_E;
    c.gain = item.gain;
    return c;
  }
  const Arc& arc = item.arc;
  if (!points_inside(window, arc.points)) return std::nullopt;
  c.kind = Candidate::Kind::chord;
  c.enumerated = item.enumerated;
  c.arc = arc;
  c.chord = chord_of(arc);
  try {
    c.region = enclosed_region(arc, c.chord);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
  if (c.region.empty() || !region_is_clear(arc, c.region, set)) return std::nullopt;
  try {
    c.side = classify_region(c.region, set);
  } catch (const Error&) {
    return std::nullopt;
  }
  // The sample-point classification and the orientation of arc + chord must agree.
  if (c.side != region_side_by_orientation(arc)) return std::nullopt;
  c.gain = item.gain;
  return c;
}

ArcSearch search(const PolygonalSet& set, const Window& window, const Integrand& integrand,
                 const DescentParams& params, double min_gain, const Excluded& excluded) {
  params.validate();
  ArcSearch result;
  std::priority_queue<Item, std::vector<Item>, ItemLess> queue;

  for (std::size_t li = 0; li < set.loops().size(); ++li) {
    const Loop& loop = set.loop(li);
    const std::size_t n = loop.size();
    std::vector<char> inside(n);
    std::vector<double> edge_energy(n);
    for (std::size_t v = 0; v < n; ++v) {
      inside[v] = window.contains(loop.vertex(v));
      edge_energy[v] = integrand.eval(rotate_cw(loop.edge_vector(v)));
    }
    const TurnProfile turns(loop);

    if (std::all_of(inside.begin(), inside.end(), [](char c) { return c != 0; })) {
      Item island;
      island.island = true;
      island.resolved = true;
      island.loop = li;
      island.edges = n;
      for (double e : edge_energy) island.gain += e;
      ++result.nonflat_candidates;
      if (island.gain >= min_gain) queue.push(std::move(island));
    }

    const std::size_t max_k = std::min(params.max_arc_edges, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (!inside[(i + 1) % n]) continue;
      const Vec2 v_start = loop.vertex(i);
      const Vec2 v_next = loop.vertex(i + 1);
      std::optional<Vec2> x1 = inside[i] ? std::optional<Vec2>(v_start)
                                         : trimmed_endpoint(window, v_next, v_start, params.trim_fraction);
      if (!x1) continue;
      const double first_energy = edge_energy[i] * (distance(*x1, v_next) / loop.edge_length(i));

      double interior_energy = 0.0;  // full edges i+1 .. i+k-2
      double turn = 0.0;
      double turn_min = 0.0;
      double turn_max = 0.0;
      std::optional<Item> longest;
      for (std::size_t k = 2; k <= max_k; ++k) {
        const std::size_t last_inner = i + k - 1;  // last interior vertex
        if (!inside[last_inner % n]) break;
        if (k >= 3) interior_energy += edge_energy[(i + k - 2) % n];
        turn += turns.at(last_inner);
        turn_min = std::min(turn_min, turn);
        turn_max = std::max(turn_max, turn);
        if (turn_max - turn_min <= params.flat_tol) continue;

        const Vec2 v_last = loop.vertex(last_inner);
        const Vec2 v_end = loop.vertex(i + k);
        std::optional<Vec2> x2 = inside[(i + k) % n]
                                     ? std::optional<Vec2>(v_end)
                                     : trimmed_endpoint(window, v_last, v_end, params.trim_fraction);
        if (!x2 || *x2 == *x1) continue;
        const double last_energy = edge_energy[last_inner % n] * (distance(v_last, *x2) / loop.edge_length(last_inner));
        const double chord = integrand.eval(rotate_cw(*x2 - *x1));

        Item item;
        item.gain = first_energy + interior_energy + last_energy - chord;
        item.edges = k;
        item.loop = li;
        item.first_edge = i;
        item.x1 = *x1;
        item.x2 = *x2;
        ++result.nonflat_candidates;
        if (params.arc_enumeration == ArcEnumeration::sliding_window) {
          longest = std::move(item);
        } else if (item.gain >= min_gain) {
          queue.push(std::move(item));
        }
      }
      if (longest && longest->gain >= min_gain) queue.push(std::move(*longest));
    }
  }

  while (!queue.empty()) {
    Item item = queue.top();
    queue.pop();
    if (item.gain < min_gain) break;
    if (item.resolved) {
      if (!item.island && is_excluded(excluded, item.arc.start(), item.arc.end())) continue;
      if (item.island && is_excluded(excluded, set.loop(item.loop).vertex(0), set.loop(item.loop).vertex(0))) continue;
      if (auto c = admit(item, set, window)) {
        result.best = std::move(c);
        return result;
      }
      continue;
    }

    Arc arc = make_arc(set, item.loop, item.first_edge, item.edges, item.x1, item.x2);
    if (item.shrink == 0) item.enumerated = arc;
    auto sr = shorten_chord(arc, set);
    using Status = ShortenResult::Status;
    if (sr.status == Status::degenerate) continue;
    if (sr.status == Status::blocked) {
      // Pull both ends toward the arc so the chord hugs its corners.
      if (item.shrink >= kMaxShrink) continue;
      const Loop& loop = set.loop(item.loop);
      const Vec2 anchor1 = loop.vertex(item.first_edge + 1);
      const Vec2 anchor2 = loop.vertex(item.first_edge + item.edges - 1);
      Item next = item;
      next.shrink = item.shrink + 1;
      next.x1 = lerp(anchor1, item.x1, 0.5);
      next.x2 = lerp(anchor2, item.x2, 0.5);
      Arc shrunk = make_arc(set, next.loop, next.first_edge, next.edges, next.x1, next.x2);
      next.gain = jensen_gap(shrunk, integrand);
      if (next.gain >= min_gain) queue.push(std::move(next));
      continue;
    }
    item.resolved = true;
    if (sr.status == Status::shortened) {
      if (normal_spread(sr.arc) <= params.flat_tol) continue;
      item.arc = std::move(sr.arc);
      item.gain = jensen_gap(item.arc, integrand);
      item.edges = item.arc.edge_count();
      queue.push(std::move(item));
      continue;
    }
    item.arc = std::move(arc);
    item.gain = jensen_gap(item.arc, integrand);
    queue.push(std::move(item));
  }
  return result;
}

std::string describe(const Candidate& c) {
  std::ostringstream os;
  os.precision(17);
  if (c.kind == Candidate::Kind::island) {
    os << "island loop " << c.island_loop;
  } else {
    os << "arc " << c.arc.start() << " -> " << c.arc.end() << " (" << c.arc.edge_count() << " edges)";
  }
  return os.str();
}

}  // namespace

ArcSearch find_replaceable_arc(const PolygonalSet& set, const Window& window, const Integrand& integrand,
                               const DescentParams& params, double min_gain) {
  return search(set, window, integrand, params, min_gain, {});
}

PolygonalSet apply_replacement(const PolygonalSet& set, const Candidate& candidate) {
  return candidate.side == RegionSide::inside_E ? set_difference(set, candidate.region)
                                                : set_union(set, candidate.region);
}

DescentResult descend(const PolygonalSet& initial, const Window& window, const Integrand& integrand,
                      const DescentParams& params, const StepObserver& on_step) {
  params.validate();
  DescentResult out{initial, {}};
  auto& trace = out.trace;
  double energy = phi_total(out.set, window, integrand);
  trace.initial_energy = energy;
  Excluded excluded;

  trace.termination = Termination::max_steps;
  std::size_t attempts = 0;
  while (trace.steps.size() < params.max_steps && attempts < params.max_steps + 64) {
    ++attempts;
    const auto found = search(out.set, window, integrand, params, std::max(params.gain_tol, kGainFloor) * energy, excluded);
    if (!found.best) {
      trace.termination = found.nonflat_candidates == 0 ? Termination::converged_flat : Termination::gain_below_tol;
      break;
    }
    const Candidate& cand = *found.best;
    const auto key = cand.kind == Candidate::Kind::island
                         ? std::pair{out.set.loop(cand.island_loop).vertex(0), out.set.loop(cand.island_loop).vertex(0)}
                         : std::pair{cand.arc.start(), cand.arc.end()};

    std::optional<PolygonalSet> next;
    try {
      next = apply_replacement(out.set, cand);
    } catch (const Error& err) {
      trace.defective.push_back(describe(cand) + ": " + err.what());
      excluded.push_back(key);
      continue;
    }
    const double region_area = cand.region.area();
    const double expected_area =
        cand.side == RegionSide::inside_E ? out.set.area() - region_area : out.set.area() + region_area;
    const double next_energy = phi_total(*next, window, integrand);
    if (std::abs(next->area() - expected_area) > 1e-9 * std::max(1.0, std::abs(out.set.area()) + region_area) ||
        !(next_energy < energy)) {
      trace.defective.push_back(describe(cand) + ": competitor does not differ from E by the region");
      excluded.push_back(key);
      continue;
    }

    DescentStep step;
    step.index = trace.steps.size();
    step.kind = cand.kind;
    if (cand.kind == Candidate::Kind::chord) {
      step.arc_start = cand.enumerated.start();
      step.arc_end = cand.enumerated.end();
      step.chord_start = cand.chord.start;
      step.chord_end = cand.chord.end;
      step.arc_edges = cand.arc.edge_count();
      step.shortened = cand.enumerated.points != cand.arc.points;
    } else {
      step.arc_start = step.arc_end = step.chord_start = step.chord_end = key.first;
      step.arc_edges = out.set.loop(cand.island_loop).size();
    }
    step.side = cand.side;
    step.region_area = region_area;
    step.energy_before = energy;
    step.energy_after = next_energy;
    step.gain = cand.gain;
    trace.steps.push_back(step);

    out.set = std::move(*next);
    energy = next_energy;
    if (on_step) on_step(step, out.set);
    excluded.clear();
  }
  trace.final_energy = energy;
  return out;
}

}  // namespace aniso
