#include <aniso/gauss_green.hpp>

#include <aniso/boolean.hpp>
#include <aniso/error.hpp>
#include <aniso/predicates.hpp>
#include <aniso/tolerances.hpp>

#include "arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aniso {

double measure_discrepancy(const std::vector<DirectedSegment>& a, const std::vector<DirectedSegment>& b) {
  const double eps = kTol.on_segment;
  struct Weighted {
    Vec2 p;
    Vec2 q;
    double sign;
  };
  std::vector<Weighted> all;
  for (const auto& s : a) all.push_back({s.first, s.second, 1.0});
  for (const auto& s : b) all.push_back({s.first, s.second, -1.0});
  std::vector<Vec2> nodes;
  for (const auto& w : all) {
    nodes.push_back(w.p);
    nodes.push_back(w.q);
  }

  // Refine every segment at all nodes lying on its interior.
  struct Piece {
    Vec2 p;
    Vec2 q;
    Vec2 weight;
  };
  std::vector<Piece> pieces;
  for (const auto& w : all) {
    std::vector<std::pair<double, Vec2>> cuts;
    for (const Vec2 n : nodes) {
      if (distance(n, w.p) <= eps || distance(n, w.q) <= eps) continue;
      if (distance_to_segment(n, w.p, w.q) <= eps) cuts.emplace_back(project_param(n, w.p, w.q), n);
    }
    std::sort(cuts.begin(), cuts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Vec2 prev = w.p;
    for (const auto& c : cuts) {
      if (distance(prev, c.second) <= eps) continue;
      pieces.push_back({prev, c.second, rotate_cw(c.second - prev) * w.sign});
      prev = c.second;
    }
    if (distance(prev, w.q) > eps) pieces.push_back({prev, w.q, rotate_cw(w.q - prev) * w.sign});
  }

  // Sum the weights of coincident pieces.
  std::vector<bool> done(pieces.size(), false);
  double total = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (done[i]) continue;
    Vec2 sum = pieces[i].weight;
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (done[j]) continue;
      const bool same = distance(pieces[i].p, pieces[j].p) <= eps && distance(pieces[i].q, pieces[j].q) <= eps;
      const bool flip = distance(pieces[i].p, pieces[j].q) <= eps && distance(pieces[i].q, pieces[j].p) <= eps;
      if (same || flip) {
        sum += pieces[j].weight;
        done[j] = true;
      }
    }
    total += norm(sum);
  }
  return total;
}

namespace {

std::vector<DirectedSegment> clipped_boundary(const PolygonalSet& set, const Window& window) {
  std::vector<DirectedSegment> out;
  for (const auto& loop : set.loops()) {
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vec2 a = loop.vertex(i);
      const Vec2 b = loop.vertex(i + 1);
      if (const auto r = window.clip(a, b)) out.emplace_back(lerp(a, b, r->first), lerp(a, b, r->second));
    }
  }
  return out;
}

}  // namespace

GaussGreenReport check_gauss_green_identities(const PolygonalSet& e, const PolygonalSet& f, const Window& window) {
  GaussGreenReport r;
  const auto arr = detail::build_arrangement(e, f);
  const auto& fr = arr.fragments;

  std::vector<DirectedSegment> oracle_difference;
  std::vector<DirectedSegment> oracle_union;

  for (std::size_t i = 0; i < fr.size(); ++i) {
    const auto& frag = fr[i];
    const bool from_e = frag.owner == 0;
    // Each coincident pair is visited once, through its E copy.
    if (!from_e && frag.twin >= 0) continue;
    const auto range = window.clip(frag.a, frag.b);
    if (!range) continue;
    const double full = distance(frag.a, frag.b);
    const double len = (range->second - range->first) * full;
    const Vec2 ca = lerp(frag.a, frag.b, range->first);
    const Vec2 cb = lerp(frag.a, frag.b, range->second);

    // Side samples, closer than any other fragment.
    const Vec2 mid = lerp(frag.a, frag.b, 0.5);
    double clearance = 0.25 * full;
    for (std::size_t j = 0; j < fr.size(); ++j) {
      if (j == i || static_cast<int>(j) == frag.twin) continue;
      clearance = std::min(clearance, 0.5 * distance_to_segment(mid, fr[j].a, fr[j].b));
    }
    const double h = std::max(clearance, 1e-300);
    const Vec2 n = normalized(rotate_cw(frag.b - frag.a));
    const Vec2 right = mid + n * h;
    const Vec2 left = mid - n * h;
    const bool e_left = e.contains(left), e_right = e.contains(right);
    const bool f_left = f.contains(left), f_right = f.contains(right);

    // Reduced boundary of each set: material on the left, void on the right.
    if (from_e || frag.twin >= 0) {
      if (!(e_left && !e_right)) r.federer_defect += len;
    }
    if (!from_e || frag.twin >= 0) {
      const bool f_forward = !from_e || frag.twin_same;
      const bool ok = f_forward ? (f_left && !f_right) : (f_right && !f_left);
      if (!ok) r.federer_defect += len;
    }

    // Oracle: jumps of the indicators of E \ F and E u F.
    const bool d_left = e_left && !f_left, d_right = e_right && !f_right;
    const bool u_left = e_left || f_left, u_right = e_right || f_right;
    Vec2 lhs_diff;
    if (d_left != d_right) {
      lhs_diff = d_left ? n * len : -n * len;
      r.difference_boundary += len;
      oracle_difference.push_back(d_left ? DirectedSegment{ca, cb} : DirectedSegment{cb, ca});
    }
    const bool on_union = u_left != u_right;
    if (on_union) {
      r.union_boundary += len;
      oracle_union.push_back(u_left ? DirectedSegment{ca, cb} : DirectedSegment{cb, ca});
    }

    // Formula terms.
    Vec2 rhs_diff;
    bool in_union_rhs = false;
    if (frag.twin >= 0) {
      if (frag.twin_same) {
        r.normals_equal += len;
        in_union_rhs = true;
      } else {
        r.normals_opposite += len;
        rhs_diff = n * len;
      }
    } else if (from_e) {
      if (f.contains(mid)) {
        r.E_in_F1 += len;
      } else {
        r.E_in_F0 += len;
        rhs_diff = n * len;
        in_union_rhs = true;
      }
    } else {
      if (e.contains(mid)) {
        r.F_in_E1 += len;
        rhs_diff = -n * len;
      } else {
        r.F_in_E0 += len;
        in_union_rhs = true;
      }
    }
    r.difference_discrepancy += norm(lhs_diff - rhs_diff);
    if (in_union_rhs != on_union) r.union_discrepancy += len;
  }

  for (const auto& s : clipped_boundary(e, window)) r.perimeter_E += distance(s.first, s.second);
  for (const auto& s : clipped_boundary(f, window)) r.perimeter_F += distance(s.first, s.second);
  r.difference_rhs = r.E_in_F0 + r.F_in_E1 + r.normals_opposite;
  r.union_rhs = r.E_in_F0 + r.F_in_E0 + r.normals_equal;

  try {
    r.boolean_difference_discrepancy =
        measure_discrepancy(clipped_boundary(set_difference(e, f), window), oracle_difference);
  } catch (const Error&) {
    r.boolean_difference_discrepancy = std::numeric_limits<double>::infinity();
  }
  try {
    r.boolean_union_discrepancy = measure_discrepancy(clipped_boundary(set_union(e, f), window), oracle_union);
  } catch (const Error&) {
    r.boolean_union_discrepancy = std::numeric_limits<double>::infinity();
  }

  r.tolerance = 1e-9 * std::max(r.perimeter_E + r.perimeter_F, 1.0);
  r.passes = r.difference_discrepancy <= r.tolerance && r.union_discrepancy <= r.tolerance &&
             r.federer_defect <= r.tolerance && std::abs(r.difference_boundary - r.difference_rhs) <= r.tolerance &&
             std::abs(r.union_boundary - r.union_rhs) <= r.tolerance &&
             r.boolean_difference_discrepancy <= r.tolerance && r.boolean_union_discrepancy <= r.tolerance;
  return r;
}

}  // namespace aniso
