#include <aniso/arc.hpp>
#include <aniso/boolean.hpp>
#include <aniso/error.hpp>
#include <aniso/gauss_green.hpp>

#include "../support/shapes.hpp"

#include <doctest.h>

#include <cmath>

using namespace aniso;
using namespace aniso::testing;

namespace {

// Membership oracle at random points kept away from every boundary.
void check_membership(const PolygonalSet& out, const PolygonalSet& a, const PolygonalSet& b, char op, Rng& rng) {
  const auto ra = a.raw_loops();
  const auto rb = b.raw_loops();
  const auto ro = out.raw_loops();
  for (int k = 0; k < 400; ++k) {
    const Vec2 p{uniform(rng, -4, 4), uniform(rng, -4, 4)};
    if (a.distance_to_boundary(p) < 1e-6 || (!b.empty() && b.distance_to_boundary(p) < 1e-6)) continue;
    const bool in_a = inside_even_odd(ra, p);
    const bool in_b = !rb.empty() && inside_even_odd(rb, p);
    const bool expect = op == '-' ? (in_a && !in_b) : op == '+' ? (in_a || in_b) : (in_a && in_b);
    CHECK(inside_even_odd(ro, p) == expect);
  }
}

}  // namespace

TEST_CASE("corner notch difference gives a pentagon") {
  const PolygonalSet sq({rect(0, 0, 1, 1)});
  const PolygonalSet notch({{{0.5, 0}, {1, 0}, {1, 0.5}}});
  const auto f = set_difference(sq, notch);
  REQUIRE(f.loops().size() == 1);
  CHECK(f.loop(0).size() == 5);
  CHECK(f.area() == doctest::Approx(1.0 - 0.125));
  // Perimeter: 4 - (0.5 + 0.5) + chord.
  CHECK(f.perimeter() == doctest::Approx(3.0 + std::sqrt(0.5)));
}

TEST_CASE("union with a dent region fills the dent") {
  const PolygonalSet dent({{{0, 0}, {4, 0}, {4, 4}, {3, 4}, {2, 2}, {1, 4}, {0, 4}}});
  const PolygonalSet g({{{1, 4}, {2, 2}, {3, 4}}});
  const auto f = set_union(dent, g);
  REQUIRE(f.loops().size() == 1);
  CHECK(f.loop(0).size() == 4);
  CHECK(f.area() == doctest::Approx(16.0));
}

TEST_CASE("empty operands") {
  const PolygonalSet sq({rect(0, 0, 1, 1)});
  CHECK(set_difference(sq, PolygonalSet{}).area() == doctest::Approx(1.0));
  CHECK(set_union(sq, PolygonalSet{}).area() == doctest::Approx(1.0));
  CHECK(set_union(PolygonalSet{}, sq).area() == doctest::Approx(1.0));
  CHECK(set_intersection(sq, PolygonalSet{}).empty());
  CHECK(set_difference(sq, sq).empty());
}

TEST_CASE("disjoint, nested and edge-sharing cases") {
  const PolygonalSet a({rect(0, 0, 2, 2)});
  const PolygonalSet far({rect(3, 0, 4, 1)});
  CHECK(set_union(a, far).loops().size() == 2);
  CHECK(set_difference(a, far).area() == doctest::Approx(4.0));
  const PolygonalSet inner({rect(0.5, 0.5, 1, 1)});
  const auto holed = set_difference(a, inner);
  CHECK(holed.loops().size() == 2);
  CHECK(holed.area() == doctest::Approx(3.75));
  CHECK(set_union(holed, inner).loops().size() == 1);
  const PolygonalSet side({rect(2, 0, 3, 2)});
  const auto merged = set_union(a, side);
  REQUIRE(merged.loops().size() == 1);
  CHECK(merged.loop(0).size() == 4);
  CHECK(merged.area() == doctest::Approx(6.0));
  const PolygonalSet half({rect(1, 0, 2, 2)});
  CHECK(set_difference(a, half).area() == doctest::Approx(2.0));
  CHECK(set_intersection(a, half).area() == doctest::Approx(2.0));
  // Touching at a single corner.
  const PolygonalSet diag({rect(2, 2, 3, 3)});
  CHECK(set_union(a, diag).area() == doctest::Approx(5.0));
}

TEST_CASE("random boolean operations against a membership oracle") {
  Rng rng(31);
  for (int k = 0; k < 60; ++k) {
    const PolygonalSet a({random_star(rng, 5 + rng() % 20, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.5, 2.0)});
    const PolygonalSet b({random_star(rng, 5 + rng() % 20, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.5, 2.0)});
    const auto d = set_difference(a, b);
    const auto u = set_union(a, b);
    const auto i = set_intersection(a, b);
    check_membership(d, a, b, '-', rng);
    check_membership(u, a, b, '+', rng);
    check_membership(i, a, b, '*', rng);
    CHECK(u.area() == doctest::Approx(a.area() + b.area() - i.area()).epsilon(1e-10));
    CHECK(d.area() == doctest::Approx(a.area() - i.area()).epsilon(1e-10));
  }
}

TEST_CASE("area bookkeeping for chord regions") {
  Rng rng(41);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const PolygonalSet e({random_star(rng, 12, {0, 0}, 0.5, 2.0)});
    const std::size_t first = rng() % 12;
    const Arc arc = make_arc(e, 0, first, 2 + rng() % 4);
    const auto sr = shorten_chord(arc, e);
    if (sr.status == ShortenResult::Status::degenerate || sr.status == ShortenResult::Status::blocked) continue;
    const auto g = enclosed_region(sr.arc, sr.chord);
    if (g.empty() || !region_is_clear(sr.arc, g, e)) continue;
    const auto side = classify_region(g, e);
    if (side == RegionSide::inside_E) {
      const auto f = set_difference(e, g);
      CHECK(std::abs(e.area() - f.area() - g.area()) <= 1e-10 * e.area());
    } else {
      const auto f = set_union(e, g);
      CHECK(std::abs(f.area() - e.area() - g.area()) <= 1e-10 * e.area());
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("Gauss-Green identities on the documented examples") {
  const Window w = Window::disk({0, 0}, 10);
  const PolygonalSet sq({rect(0, 0, 1, 1)});
  auto r = check_gauss_green_identities(sq, sq, w);
  CHECK(r.passes);
  CHECK(r.difference_boundary == doctest::Approx(0.0));
  CHECK(r.E_in_F0 == doctest::Approx(0.0));
  CHECK(r.F_in_E1 == doctest::Approx(0.0));
  CHECK(r.normals_opposite == doctest::Approx(0.0));
  CHECK(r.normals_equal == doctest::Approx(4.0));

  const PolygonalSet other({rect(3, 0, 4, 1)});
  r = check_gauss_green_identities(sq, other, w);
  CHECK(r.passes);
  CHECK(r.union_boundary == doctest::Approx(8.0));

  // F = right half of E: E \ F is the left half, perimeter 3.
  const PolygonalSet right({rect(0.5, 0, 1, 1)});
  r = check_gauss_green_identities(sq, right, w);
  CHECK(r.passes);
  CHECK(r.difference_boundary == doctest::Approx(3.0));
  CHECK(r.E_in_F0 == doctest::Approx(2.0));  // left edge and the left halves of top and bottom
  CHECK(r.F_in_E1 == doctest::Approx(1.0));  // the cut at x = 0.5
  CHECK(r.normals_opposite == doctest::Approx(0.0));
  CHECK(r.normals_equal == doctest::Approx(2.0));  // right edge and right halves of top and bottom
  CHECK(r.federer_defect == doctest::Approx(0.0));
}

TEST_CASE("Gauss-Green identities on random pairs") {
  Rng rng(51);
  const Window w = Window::disk({0, 0}, 2.5);
  for (int k = 0; k < 40; ++k) {
    const PolygonalSet a({random_star(rng, 4 + rng() % 12, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.4, 1.8)});
    const PolygonalSet b({random_star(rng, 4 + rng() % 12, {uniform(rng, -1, 1), uniform(rng, -1, 1)}, 0.4, 1.8)});
    const auto r = check_gauss_green_identities(a, b, w);
    CHECK(r.passes);
    CHECK(r.difference_discrepancy <= r.tolerance);
    CHECK(r.union_discrepancy <= r.tolerance);
  }
}

TEST_CASE("measure discrepancy on a common refinement") {
  const std::vector<DirectedSegment> a{{{0, 0}, {2, 0}}};
  const std::vector<DirectedSegment> b{{{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}};
  CHECK(measure_discrepancy(a, b) == doctest::Approx(0.0));
  const std::vector<DirectedSegment> rev{{{2, 0}, {0, 0}}};
  CHECK(measure_discrepancy(a, rev) == doctest::Approx(4.0));  // opposite normals
  CHECK(measure_discrepancy(a, {}) == doctest::Approx(2.0));
}
