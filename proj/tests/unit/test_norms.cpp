#include <aniso/error.hpp>
#include <aniso/integrand.hpp>

#include "../support/shapes.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace aniso;
using namespace aniso::testing;

TEST_CASE("eval on the documented examples") {
  CHECK(Integrand::euclidean().eval({3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  const auto ell = Integrand::ellipse(1, 0, 4);
  CHECK(ell.eval({0, 1}) == doctest::Approx(2.0));
  CHECK(ell.eval({1, 0}) == doctest::Approx(1.0));
  const auto shift = Integrand::asymmetric_shift({0.5, 0});
  CHECK(shift.eval({1, 0}) == doctest::Approx(1.5));
  CHECK(shift.eval({-1, 0}) == doctest::Approx(0.5));
  CHECK_FALSE(shift.symmetric());
  CHECK(Integrand::crystalline_l1().eval({1, -1}) == doctest::Approx(2.0));
  CHECK(Integrand::crystalline_linf().eval({3, -4}) == doctest::Approx(4.0));
  CHECK(Integrand::p_norm(3).eval({1, 1}) == doctest::Approx(std::cbrt(2.0)));
}

TEST_CASE("zero vector is a domain error") {
  for (const auto& [name, I] : convex_builtins()) {
    CAPTURE(name);
    CHECK_THROWS_AS(I.eval({0, 0}), std::domain_error);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(Integrand::ellipse(1, 2, 1), Error);  // indefinite
  CHECK_THROWS_AS(Integrand::ellipse(-1, 0, 1), Error);
  CHECK_THROWS_AS(Integrand::p_norm(1.0), Error);
  CHECK_THROWS_AS(Integrand::p_norm(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(Integrand::asymmetric_shift({1.0, 0.0}), Error);
  CHECK_THROWS_AS(Integrand::tabulated({}), Error);
  CHECK_THROWS_AS(Integrand::tabulated({{0, 1}, {90, -1}}), Error);
  try {
    Integrand::p_norm(0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_integrand);
  }
}

TEST_CASE("tabulated integrand interpolates linearly in angle and periodically") {
  const auto tab = Integrand::tabulated({{0, 1}, {90, 2}, {180, 1}, {270, 2}});
  CHECK(tab.eval({1, 0}) == doctest::Approx(1.0));
  CHECK(tab.eval({0, 3}) == doctest::Approx(6.0));
  CHECK(tab.eval(unit_from_angle(std::numbers::pi / 4)) == doctest::Approx(1.5));
  CHECK(tab.eval(unit_from_angle(-std::numbers::pi / 4)) == doctest::Approx(1.5));  // wraps past 360
  CHECK_FALSE(tab.strictly_convex_declared().has_value());
  CHECK(tab.symmetric());
}

TEST_CASE("declared strict convexity per family") {
  CHECK(Integrand::euclidean().strictly_convex_declared() == true);
  CHECK(Integrand::ellipse(1, 0, 4).strictly_convex_declared() == true);
  CHECK(Integrand::p_norm(3).strictly_convex_declared() == true);
  CHECK(Integrand::asymmetric_shift({0.5, 0}).strictly_convex_declared() == true);
  CHECK(Integrand::crystalline_l1().strictly_convex_declared() == false);
  CHECK(Integrand::crystalline_linf().strictly_convex_declared() == false);
}

TEST_CASE("homogeneity on random vectors") {
  Rng rng(11);
  for (const auto& [name, I] : convex_builtins()) {
    CAPTURE(name);
    for (int k = 0; k < 500; ++k) {
      const Vec2 v{uniform(rng, -5, 5), uniform(rng, -5, 5)};
      const double t = uniform(rng, 1e-3, 10.0);
      const double lhs = I.eval(v * t);
      CHECK(std::abs(lhs - t * I.eval(v)) <= 1e-12 * lhs);
    }
  }
}

TEST_CASE("convexity of every built-in on sampled pairs") {
  for (const auto& [name, I] : convex_builtins()) {
    CAPTURE(name);
    CHECK(max_convexity_violation(I, 180) <= 1e-12);
  }
}

TEST_CASE("strictness dichotomy at 360 samples") {
  for (const auto& [name, I] : strictly_convex_builtins()) {
    CAPTURE(name);
    CHECK(strict_convexity_check(I, 360, 1e-9).is_strict);
  }
  CHECK_FALSE(strict_convexity_check(Integrand::crystalline_l1(), 360, 1e-9).is_strict);
  CHECK_FALSE(strict_convexity_check(Integrand::crystalline_linf(), 360, 1e-9).is_strict);
}

TEST_CASE("crystalline_l1 has zero slack on the coordinate pair") {
  const auto I = Integrand::crystalline_l1();
  const Vec2 u{1, 0};
  const Vec2 v{0, 1};
  CHECK(I.eval(u + v) == doctest::Approx(I.eval(u) + I.eval(v)));
  const auto rep = strict_convexity_check(I, 8, 0.0);
  CHECK(rep.worst_slack == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("asymmetric shift slack equals Euclidean slack") {
  // |v| + c.v: the linear part cancels in eval(u) + eval(v) - eval(u + v).
  const auto shift = Integrand::asymmetric_shift({0.5, 0});
  const auto euc = Integrand::euclidean();
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Vec2 u = unit_from_angle(uniform(rng, 0, 7));
    const Vec2 v = unit_from_angle(uniform(rng, 0, 7));
    const double s1 = shift.eval(u) + shift.eval(v) - shift.eval(u + v);
    const double s2 = euc.eval(u) + euc.eval(v) - euc.eval(u + v);
    CHECK(s1 == doctest::Approx(s2).epsilon(1e-9));
  }
}

TEST_CASE("comparability bounds") {
  auto b = comparability_bounds(Integrand::euclidean(), 64);
  CHECK(b.c_lower == doctest::Approx(1.0));
  CHECK(b.C_upper == doctest::Approx(1.0));
  b = comparability_bounds(Integrand::ellipse(1, 0, 4), 64);
  CHECK(b.c_lower == doctest::Approx(1.0));
  CHECK(b.C_upper == doctest::Approx(2.0));
  b = comparability_bounds(Integrand::asymmetric_shift({0.5, 0}), 64);
  CHECK(b.c_lower == doctest::Approx(0.5));
  CHECK(b.C_upper == doctest::Approx(1.5));
  // Tabulated nodes are included, so off-grid extremes are still found.
  b = comparability_bounds(Integrand::tabulated({{10, 3}, {100, 0.25}, {200, 1}}), 8);
  CHECK(b.c_lower == doctest::Approx(0.25));
  CHECK(b.C_upper == doctest::Approx(3.0));
  CHECK_THROWS_AS(comparability_bounds(Integrand::euclidean(), 7), Error);
  CHECK_THROWS_AS(strict_convexity_check(Integrand::euclidean(), 4, 0.0), Error);
}

TEST_CASE("positivity above the lower bound") {
  for (const auto& [name, I] : convex_builtins()) {
    CAPTURE(name);
    const auto b = comparability_bounds(I, 360);
    CHECK(b.c_lower > 0.0);
    CHECK(b.c_lower <= b.C_upper);
    for (int k = 0; k < 360; ++k) CHECK(I.eval(unit_from_angle(k * std::numbers::pi / 180)) >= b.c_lower - 1e-15);
  }
}

TEST_CASE("family names round trip") {
  for (const Family f : {Family::euclidean, Family::ellipse, Family::p_norm, Family::asymmetric_shift,
                         Family::crystalline_l1, Family::crystalline_linf, Family::tabulated}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK_FALSE(family_from_string("wulff").has_value());
}
