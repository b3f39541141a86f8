#include <aniso/integrand.hpp>

#include <aniso/error.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aniso {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double p_norm_of(Vec2 v, double p) {
  const double ax = std::abs(v.x);
  const double ay = std::abs(v.y);
  const double scale = std::max(ax, ay);
  return scale * std::pow(std::pow(ax / scale, p) + std::pow(ay / scale, p), 1.0 / p);
}

double tabulated_unit_value(const family::Tabulated& t, Vec2 v) {
  const auto& s = t.samples;
  if (s.size() == 1) return s.front().second;
  double deg = std::atan2(v.y, v.x) * 180.0 / std::numbers::pi;
  if (deg < 0.0) deg += 360.0;
  if (deg >= 360.0) deg -= 360.0;
  // First node strictly after deg; wraps periodically.
  auto hi = std::upper_bound(s.begin(), s.end(), deg, [](double d, const auto& node) { return d < node.first; });
  const auto& right = hi == s.end() ? s.front() : *hi;
  const auto& left = hi == s.begin() ? s.back() : *(hi - 1);
  double a0 = left.first;
  double a1 = right.first;
  double d = deg;
  if (a1 <= a0) {
    a1 += 360.0;
    if (d < a0) d += 360.0;
  }
  const double w = (d - a0) / (a1 - a0);
  return left.second + w * (right.second - left.second);
}

bool tabulated_is_symmetric(const family::Tabulated& t) {
  for (const auto& [deg, value] : t.samples) {
    const double rad = deg * std::numbers::pi / 180.0;
    const Vec2 u = unit_from_angle(rad);
    const double a = tabulated_unit_value(t, u);
    const double b = tabulated_unit_value(t, -u);
    if (std::abs(a - b) > 1e-12 * std::max(a, b)) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::euclidean: return "euclidean";
    case Family::ellipse: return "ellipse";
    case Family::p_norm: return "p_norm";
    case Family::asymmetric_shift: return "asymmetric_shift";
    case Family::crystalline_l1: return "crystalline_l1";
    case Family::crystalline_linf: return "crystalline_linf";
    case Family::tabulated: return "tabulated";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::euclidean, Family::ellipse, Family::p_norm, Family::asymmetric_shift,
                   Family::crystalline_l1, Family::crystalline_linf, Family::tabulated}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Integrand::Integrand(Params params) : params_(std::move(params)) {}

Integrand Integrand::euclidean() { return Integrand(family::Euclidean{}); }

Integrand Integrand::ellipse(double m00, double m01, double m11) {
  if (!(m00 > 0.0) || !(m00 * m11 - m01 * m01 > 0.0) || !std::isfinite(m00 + m01 + m11)) {
    throw Error(ErrorCode::invalid_integrand, "ellipse matrix must be symmetric positive definite");
  }
  return Integrand(family::Ellipse{m00, m01, m11});
}

Integrand Integrand::p_norm(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::invalid_integrand, "p_norm requires 1 < p < infinity");
  }
  return Integrand(family::PNorm{p});
}

Integrand Integrand::asymmetric_shift(Vec2 c) {
  if (!(norm(c) < 1.0)) {
    throw Error(ErrorCode::invalid_integrand, "asymmetric_shift requires |c| < 1");
  }
  Integrand out(family::AsymmetricShift{c});
  out.symmetric_ = c.x == 0.0 && c.y == 0.0;
  return out;
}

Integrand Integrand::crystalline_l1() { return Integrand(family::CrystallineL1{}); }

Integrand Integrand::crystalline_linf() { return Integrand(family::CrystallineLinf{}); }

Integrand Integrand::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw Error(ErrorCode::invalid_integrand, "tabulated integrand needs at least one sample");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [deg, value] = samples[i];
    if (!(deg >= 0.0 && deg < 360.0)) {
      throw Error(ErrorCode::invalid_integrand, "tabulated angles must lie in [0, 360)");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::invalid_integrand, "tabulated values must be positive and finite");
    }
    if (i > 0 && !(deg > samples[i - 1].first)) {
      throw Error(ErrorCode::invalid_integrand, "tabulated angles must be strictly increasing");
    }
  }
  family::Tabulated t{std::move(samples)};
  const bool sym = tabulated_is_symmetric(t);
  Integrand out(std::move(t));
  out.symmetric_ = sym;
  return out;
}

double Integrand::eval(Vec2 v) const {
  if (v.x == 0.0 && v.y == 0.0) throw std::domain_error("integrand evaluated at the zero vector");
  return std::visit(
      Overloaded{
          [&](const family::Euclidean&) { return norm(v); },
          [&](const family::Ellipse& e) {
            // Factor out |v| so the result is homogeneous up to rounding.
            const double r = norm(v);
            const Vec2 u = v / r;
            return r * std::sqrt(e.m00 * u.x * u.x + 2.0 * e.m01 * u.x * u.y + e.m11 * u.y * u.y);
          },
          [&](const family::PNorm& p) { return p_norm_of(v, p.p); },
          [&](const family::AsymmetricShift& s) { return norm(v) + dot(s.c, v); },
          [&](const family::CrystallineL1&) { return std::abs(v.x) + std::abs(v.y); },
          [&](const family::CrystallineLinf&) { return std::max(std::abs(v.x), std::abs(v.y)); },
          [&](const family::Tabulated& t) { return norm(v) * tabulated_unit_value(t, v); },
      },
      params_);
}

Family Integrand::family() const { return static_cast<Family>(params_.index()); }

std::optional<bool> Integrand::strictly_convex_declared() const {
  switch (family()) {
    case Family::euclidean:
    case Family::ellipse:
    case Family::p_norm:
    case Family::asymmetric_shift: return true;
    case Family::crystalline_l1:
    case Family::crystalline_linf: return false;
    case Family::tabulated: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::vector<Vec2> sample_circle(std::size_t n) {
  std::vector<Vec2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(unit_from_angle(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n)));
  }
  return out;
}

void require_samples(std::size_t n_samples) {
  if (n_samples < 8) throw Error(ErrorCode::invalid_argument, "n_samples must be at least 8");
}

}  // namespace

StrictConvexityReport strict_convexity_check(const Integrand& integrand, std::size_t n_samples, double margin_tol) {
  require_samples(n_samples);
  if (!(margin_tol >= 0.0)) throw Error(ErrorCode::invalid_argument, "margin_tol must be nonnegative");
  const auto dirs = sample_circle(n_samples);
  std::vector<double> values(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) values[i] = integrand.eval(dirs[i]);

  StrictConvexityReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  const double tol = kTol.parallel_angle;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const double sep = angle_between(dirs[i], dirs[j]);
      if (sep <= tol || sep >= std::numbers::pi - tol) continue;
      const double slack = values[i] + values[j] - integrand.eval(dirs[i] + dirs[j]);
      if (slack < report.worst_slack) {
        report.worst_slack = slack;
        report.worst_u = dirs[i];
        report.worst_v = dirs[j];
      }
    }
  }
  report.is_strict = report.worst_slack > margin_tol;
  return report;
}

double max_convexity_violation(const Integrand& integrand, std::size_t n_samples) {
  require_samples(n_samples);
  const auto dirs = sample_circle(n_samples);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i; j < dirs.size(); ++j) {
      const Vec2 sum = dirs[i] + dirs[j];
      if (norm(sum) < 1e-12) continue;
      worst = std::max(worst, integrand.eval(sum) - integrand.eval(dirs[i]) - integrand.eval(dirs[j]));
    }
  }
  return worst;
}

ComparabilityBounds comparability_bounds(const Integrand& integrand, std::size_t n_samples) {
  require_samples(n_samples);
  auto dirs = sample_circle(n_samples);
  if (const auto* t = std::get_if<family::Tabulated>(&integrand.params())) {
    for (const auto& node : t->samples) dirs.push_back(unit_from_angle(node.first * std::numbers::pi / 180.0));
  }
  ComparabilityBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (const Vec2 d : dirs) {
    const double value = integrand.eval(d);
    b.c_lower = std::min(b.c_lower, value);
    b.C_upper = std::max(b.C_upper, value);
  }
  return b;
}

}  // namespace aniso
