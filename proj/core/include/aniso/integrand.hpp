#pragma once

#include <aniso/vec2.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace aniso {

namespace family {
struct Euclidean {};
/// sqrt(v . M v) with M symmetric positive definite, stored as {m00, m01, m11}.
struct Ellipse {
  double m00 = 1.0;
  double m01 = 0.0;
  double m11 = 1.0;
};
struct PNorm {
  double p = 2.0;
};
/// |v| + c . v with |c| < 1.
struct AsymmetricShift {
  Vec2 c;
};
struct CrystallineL1 {};
struct CrystallineLinf {};
/// Values on the unit circle, piecewise linear in angle and periodic.
struct Tabulated {
  std::vector<std::pair<double, double>> samples;  // (degrees in [0, 360), value > 0), sorted
};
}  // namespace family

enum class Family { euclidean, ellipse, p_norm, asymmetric_shift, crystalline_l1, crystalline_linf, tabulated };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// A positive 1-homogeneous weight on normal directions. Immutable; eval is
/// pure and may be called concurrently.
class Integrand {
 public:
  using Params = std::variant<family::Euclidean, family::Ellipse, family::PNorm, family::AsymmetricShift,
                              family::CrystallineL1, family::CrystallineLinf, family::Tabulated>;

  static Integrand euclidean();
  static Integrand ellipse(double m00, double m01, double m11);
  static Integrand p_norm(double p);
  static Integrand asymmetric_shift(Vec2 c);
  static Integrand crystalline_l1();
  static Integrand crystalline_linf();
  static Integrand tabulated(std::vector<std::pair<double, double>> degree_value_samples);

  /// 1-homogeneous extension; throws std::domain_error on the zero vector.
  double eval(Vec2 v) const;
  double operator()(Vec2 v) const { return eval(v); }

  Family family() const;
  const Params& params() const { return params_; }

  /// nullopt for tabulated integrands, whose convexity must be tested.
  std::optional<bool> strictly_convex_declared() const;
  bool symmetric() const { return symmetric_; }

 private:
  explicit Integrand(Params params);

  Params params_;
  bool symmetric_ = true;
};

struct StrictConvexityReport {
  bool is_strict = false;
  Vec2 worst_u;
  Vec2 worst_v;
  double worst_slack = 0.0;
};

/// Sampling certificate for the strict triangle inequality over pairs of unit
/// vectors separated by more than kTol.parallel_angle from parallel.
StrictConvexityReport strict_convexity_check(const Integrand& integrand, std::size_t n_samples, double margin_tol);

/// Sampling check of plain (non-strict) convexity: max of
/// eval(u+v) - eval(u) - eval(v) over sampled pairs; <= 0 for convex integrands.
double max_convexity_violation(const Integrand& integrand, std::size_t n_samples);

struct ComparabilityBounds {
  double c_lower = 0.0;
  double C_upper = 0.0;
};

/// Min and max over the unit circle, sampled at n equally spaced angles. For
/// tabulated integrands the sample nodes are added, so the bounds are exact.
ComparabilityBounds comparability_bounds(const Integrand& integrand, std::size_t n_samples);

}  // namespace aniso
