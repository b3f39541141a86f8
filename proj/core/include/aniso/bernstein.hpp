#pragma once

#include <aniso/integrand.hpp>
#include <aniso/polygon.hpp>
#include <aniso/window.hpp>

#include <string>

namespace aniso {

/// Two parallel lines L1 = {x.t = -1}, L2 = {x.t = 1} with t = rotate_ccw(s).
struct LineGapConfig {
  Vec2 s{1.0, 0.0};
  /// false: E is the slab between the lines; true: E is the outside of the slab.
  bool complement = false;
};

struct BernsteinReport {
  Vec2 s;
  Vec2 t;
  double a = 0.0;  // max(I(s), I(-s))
  double b = 0.0;  // min(I(t), I(-t))
  double rho_min = 0.0;
  double rho = 0.0;
  double delta = 0.0;
  /// Energies over the closed rectangle R, where the two sets differ.
  double energy_E = 0.0;
  double energy_F = 0.0;
  /// Energies over the fattened rectangle; they differ by the same amount.
  double window_energy_E = 0.0;
  double window_energy_F = 0.0;
  /// Energy of the line pieces removed by the competitor; at least 4 rho b.
  double removed = 0.0;
  /// Energy of the rectangle sides added by the competitor; at most 4 a.
  double added = 0.0;
  double chain_lower = 0.0;  // 4 rho b
  double chain_upper = 0.0;  // 4 a
  bool passes = false;
  std::string explanation;
  PolygonalSet set_E;
  PolygonalSet set_F;
  Window window = Window::box(-1.0, -1.0, 1.0, 1.0);  // fattened rectangle
};

/// Rectangle competitor against a pair of parallel lines: F = E \ R or E u R
/// with R = {|x.s| < rho, |x.t| < 1}, energies measured over the fattened
/// rectangle {|x.s| < rho + delta, |x.t| < 1 + delta}. Passes when rho exceeds
/// rho_min = a / b and the competitor is strictly cheaper.
BernsteinReport bernstein_check(const LineGapConfig& config, const Integrand& integrand, double rho,
                                double delta = 0.1);

}  // namespace aniso
