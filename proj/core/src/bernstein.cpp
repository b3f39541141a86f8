#include <aniso/bernstein.hpp>

#include <aniso/boolean.hpp>
#include <aniso/energy.hpp>
#include <aniso/error.hpp>

#include <cmath>
#include <sstream>

namespace aniso {

namespace {

// Rectangle {u0 < x.s < u1, v0 < x.t < v1}, counterclockwise.
std::vector<Vec2> rectangle(Vec2 s, Vec2 t, double u0, double u1, double v0, double v1) {
  return {s * u0 + t * v0, s * u1 + t * v0, s * u1 + t * v1, s * u0 + t * v1};
}

}  // namespace

BernsteinReport bernstein_check(const LineGapConfig& config, const Integrand& integrand, double rho, double delta) {
  if (!(norm(config.s) > 0.0) || !std::isfinite(norm(config.s))) {
    throw Error(ErrorCode::invalid_argument, "direction s must be a nonzero vector");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorCode::invalid_argument, "rho must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(ErrorCode::invalid_argument, "delta must be positive");

  BernsteinReport r;
  r.s = normalized(config.s);
  r.t = rotate_ccw(r.s);
  r.rho = rho;
  r.delta = delta;
  r.a = std::max(integrand.eval(r.s), integrand.eval(-r.s));
  r.b = std::min(integrand.eval(r.t), integrand.eval(-r.t));
  r.rho_min = r.a / r.b;
  r.chain_lower = 4.0 * rho * r.b;
  r.chain_upper = 4.0 * r.a;

  // Truncate the lines far outside the fattened rectangle.
  const double far = 4.0 * (rho + delta + 1.0);
  const Vec2 s = r.s;
  const Vec2 t = r.t;
  if (config.complement) {
    r.set_E = PolygonalSet({rectangle(s, t, -far, far, 1.0, far), rectangle(s, t, -far, far, -far, -1.0)});
  } else {
    r.set_E = PolygonalSet({rectangle(s, t, -far, far, -1.0, 1.0)});
  }
  const PolygonalSet rect({rectangle(s, t, -rho, rho, -1.0, 1.0)});
  r.window = Window::polygon(rectangle(s, t, -(rho + delta), rho + delta, -(1.0 + delta), 1.0 + delta));

  // The fattened rectangle may meet the boundary of E only along L1 u L2.
  for (const Loop& loop : r.set_E.loops()) {
    for (std::size_t e = 0; e < loop.size(); ++e) {
      const Vec2 p = loop.vertex(e);
      const Vec2 q = loop.vertex(e + 1);
      if (r.window.clipped_length(p, q) == 0.0) continue;
      const bool on_line = std::abs(std::abs(dot(p, t)) - 1.0) < 1e-12 && std::abs(std::abs(dot(q, t)) - 1.0) < 1e-12;
      if (!on_line) throw Error(ErrorCode::invalid_argument, "fattened rectangle meets boundary off the two lines");
    }
  }

  r.set_F = config.complement ? set_union(r.set_E, rect) : set_difference(r.set_E, rect);
  const Window closed_rect = Window::polygon(rectangle(s, t, -rho, rho, -1.0, 1.0));
  r.energy_E = phi_total(r.set_E, closed_rect, integrand);
  r.energy_F = phi_total(r.set_F, closed_rect, integrand);
  r.window_energy_E = phi_total(r.set_E, r.window, integrand);
  r.window_energy_F = phi_total(r.set_F, r.window, integrand);

  // Removed: L1 and L2 inside R. Added: the two sides of R across the gap.
  r.removed = 2.0 * rho * (integrand.eval(t) + integrand.eval(-t));
  r.added = 2.0 * (integrand.eval(s) + integrand.eval(-s));

  std::ostringstream why;
  why.precision(17);
  if (!(rho > r.rho_min)) {
    r.passes = false;
    why << "rho = " << rho << " does not exceed rho_min = a/b = " << r.rho_min
        << "; 4 rho b > 4 a fails, so the rectangle competitor is not guaranteed cheaper";
  } else if (!(r.window_energy_F < r.window_energy_E)) {
    r.passes = false;
    why << "competitor energy " << r.window_energy_F << " is not below " << r.window_energy_E;
  } else {
    r.passes = true;
    why << "4 rho b = " << r.chain_lower << " > 4 a = " << r.chain_upper << "; energy " << r.window_energy_E << " -> "
        << r.window_energy_F << " over the fattened rectangle";
  }
  r.explanation = why.str();
  return r;
}

}  // namespace aniso
