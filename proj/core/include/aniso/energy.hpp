#pragma once

#include <aniso/arc.hpp>
#include <aniso/integrand.hpp>
#include <aniso/polygon.hpp>
#include <aniso/window.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace aniso {

struct EdgeContribution {
  std::size_t loop = 0;
  std::size_t edge = 0;
  Vec2 normal;
  double clipped_length = 0.0;
  double value = 0.0;  // integrand at the normal
  double contribution = 0.0;
};

struct EnergyBreakdown {
  double total = 0.0;
  std::vector<double> per_loop;
  std::vector<EdgeContribution> edges;
};

/// Anisotropic perimeter of `set` inside the window: sum over edges of the
/// integrand at the outward normal times the length of the edge inside the
/// closed window. Edges lying on the window boundary count fully.
EnergyBreakdown phi(const PolygonalSet& set, const Window& window, const Integrand& integrand);
/// Unclipped anisotropic perimeter.
EnergyBreakdown phi(const PolygonalSet& set, const Integrand& integrand);

double phi_total(const PolygonalSet& set, const Window& window, const Integrand& integrand);

/// Energy of the arc: sum of integrand(normal) * length over its edges.
double arc_energy(const Arc& arc, const Integrand& integrand);

/// Energy of the replacing chord, computed as the integrand at the arc's net
/// normal. Throws std::domain_error for closed arcs (x1 == x2).
double chord_energy(const Arc& arc, const Integrand& integrand);

/// arc_energy - chord_energy: nonnegative for convex integrands, positive for
/// non-flat arcs under strictly convex ones.
double jensen_gap(const Arc& arc, const Integrand& integrand);

/// CSV table: loop,edge,normal_x,normal_y,length,value,contribution.
std::string to_csv(const EnergyBreakdown& breakdown);

}  // namespace aniso
