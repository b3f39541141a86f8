#pragma once

#include <aniso/polygon.hpp>
#include <aniso/window.hpp>

#include <utility>
#include <vector>

namespace aniso {

/// Directed segment carrying the vector measure normal * H^1 (normal on its right).
using DirectedSegment = std::pair<Vec2, Vec2>;

/// Total variation of the difference of two vector measures supported on
/// finite unions of segments, computed on their common refinement.
double measure_discrepancy(const std::vector<DirectedSegment>& a, const std::vector<DirectedSegment>& b);

/// Window-restricted H^1 accounting of the boundary identities for E \ F and
/// E u F. Terms follow the split of each boundary by the density of the other
/// set; left-hand sides come from an independent oracle that samples the set
/// indicators on both sides of every boundary fragment.
struct GaussGreenReport {
  double perimeter_E = 0.0;
  double perimeter_F = 0.0;
  // dE split by F, dF split by E.
  double E_in_F0 = 0.0;
  double E_in_F1 = 0.0;
  double F_in_E0 = 0.0;
  double F_in_E1 = 0.0;
  double normals_equal = 0.0;
  double normals_opposite = 0.0;
  // Oracle reduced boundaries.
  double difference_boundary = 0.0;
  double union_boundary = 0.0;
  // Right-hand sides: |mu_E|F0| + |mu_F|E1| + H1{nu_E = -nu_F}, and the union analogue.
  double difference_rhs = 0.0;
  double union_rhs = 0.0;
  double difference_discrepancy = 0.0;  // total variation of (lhs - rhs)
  double union_discrepancy = 0.0;       // H^1 of the symmetric difference of the two sets
  double federer_defect = 0.0;          // boundary length lacking a density jump
  double boolean_difference_discrepancy = 0.0;  // set_difference output vs oracle
  double boolean_union_discrepancy = 0.0;       // set_union output vs oracle
  double tolerance = 0.0;
  bool passes = false;
};

GaussGreenReport check_gauss_green_identities(const PolygonalSet& e, const PolygonalSet& f, const Window& window);

}  // namespace aniso
