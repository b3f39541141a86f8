#pragma once

#include <aniso/polygon.hpp>

namespace aniso {

// Boolean operations by reduced-boundary bookkeeping: both boundaries are split
// at their contact points and each fragment is kept or dropped according to
// the density of the other set along it, with coincident fragments resolved by
// comparing normals. Throws Error(boolean_failure) when the kept fragments do
// not close into a valid set.

/// E \ G: fragments of dE outside G, reversed fragments of dG inside E, and
/// shared fragments with opposite normals.
PolygonalSet set_difference(const PolygonalSet& e, const PolygonalSet& g);

/// E u G: fragments of each boundary outside the other set, and shared
/// fragments with equal normals.
PolygonalSet set_union(const PolygonalSet& e, const PolygonalSet& g);

PolygonalSet set_intersection(const PolygonalSet& e, const PolygonalSet& g);

}  // namespace aniso
