#pragma once

// Overlay of two polygonal boundaries split at every mutual contact point.

#include <aniso/polygon.hpp>

#include <vector>

namespace aniso::detail {

struct Fragment {
  Vec2 a;
  Vec2 b;
  int owner = 0;        // 0: first set, 1: second set
  int twin = -1;        // coincident fragment of the other set, if any
  bool twin_same = false;  // twin runs in the same direction
};

struct Arrangement {
  std::vector<Fragment> fragments;
};

Arrangement build_arrangement(const PolygonalSet& first, const PolygonalSet& second);

/// Joins directed segments into closed loops, taking the leftmost turn at
/// vertices where several continue. Throws Error(boolean_failure) on dangling ends.
std::vector<std::vector<Vec2>> stitch_loops(const std::vector<std::pair<Vec2, Vec2>>& segments);

}  // namespace aniso::detail
