#pragma once

#include <aniso/polygon.hpp>
#include <aniso/vec2.hpp>

#include <cstddef>
#include <vector>

namespace aniso {

/// Contiguous run of boundary edges of one loop, from x1 = points.front() to
/// x2 = points.back(). The first and last edges may be partial loop edges.
struct Arc {
  std::size_t loop = 0;
  /// Loop edge that contains the arc's first edge.
  std::size_t first_edge = 0;
  std::vector<Vec2> points;

  std::size_t edge_count() const { return points.empty() ? 0 : points.size() - 1; }
  Vec2 start() const { return points.front(); }
  Vec2 end() const { return points.back(); }
  Vec2 edge_vector(std::size_t i) const { return points[i + 1] - points[i]; }
  double edge_length(std::size_t i) const { return norm(edge_vector(i)); }
  Vec2 normal(std::size_t i) const { return normalized(rotate_cw(edge_vector(i))); }

  /// An arc not attached to any set; material on the left of the polyline.
  static Arc from_polyline(std::vector<Vec2> points);
};

/// Arc of `edge_count` whole edges of a loop starting at `first_edge`.
Arc make_arc(const PolygonalSet& set, std::size_t loop, std::size_t first_edge, std::size_t edge_count);
/// Same, with x1 placed on the first edge and x2 on the last edge.
Arc make_arc(const PolygonalSet& set, std::size_t loop, std::size_t first_edge, std::size_t edge_count, Vec2 x1,
             Vec2 x2);

/// Straight segment joining an arc's endpoints, traversed x1 -> x2 so that the
/// competitor keeps the orientation of the loop it is spliced into.
struct Chord {
  Vec2 start;
  Vec2 end;

  double length() const { return distance(start, end); }
  Vec2 normal() const { return normalized(rotate_cw(end - start)); }
};

Chord chord_of(const Arc& arc);

/// Integral of the outward normal over the arc: sum of normal * length.
Vec2 net_normal(const Arc& arc);

/// Maximal pairwise angle between edge normals (0 for a straight arc).
double normal_spread(const Arc& arc);

struct ShortenResult {
  enum class Status {
    unchanged,   // chord meets the boundary only at its endpoints
    shortened,   // arc and chord replaced by a sub-arc and sub-chord
    degenerate,  // chord overlaps a boundary edge over positive length
    blocked,     // chord crosses other boundary and no sub-arc closes up
  };
  Status status = Status::unchanged;
  Arc arc;
  Chord chord;
};

/// Shortens the chord to the first pair of consecutive boundary hits that both
/// lie on the arc, redefining the arc between them. Tangential touches count
/// as hits. The result bounds a Jordan region together with its chord.
ShortenResult shorten_chord(const Arc& arc, const PolygonalSet& set);

/// Bounded region enclosed by arc and chord, as a positively oriented single
/// loop. Empty for a flat arc; throws std::logic_error if not a Jordan curve.
PolygonalSet enclosed_region(const Arc& arc, const Chord& chord);

enum class RegionSide { inside_E, outside_E };

/// Point-in-set classification of the region at an interior sample point kept
/// away from both boundaries. Throws Error(degenerate_region) if no such point.
RegionSide classify_region(const PolygonalSet& region, const PolygonalSet& set);

/// Side of the arc the region lies on, from the orientation of arc + chord.
RegionSide region_side_by_orientation(const Arc& arc);

/// True when no part of the set's boundary other than the arc lies inside the
/// region (required for the region to sit entirely in E or in its complement).
bool region_is_clear(const Arc& arc, const PolygonalSet& region, const PolygonalSet& set);

/// Interior points of a simple loop, best-separated first.
std::vector<Vec2> interior_samples(const Loop& loop, std::size_t max_samples = 8);

}  // namespace aniso
