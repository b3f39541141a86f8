#pragma once

#include <aniso/vec2.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace aniso {

/// Closed polygonal loop. Material lies to the left of every directed edge:
/// counterclockwise loops bound islands, clockwise loops bound holes.
class Loop {
 public:
  Loop() = default;
  explicit Loop(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {}

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec2> vertices() const { return vertices_; }
  Vec2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge i runs from vertex(i) to vertex(i + 1).
  Vec2 edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  double edge_length(std::size_t i) const { return norm(edge_vector(i)); }
  Vec2 outward_normal(std::size_t i) const { return normalized(rotate_cw(edge_vector(i))); }

  double signed_area() const;
  bool positive() const { return signed_area() > 0.0; }
  double perimeter() const;
  /// Sum of normal * length over all edges; zero for every closed loop.
  Vec2 net_normal() const;

 private:
  std::vector<Vec2> vertices_;
};

/// Merge near-coincident consecutive vertices and drop collinear ones.
/// Returns an empty vector if fewer than three vertices survive.
std::vector<Vec2> normalize_loop(std::vector<Vec2> vertices);

/// A set whose boundary is a finite disjoint union of simple loops. Always
/// normalized and validated on construction; immutable afterwards.
class PolygonalSet {
 public:
  PolygonalSet() = default;
  /// Normalizes and validates; throws Error(invalid_polygon) on failure.
  explicit PolygonalSet(std::vector<std::vector<Vec2>> loops);

  const std::vector<Loop>& loops() const { return loops_; }
  const Loop& loop(std::size_t i) const { return loops_[i]; }
  bool empty() const { return loops_.empty(); }
  std::size_t edge_count() const;

  double area() const;
  double perimeter() const;

  /// Strict interior membership (winding number > 0). Undefined on the boundary.
  bool contains(Vec2 p) const;
  double distance_to_boundary(Vec2 p) const;

  std::vector<std::vector<Vec2>> raw_loops() const;

 private:
  std::vector<Loop> loops_;
};

/// Per-loop, per-edge outward unit normals.
std::vector<std::vector<Vec2>> outward_normals(const PolygonalSet& set);

/// Throws Error(invalid_polygon) describing the first violation found: loops
/// must be simple, pairwise non-crossing, and oriented consistently with nesting.
void validate_loops(std::span<const Loop> loops);

}  // namespace aniso
