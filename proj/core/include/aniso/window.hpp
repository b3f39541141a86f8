#pragma once

#include <aniso/vec2.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace aniso {

/// Bounded open convex set defining the boundary conditions of a competitor:
/// either a disk or a convex polygon (stored counterclockwise).
class Window {
 public:
  enum class Shape { disk, polygon };

  static Window disk(Vec2 center, double radius);
  static Window polygon(std::vector<Vec2> vertices);
  /// Axis-aligned rectangle [x0, x1] x [y0, y1].
  static Window box(double x0, double y0, double x1, double y1);

  Shape shape() const { return shape_; }
  Vec2 center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }

  /// Distance from p to the window boundary, positive inside, negative outside.
  double signed_distance(Vec2 p) const;
  /// Membership in the open set.
  bool contains(Vec2 p) const { return signed_distance(p) > 0.0; }

  /// Parameter interval [t0, t1] of the segment a + t (b - a), t in [0, 1],
  /// lying in the closed window; nullopt if the intersection is empty or a point.
  std::optional<std::pair<double, double>> clip(Vec2 a, Vec2 b) const;
  double clipped_length(Vec2 a, Vec2 b) const;

  /// Point where the segment from an interior point leaves the closed window.
  /// Returns `outside` when it is not actually outside.
  Vec2 exit_point(Vec2 inside, Vec2 outside) const;

  /// Diameter of the window (2r for disks).
  double diameter() const;

 private:
  Shape shape_ = Shape::disk;
  Vec2 center_;
  double radius_ = 1.0;
  std::vector<Vec2> vertices_;
};

}  // namespace aniso
