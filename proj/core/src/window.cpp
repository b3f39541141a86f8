#include <aniso/window.hpp>

#include <aniso/error.hpp>
#include <aniso/tolerances.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace aniso {

Window Window::disk(Vec2 center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.x) || !std::isfinite(center.y)) {
    throw Error(ErrorCode::invalid_window, "disk window needs a finite center and positive radius");
  }
  Window w;
  w.shape_ = Shape::disk;
  w.center_ = center;
  w.radius_ = radius;
  return w;
}

Window Window::polygon(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) throw Error(ErrorCode::invalid_window, "polygon window needs at least 3 vertices");
  double area2 = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vec2 p = vertices[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::invalid_window, "non-finite window vertex");
    area2 += cross(p, vertices[(i + 1) % vertices.size()]);
  }
  if (area2 == 0.0) throw Error(ErrorCode::invalid_window, "polygon window has empty interior");
  if (area2 < 0.0) std::reverse(vertices.begin(), vertices.end());
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices[i];
    const Vec2 b = vertices[(i + 1) % n];
    const Vec2 c = vertices[(i + 2) % n];
    if (cross(b - a, c - b) < 0.0) throw Error(ErrorCode::invalid_window, "polygon window must be convex");
  }
  Window w;
  w.shape_ = Shape::polygon;
  w.vertices_ = std::move(vertices);
  Vec2 centroid;
  for (const Vec2 v : w.vertices_) centroid += v;
  w.center_ = centroid / static_cast<double>(n);
  return w;
}

Window Window::box(double x0, double y0, double x1, double y1) {
  return polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

double Window::signed_distance(Vec2 p) const {
  if (shape_ == Shape::disk) return radius_ - distance(p, center_);
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 e = vertices_[(i + 1) % n] - a;
    d = std::min(d, cross(e, p - a) / norm(e));
  }
  return d;
}

std::optional<std::pair<double, double>> Window::clip(Vec2 a, Vec2 b) const {
  const Vec2 d = b - a;
  double t0 = 0.0;
  double t1 = 1.0;
  if (shape_ == Shape::disk) {
    const Vec2 f = a - center_;
    const double qa = dot(d, d);
    if (qa == 0.0) return std::nullopt;
    const double qb = 2.0 * dot(f, d);
    const double qc = dot(f, f) - radius_ * radius_;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) return std::nullopt;
    const double s = std::sqrt(disc);
    // Numerically stable roots.
    const double q = -0.5 * (qb + std::copysign(s, qb));
    double r0 = q / qa;
    double r1 = q != 0.0 ? qc / q : -r0;
    if (r0 > r1) std::swap(r0, r1);
    t0 = std::max(t0, r0);
    t1 = std::min(t1, r1);
  } else {
    // Cyrus-Beck against closed half-planes.
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 p = vertices_[i];
      const Vec2 e = vertices_[(i + 1) % n] - p;
      const double num = cross(e, a - p);  // >= 0 inside
      const double den = cross(e, d);
      if (den == 0.0) {
        if (num < -kTol.on_segment * norm(e)) return std::nullopt;
        continue;
      }
      const double t = -num / den;
      if (den > 0.0) {
        t0 = std::max(t0, t);
      } else {
        t1 = std::min(t1, t);
      }
    }
  }
  if (!(t1 > t0)) return std::nullopt;
  return std::pair{t0, t1};
}

double Window::clipped_length(Vec2 a, Vec2 b) const {
  const auto range = clip(a, b);
  if (!range) return 0.0;
  return (range->second - range->first) * distance(a, b);
}

Vec2 Window::exit_point(Vec2 inside, Vec2 outside) const {
  const auto range = clip(inside, outside);
  if (!range || range->second >= 1.0) return outside;
  return lerp(inside, outside, range->second);
}

double Window::diameter() const {
  if (shape_ == Shape::disk) return 2.0 * radius_;
  double d = 0.0;
  for (const Vec2 a : vertices_) {
    for (const Vec2 b : vertices_) d = std::max(d, distance(a, b));
  }
  return d;
}

}  // namespace aniso
