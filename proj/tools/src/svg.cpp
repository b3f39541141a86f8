#include <aniso_cli/svg.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace aniso::svg {

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Vec2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  bool valid() const { return x0 <= x1 && y0 <= y1; }
};

}  // namespace

std::string render(const Figure& f) {
  Box box;
  if (f.window) {
    if (f.window->shape() == Window::Shape::disk) {
      const Vec2 c = f.window->center();
      const double r = f.window->radius();
      box.add({c.x - r, c.y - r});
      box.add({c.x + r, c.y + r});
    } else {
      for (const Vec2 p : f.window->vertices()) box.add(p);
    }
  } else {
    for (const Loop& l : f.set.loops()) {
      for (const Vec2 p : l.vertices()) box.add(p);
    }
  }
  if (!box.valid()) box = {-1.0, -1.0, 1.0, 1.0};
  const double pad = 0.1 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  const double w = box.x1 - box.x0 + 2.0 * pad;
  const double h = box.y1 - box.y0 + 2.0 * pad;
  const double stroke = 0.004 * std::max(w, h);

  std::ostringstream os;
  os.precision(10);
  // Flip y so the figure uses the usual mathematical orientation.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << box.x0 - pad << ' ' << -(box.y1 + pad) << ' ' << w
     << ' ' << h << "\" width=\"600\" height=\"" << std::lround(600.0 * h / w) << "\">\n";
  if (!f.title.empty()) os << "  <title>" << f.title << "</title>\n";
  os << "  <g transform=\"scale(1,-1)\">\n";
  if (!f.set.empty()) {
    os << "    <path fill=\"#9ecae1\" fill-rule=\"evenodd\" stroke=\"#08519c\" stroke-width=\"" << stroke << "\" d=\"";
    for (const Loop& l : f.set.loops()) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        os << (i == 0 ? "M" : " L") << l.vertex(i).x << ',' << l.vertex(i).y;
      }
      os << " Z ";
    }
    os << "\"/>\n";
  }
  if (f.window) {
    os << "    <g fill=\"none\" stroke=\"#444\" stroke-dasharray=\"" << 4 * stroke << ',' << 3 * stroke
       << "\" stroke-width=\"" << stroke << "\">\n";
    if (f.window->shape() == Window::Shape::disk) {
      os << "      <circle cx=\"" << f.window->center().x << "\" cy=\"" << f.window->center().y << "\" r=\""
         << f.window->radius() << "\"/>\n";
    } else {
      os << "      <polygon points=\"";
      for (const Vec2 p : f.window->vertices()) os << p.x << ',' << p.y << ' ';
      os << "\"/>\n";
    }
    os << "    </g>\n";
  }
  if (!f.chords.empty()) {
    os << "    <g stroke=\"#d62728\" stroke-width=\"" << 1.5 * stroke << "\">\n";
    for (const auto& [a, b] : f.chords) {
      os << "      <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\"/>\n";
    }
    os << "    </g>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace aniso::svg
