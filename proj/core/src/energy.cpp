#include <aniso/energy.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace aniso {
namespace {

template <class ClipFn>
EnergyBreakdown accumulate(const PolygonalSet& set, const Integrand& integrand, ClipFn clip_length) {
  EnergyBreakdown out;
  for (std::size_t li = 0; li < set.loops().size(); ++li) {
    const Loop& loop = set.loop(li);
    double loop_total = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const double len = clip_length(loop.vertex(i), loop.vertex(i + 1));
      if (len <= 0.0) continue;
      EdgeContribution c;
      c.loop = li;
      c.edge = i;
      c.normal = loop.outward_normal(i);
      c.clipped_length = len;
      c.value = integrand.eval(c.normal);
      c.contribution = c.value * len;
      loop_total += c.contribution;
      out.edges.push_back(c);
    }
    out.per_loop.push_back(loop_total);
    out.total += loop_total;
  }
  return out;
}

}  // namespace

EnergyBreakdown phi(const PolygonalSet& set, const Window& window, const Integrand& integrand) {
  return accumulate(set, integrand, [&](Vec2 a, Vec2 b) { return window.clipped_length(a, b); });
}

EnergyBreakdown phi(const PolygonalSet& set, const Integrand& integrand) {
  return accumulate(set, integrand, [](Vec2 a, Vec2 b) { return distance(a, b); });
}

double phi_total(const PolygonalSet& set, const Window& window, const Integrand& integrand) {
  double total = 0.0;
  for (const auto& loop : set.loops()) {
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vec2 a = loop.vertex(i);
      const Vec2 b = loop.vertex(i + 1);
      const double len = window.clipped_length(a, b);
      if (len > 0.0) total += integrand.eval(rotate_cw(b - a)) * (len / distance(a, b));
    }
  }
  return total;
}

double arc_energy(const Arc& arc, const Integrand& integrand) {
  double e = 0.0;
  for (std::size_t i = 0; i < arc.edge_count(); ++i) {
    const Vec2 d = arc.edge_vector(i);
    if (d.x == 0.0 && d.y == 0.0) continue;
    e += integrand.eval(rotate_cw(d));
  }
  return e;
}

double chord_energy(const Arc& arc, const Integrand& integrand) {
  if (arc.edge_count() == 0 || arc.start() == arc.end()) {
    throw std::domain_error("chord energy of a closed arc is undefined");
  }
  return integrand.eval(net_normal(arc));
}

double jensen_gap(const Arc& arc, const Integrand& integrand) {
  return arc_energy(arc, integrand) - chord_energy(arc, integrand);
}

std::string to_csv(const EnergyBreakdown& breakdown) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "loop,edge,normal_x,normal_y,length,value,contribution\n";
  for (const auto& c : breakdown.edges) {
    os << c.loop << ',' << c.edge << ',' << c.normal.x << ',' << c.normal.y << ',' << c.clipped_length << ','
       << c.value << ',' << c.contribution << '\n';
  }
  return os.str();
}

}  // namespace aniso
