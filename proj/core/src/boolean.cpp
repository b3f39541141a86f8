#include <aniso/boolean.hpp>

#include <aniso/error.hpp>

#include "arrangement.hpp"

#include <utility>

namespace aniso {
namespace {

enum class Op { difference, union_, intersection };

PolygonalSet boolean_op(const PolygonalSet& e, const PolygonalSet& g, Op op) {
  if (g.empty()) {
    return op == Op::intersection ? PolygonalSet{} : e;
  }
  if (e.empty()) {
    return op == Op::union_ ? g : PolygonalSet{};
  }
  const auto arr = detail::build_arrangement(e, g);
  std::vector<std::pair<Vec2, Vec2>> kept;
  for (const auto& f : arr.fragments) {
    const bool first = f.owner == 0;
    if (f.twin >= 0) {
      // Coincident boundary: keep the first set's copy at most once.
      if (!first) continue;
      const bool keep = (op == Op::difference && !f.twin_same) || (op != Op::difference && f.twin_same);
      if (keep) kept.emplace_back(f.a, f.b);
      continue;
    }
    const Vec2 mid = lerp(f.a, f.b, 0.5);
    const bool inside_other = first ? g.contains(mid) : e.contains(mid);
    switch (op) {
      case Op::difference:
        if (first && !inside_other) kept.emplace_back(f.a, f.b);
        if (!first && inside_other) kept.emplace_back(f.b, f.a);
        break;
      case Op::union_:
        if (!inside_other) kept.emplace_back(f.a, f.b);
        break;
      case Op::intersection:
        if (inside_other) kept.emplace_back(f.a, f.b);
        break;
    }
  }
  try {
    return PolygonalSet(detail::stitch_loops(kept));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::boolean_failure) throw;
    throw Error(ErrorCode::boolean_failure, std::string("boolean result is not a valid set: ") + err.what());
  }
}

}  // namespace

PolygonalSet set_difference(const PolygonalSet& e, const PolygonalSet& g) { return boolean_op(e, g, Op::difference); }

PolygonalSet set_union(const PolygonalSet& e, const PolygonalSet& g) { return boolean_op(e, g, Op::union_); }

PolygonalSet set_intersection(const PolygonalSet& e, const PolygonalSet& g) {
  return boolean_op(e, g, Op::intersection);
}

}  // namespace aniso
