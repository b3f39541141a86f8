#pragma once

#include <aniso/polygon.hpp>
#include <aniso/window.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aniso::svg {

struct Figure {
  PolygonalSet set;
  std::optional<Window> window;
  std::vector<std::pair<Vec2, Vec2>> chords;  // highlighted segments
  std::string title;
};

/// E filled (even-odd), its boundary stroked, the window dashed and chords in
/// red. The view is the window's bounding box when there is one.
std::string render(const Figure& figure);

}  // namespace aniso::svg
