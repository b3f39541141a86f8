#pragma once

#include <aniso/bernstein.hpp>
#include <aniso/descent.hpp>
#include <aniso/energy.hpp>
#include <aniso/error.hpp>
#include <aniso/integrand.hpp>
#include <aniso/polygon.hpp>
#include <aniso/verify.hpp>
#include <aniso/window.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aniso::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed JSON text, located by 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& detail);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct Scene {
  std::vector<std::vector<Vec2>> loops;  // as written, not yet validated
  std::optional<Window> window;

  PolygonalSet set() const { return PolygonalSet(loops); }
};

Vec2 point_from_json(const Json& j);
Json to_json(Vec2 p);

Integrand integrand_from_json(const Json& j);
Json to_json(const Integrand& integrand);
/// Accepts a path to a JSON file, inline JSON text, or a bare family name
/// for the parameter-free families.
Integrand load_integrand(const std::string& text);

Window window_from_json(const Json& j);
Json to_json(const Window& window);
Window load_window(const std::string& text);

Scene scene_from_json(const Json& j);
Json to_json(const Scene& scene);
Json loops_to_json(const PolygonalSet& set);
Scene load_scene(const std::filesystem::path& path);
void save_scene(const std::filesystem::path& path, const Scene& scene);

Json to_json(const EnergyBreakdown& energy);
Json to_json(const DescentParams& params);
Json to_json(const DescentTrace& trace);
std::string trace_to_csv(const DescentTrace& trace);
Json to_json(const BernsteinReport& report);
Json to_json(const FlatnessReport& report);
Json to_json(const WindowFlatnessReport& report);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace aniso::io
