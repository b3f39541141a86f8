#include <aniso_cli/io.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace aniso::io {

namespace {

std::string located(const std::string& source, std::size_t line, std::size_t column, const std::string& detail) {
  std::ostringstream os;
  os << source << ":" << line << ":" << column << ": " << detail;
  return os.str();
}

[[noreturn]] void bad(ErrorCode code, const std::string& what) { throw Error(code, what); }

double number(const Json& j, const char* key, ErrorCode code) {
  if (!j.contains(key) || !j.at(key).is_number()) bad(code, std::string("missing numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& detail)
    : Error(ErrorCode::parse_error, located(source, line, column, detail)), line_(line), column_(column) {}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (const auto p = detail.find("syntax error"); p != std::string::npos) detail = detail.substr(p);
    throw ParseError(source, line, column, detail);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad(ErrorCode::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) bad(ErrorCode::io_error, "cannot write " + path.string());
  out << text;
  if (!out) bad(ErrorCode::io_error, "failed writing " + path.string());
}

Vec2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad(ErrorCode::parse_error, "expected a point [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(Vec2 p) { return Json::array({p.x, p.y}); }

Integrand integrand_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    bad(ErrorCode::invalid_integrand, "integrand needs a string \"family\" field");
  }
  const std::string name = j.at("family").get<std::string>();
  const auto fam = family_from_string(name);
  if (!fam) bad(ErrorCode::invalid_integrand, "unknown integrand family \"" + name + "\"");
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  if (!params.is_object()) bad(ErrorCode::invalid_integrand, "\"params\" must be an object");
  const auto code = ErrorCode::invalid_integrand;
  switch (*fam) {
    case Family::euclidean: return Integrand::euclidean();
    case Family::crystalline_l1: return Integrand::crystalline_l1();
    case Family::crystalline_linf: return Integrand::crystalline_linf();
    case Family::p_norm: return Integrand::p_norm(number(params, "p", code));
    case Family::ellipse: {
      if (!params.contains("matrix")) bad(code, "ellipse needs params.matrix [[m00, m01], [m10, m11]]");
      const Json& m = params.at("matrix");
      if (!m.is_array() || m.size() != 2) bad(code, "ellipse matrix must be 2x2");
      const Vec2 r0 = point_from_json(m[0]);
      const Vec2 r1 = point_from_json(m[1]);
      if (r0.y != r1.x) bad(code, "ellipse matrix must be symmetric");
      return Integrand::ellipse(r0.x, r0.y, r1.y);
    }
    case Family::asymmetric_shift: {
      if (!params.contains("c")) bad(code, "asymmetric_shift needs params.c [cx, cy]");
      return Integrand::asymmetric_shift(point_from_json(params.at("c")));
    }
    case Family::tabulated: {
      if (!params.contains("samples") || !params.at("samples").is_array()) {
        bad(code, "tabulated needs params.samples [[degrees, value], ...]");
      }
      std::vector<std::pair<double, double>> samples;
      for (const Json& s : params.at("samples")) {
        const Vec2 p = point_from_json(s);
        samples.emplace_back(p.x, p.y);
      }
      return Integrand::tabulated(std::move(samples));
    }
  }
  bad(code, "unhandled integrand family");
}

Json to_json(const Integrand& integrand) {
  Json j;
  j["family"] = std::string(to_string(integrand.family()));
  Json params = Json::object();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, family::Ellipse>) {
          params["matrix"] = Json::array({Json::array({p.m00, p.m01}), Json::array({p.m01, p.m11})});
        } else if constexpr (std::is_same_v<T, family::PNorm>) {
          params["p"] = p.p;
        } else if constexpr (std::is_same_v<T, family::AsymmetricShift>) {
          params["c"] = to_json(p.c);
        } else if constexpr (std::is_same_v<T, family::Tabulated>) {
          Json samples = Json::array();
          for (const auto& [deg, val] : p.samples) samples.push_back(Json::array({deg, val}));
          params["samples"] = samples;
        }
      },
      integrand.params());
  j["params"] = params;
  return j;
}

Integrand load_integrand(const std::string& text) {
  if (looks_like_json(text)) return integrand_from_json(parse_json(text, "<integrand>"));
  if (std::filesystem::exists(text)) return integrand_from_json(read_json_file(text));
  if (const auto fam = family_from_string(text)) {
    Json j;
    j["family"] = text;
    return integrand_from_json(j);
  }
  bad(ErrorCode::io_error, "integrand \"" + text + "\" is neither a file, JSON text, nor a family name");
}

Window window_from_json(const Json& j) {
  const auto code = ErrorCode::invalid_window;
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    bad(code, "window needs a string \"type\" field (disk or polygon)");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "disk") {
    if (!j.contains("center")) bad(code, "disk window needs \"center\"");
    return Window::disk(point_from_json(j.at("center")), number(j, "radius", code));
  }
  if (type == "polygon") {
    if (!j.contains("vertices") || !j.at("vertices").is_array()) bad(code, "polygon window needs \"vertices\"");
    std::vector<Vec2> v;
    for (const Json& p : j.at("vertices")) v.push_back(point_from_json(p));
    return Window::polygon(std::move(v));
  }
  bad(code, "unknown window type \"" + type + "\"");
}

Json to_json(const Window& window) {
  Json j;
  if (window.shape() == Window::Shape::disk) {
    j["type"] = "disk";
    j["center"] = to_json(window.center());
    j["radius"] = window.radius();
  } else {
    j["type"] = "polygon";
    Json v = Json::array();
    for (const Vec2 p : window.vertices()) v.push_back(to_json(p));
    j["vertices"] = v;
  }
  return j;
}

Window load_window(const std::string& text) {
  if (looks_like_json(text)) return window_from_json(parse_json(text, "<window>"));
  const Json j = read_json_file(text);
  // A scene file may be passed as the window source.
  if (j.is_object() && j.contains("window") && !j.contains("type")) return window_from_json(j.at("window"));
  return window_from_json(j);
}

Scene scene_from_json(const Json& j) {
  if (!j.is_object()) bad(ErrorCode::parse_error, "scene must be a JSON object");
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion) {
    bad(ErrorCode::parse_error, "unsupported scene schema_version " + j.at("schema_version").dump());
  }
  const Json* loops = nullptr;
  if (j.contains("set") && j.at("set").is_object() && j.at("set").contains("loops")) {
    loops = &j.at("set").at("loops");
  } else if (j.contains("loops")) {
    loops = &j.at("loops");
  }
  if (loops == nullptr || !loops->is_array()) bad(ErrorCode::parse_error, "scene needs \"set\": {\"loops\": [...]}");
  Scene scene;
  for (const Json& loop : *loops) {
    if (!loop.is_array()) bad(ErrorCode::parse_error, "each loop must be an array of points");
    std::vector<Vec2> pts;
    for (const Json& p : loop) pts.push_back(point_from_json(p));
    scene.loops.push_back(std::move(pts));
  }
  if (j.contains("window") && !j.at("window").is_null()) scene.window = window_from_json(j.at("window"));
  return scene;
}

Json to_json(const Scene& scene) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json loops = Json::array();
  for (const auto& loop : scene.loops) {
    Json l = Json::array();
    for (const Vec2 p : loop) l.push_back(to_json(p));
    loops.push_back(l);
  }
  j["set"] = {{"loops", loops}};
  if (scene.window) j["window"] = to_json(*scene.window);
  return j;
}

Json loops_to_json(const PolygonalSet& set) {
  Json loops = Json::array();
  for (const auto& loop : set.raw_loops()) {
    Json l = Json::array();
    for (const Vec2 p : loop) l.push_back(to_json(p));
    loops.push_back(l);
  }
  return loops;
}

Scene load_scene(const std::filesystem::path& path) { return scene_from_json(read_json_file(path)); }

void save_scene(const std::filesystem::path& path, const Scene& scene) { write_text_file(path, dump(to_json(scene))); }

Json to_json(const EnergyBreakdown& energy) {
  Json j;
  j["total"] = energy.total;
  j["per_loop"] = energy.per_loop;
  Json edges = Json::array();
  for (const auto& e : energy.edges) {
    edges.push_back({{"loop", e.loop},
                     {"edge", e.edge},
                     {"normal", to_json(e.normal)},
                     {"length", e.clipped_length},
                     {"value", e.value},
                     {"contribution", e.contribution}});
  }
  j["edges"] = edges;
  return j;
}

Json to_json(const DescentParams& p) {
  return {{"gain_tol", p.gain_tol},
          {"flat_tol", p.flat_tol},
          {"max_arc_edges", p.max_arc_edges},
          {"max_steps", p.max_steps},
          {"arc_enumeration", p.arc_enumeration == ArcEnumeration::all_subarcs ? "all_subarcs" : "sliding_window"},
          {"trim_fraction", p.trim_fraction}};
}

namespace {

const char* side_name(RegionSide s) { return s == RegionSide::inside_E ? "inside_E" : "outside_E"; }

}  // namespace

Json to_json(const DescentTrace& trace) {
  Json j;
  j["termination"] = std::string(to_string(trace.termination));
  j["initial_energy"] = trace.initial_energy;
  j["final_energy"] = trace.final_energy;
  j["step_count"] = trace.steps.size();
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"index", s.index},
                     {"kind", s.kind == Candidate::Kind::chord ? "chord" : "island"},
                     {"arc", {to_json(s.arc_start), to_json(s.arc_end)}},
                     {"chord", {to_json(s.chord_start), to_json(s.chord_end)}},
                     {"arc_edges", s.arc_edges},
                     {"shortened", s.shortened},
                     {"region", side_name(s.side)},
                     {"region_area", s.region_area},
                     {"energy_before", s.energy_before},
                     {"energy_after", s.energy_after},
                     {"gain", s.gain}});
  }
  j["steps"] = steps;
  j["defective"] = trace.defective;
  return j;
}

std::string trace_to_csv(const DescentTrace& trace) {
  std::ostringstream os;
  os.precision(17);
  os << "index,kind,arc_x1,arc_y1,arc_x2,arc_y2,chord_x1,chord_y1,chord_x2,chord_y2,arc_edges,shortened,region,"
        "region_area,energy_before,energy_after,gain\n";
  for (const auto& s : trace.steps) {
    os << s.index << ',' << (s.kind == Candidate::Kind::chord ? "chord" : "island") << ',' << s.arc_start.x << ','
       << s.arc_start.y << ',' << s.arc_end.x << ',' << s.arc_end.y << ',' << s.chord_start.x << ','
       << s.chord_start.y << ',' << s.chord_end.x << ',' << s.chord_end.y << ',' << s.arc_edges << ','
       << (s.shortened ? 1 : 0) << ',' << side_name(s.side) << ',' << s.region_area << ',' << s.energy_before << ','
       << s.energy_after << ',' << s.gain << '\n';
  }
  return os.str();
}

Json to_json(const BernsteinReport& r) {
  return {{"s", to_json(r.s)},
          {"t", to_json(r.t)},
          {"a", r.a},
          {"b", r.b},
          {"rho_min", r.rho_min},
          {"rho", r.rho},
          {"delta", r.delta},
          {"energy_E", r.energy_E},
          {"energy_F", r.energy_F},
          {"window_energy_E", r.window_energy_E},
          {"window_energy_F", r.window_energy_F},
          {"removed", r.removed},
          {"added", r.added},
          {"chain_lower_4_rho_b", r.chain_lower},
          {"chain_upper_4_a", r.chain_upper},
          {"passes", r.passes},
          {"explanation", r.explanation}};
}

Json to_json(const FlatnessReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"loop", run.loop},
                    {"first_edge", run.first_edge},
                    {"edge_count", run.edge_count},
                    {"spread", run.spread},
                    {"sagitta", run.sagitta}});
  }
  return {{"tolerance", r.tolerance},
          {"max_spread", r.max_spread},
          {"max_sagitta", r.max_sagitta},
          {"loop_spread", r.loop_spread},
          {"is_union_of_segments", r.is_union_of_segments},
          {"runs", runs}};
}

Json to_json(const WindowFlatnessReport& r) {
  return {{"tolerance", r.tolerance},
          {"max_spread", r.max_spread},
          {"eligible_vertices", r.eligible_vertices},
          {"nonflat_vertices", r.nonflat_vertices},
          {"worst_vertex", to_json(r.worst_vertex)},
          {"flat", r.flat}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace aniso::io
