#include <aniso_cli/cli.hpp>

#include <aniso_cli/svg.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace aniso::cli {

namespace {

using io::Json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::energy: return "energy";
    case Command::minimize: return "minimize";
    case Command::bernstein: return "bernstein";
    case Command::convexity: return "convexity";
    case Command::verify: return "verify";
  }
  return "unknown";
}

class Output {
 public:
  Output(const RunConfig& cfg, RunResult& result) : cfg_(cfg), result_(result) {}

  void write(const std::string& name, const std::string& text) {
    const auto path = cfg_.out_dir / name;
    io::write_text_file(path, text);
    result_.artifacts.push_back(path);
  }
  void json(const std::string& name, const Json& j) {
    if (cfg_.emit.json) write(name, io::dump(j));
  }
  void csv(const std::string& name, const std::string& text) {
    if (cfg_.emit.csv) write(name, text);
  }
  void svg(const std::string& name, const svg::Figure& fig) {
    if (cfg_.emit.svg) write(name, svg::render(fig));
  }

 private:
  const RunConfig& cfg_;
  RunResult& result_;
};

Json header(Command c) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["command"] = std::string(command_name(c));
  return j;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorCode::invalid_argument, std::string("missing required option ") + flag);
}

std::optional<Window> resolve_window(const RunConfig& cfg, const io::Scene* scene) {
  if (!cfg.window.empty()) return io::load_window(cfg.window);
  if (scene != nullptr && scene->window) return scene->window;
  return std::nullopt;
}

DescentParams resolve_params(const RunConfig& cfg) {
  DescentParams p;
  if (cfg.gain_tol) p.gain_tol = *cfg.gain_tol;
  if (cfg.flat_tol) p.flat_tol = *cfg.flat_tol;
  if (cfg.max_steps) p.max_steps = *cfg.max_steps;
  if (cfg.max_arc_edges) p.max_arc_edges = *cfg.max_arc_edges;
  if (cfg.arc_enumeration) {
    if (*cfg.arc_enumeration == "all_subarcs") {
      p.arc_enumeration = ArcEnumeration::all_subarcs;
    } else if (*cfg.arc_enumeration == "sliding_window") {
      p.arc_enumeration = ArcEnumeration::sliding_window;
    } else {
      throw Error(ErrorCode::invalid_argument, "arc enumeration must be all_subarcs or sliding_window");
    }
  }
  p.validate();
  return p;
}

// Flatness is judged on vertices a little inside the window; anything closer
// to the boundary cannot be moved by a compactly supported competitor.
double flatness_margin(const Window& w) { return 1e-6 * std::max(1.0, w.diameter()); }

RunResult run_energy(const RunConfig& cfg) {
  require(cfg.scene, "--scene");
  require(cfg.integrand, "--integrand");
  RunResult result;
  Output out(cfg, result);
  const io::Scene scene = io::load_scene(cfg.scene);
  const PolygonalSet set = scene.set();
  const Integrand integrand = io::load_integrand(cfg.integrand);
  const auto window = resolve_window(cfg, &scene);
  const EnergyBreakdown energy = window ? phi(set, *window, integrand) : phi(set, integrand);

  Json r = header(cfg.command);
  r["integrand"] = io::to_json(integrand);
  r["window"] = window ? io::to_json(*window) : Json();
  r["energy"] = io::to_json(energy);
  result.report = r;
  out.json("energy.json", r);
  out.csv("energy.csv", to_csv(energy));
  out.svg("energy.svg", {set, window, {}, "energy"});
  return result;
}

RunResult run_minimize(const RunConfig& cfg) {
  require(cfg.scene, "--scene");
  require(cfg.integrand, "--integrand");
  RunResult result;
  Output out(cfg, result);
  const io::Scene scene = io::load_scene(cfg.scene);
  const PolygonalSet initial = scene.set();
  const Integrand integrand = io::load_integrand(cfg.integrand);
  const auto window = resolve_window(cfg, &scene);
  if (!window) throw Error(ErrorCode::invalid_window, "minimize needs a window (--window or scene.window)");
  const DescentParams params = resolve_params(cfg);

  StepObserver observer;
  if (cfg.snapshots && cfg.emit.svg) {
    observer = [&](const DescentStep& step, const PolygonalSet& set) {
      char name[32];
      std::snprintf(name, sizeof name, "step_%04zu.svg", step.index + 1);
      out.svg(name, {set, window, {{step.chord_start, step.chord_end}}, name});
    };
  }
  const DescentResult res = descend(initial, *window, integrand, params, observer);
  const auto local = flatness_in_window(res.set, *window, params.flat_tol, flatness_margin(*window));
  const auto global = flatness(res.set, params.flat_tol);

  Json r = header(cfg.command);
  r["integrand"] = io::to_json(integrand);
  r["window"] = io::to_json(*window);
  r["params"] = io::to_json(params);
  r["trace"] = io::to_json(res.trace);
  r["flatness_in_window"] = io::to_json(local);
  r["flatness"] = {{"max_spread", global.max_spread},
                   {"max_sagitta", global.max_sagitta},
                   {"is_union_of_segments", global.is_union_of_segments}};
  r["final_set"] = {{"loops", io::loops_to_json(res.set)}};
  result.report = r;

  out.json("trace.json", r);
  out.csv("trace.csv", io::trace_to_csv(res.trace));
  if (cfg.emit.json) {
    io::Scene final_scene{res.set.raw_loops(), window};
    out.json("final_scene.json", io::to_json(final_scene));
  }
  std::vector<std::pair<Vec2, Vec2>> chords;
  for (const auto& s : res.trace.steps) {
    if (s.kind == Candidate::Kind::chord) chords.emplace_back(s.chord_start, s.chord_end);
  }
  out.svg("initial.svg", {initial, window, {}, "initial"});
  out.svg("final.svg", {res.set, window, chords, "final"});
  return result;
}

RunResult run_bernstein(const RunConfig& cfg) {
  require(cfg.integrand, "--integrand");
  RunResult result;
  Output out(cfg, result);
  const Integrand integrand = io::load_integrand(cfg.integrand);
  LineGapConfig lines;
  lines.s = unit_from_angle(cfg.angle_deg * std::numbers::pi / 180.0);
  lines.complement = cfg.complement;
  double rho = 0.0;
  if (cfg.rho) {
    rho = *cfg.rho;
  } else {
    // Default to twice the threshold.
    const Vec2 t = rotate_ccw(lines.s);
    const double a = std::max(integrand.eval(lines.s), integrand.eval(-lines.s));
    const double b = std::min(integrand.eval(t), integrand.eval(-t));
    rho = 2.0 * a / b;
  }
  const BernsteinReport rep = bernstein_check(lines, integrand, rho, cfg.delta);

  Json r = header(cfg.command);
  r["integrand"] = io::to_json(integrand);
  r["complement"] = cfg.complement;
  r["report"] = io::to_json(rep);
  result.report = r;
  out.json("bernstein.json", r);
  const Vec2 s = rep.s * rho;
  const Vec2 t = rep.t;
  out.svg("bernstein.svg", {rep.set_F, rep.window, {{-s - t, -s + t}, {s - t, s + t}}, "bernstein"});
  return result;
}

RunResult run_convexity(const RunConfig& cfg) {
  require(cfg.integrand, "--integrand");
  RunResult result;
  Output out(cfg, result);
  const Integrand integrand = io::load_integrand(cfg.integrand);
  const auto strict = strict_convexity_check(integrand, cfg.samples, 0.0);
  const double violation = max_convexity_violation(integrand, cfg.samples);
  const auto bounds = comparability_bounds(integrand, cfg.samples);

  Json r = header(cfg.command);
  r["integrand"] = io::to_json(integrand);
  r["samples"] = cfg.samples;
  const auto declared = integrand.strictly_convex_declared();
  r["strictly_convex_declared"] = declared ? Json(*declared) : Json();
  r["symmetric"] = integrand.symmetric();
  r["strict_convexity"] = {{"is_strict", strict.is_strict},
                           {"worst_slack", strict.worst_slack},
                           {"worst_u", io::to_json(strict.worst_u)},
                           {"worst_v", io::to_json(strict.worst_v)}};
  r["max_convexity_violation"] = violation;
  r["convex"] = violation <= 1e-12;
  r["comparability"] = {{"c_lower", bounds.c_lower}, {"C_upper", bounds.C_upper}};
  result.report = r;
  out.json("convexity.json", r);

  std::ostringstream csv;
  csv.precision(17);
  csv << "angle_deg,nu_x,nu_y,value\n";
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const double deg = 360.0 * static_cast<double>(i) / static_cast<double>(cfg.samples);
    const Vec2 u = unit_from_angle(deg * std::numbers::pi / 180.0);
    csv << deg << ',' << u.x << ',' << u.y << ',' << integrand.eval(u) << '\n';
  }
  out.csv("convexity.csv", csv.str());
  return result;
}

RunResult run_verify(const RunConfig& cfg) {
  require(cfg.scene, "--scene");
  RunResult result;
  Output out(cfg, result);
  const io::Scene scene = io::load_scene(cfg.scene);
  const auto window = resolve_window(cfg, &scene);
  const double tol = cfg.flat_tol.value_or(DescentParams{}.flat_tol);

  Json r = header(cfg.command);
  const auto crossings = detect_crossings(scene.loops);
  Json cj = Json::array();
  for (const Vec2 p : crossings) cj.push_back(io::to_json(p));
  r["crossings"] = cj;
  r["valid"] = crossings.empty();
  if (crossings.empty()) {
    const PolygonalSet set = scene.set();
    r["flatness"] = io::to_json(flatness(set, tol));
    if (window) r["flatness_in_window"] = io::to_json(flatness_in_window(set, *window, tol, flatness_margin(*window)));

    // Density ratios at every vertex, at a quarter of the shorter incident edge.
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const Loop& l : set.loops()) {
      for (std::size_t v = 0; v < l.size(); ++v) {
        const double radius = 0.25 * std::min(l.edge_length(v), l.edge_length(v + l.size() - 1));
        const double ratio = density_ratio(set, l.vertex(v), radius);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
    r["density_ratio"] = set.empty() ? Json() : Json{{"min", lo}, {"max", hi}};

    if (window && !cfg.integrand.empty()) {
      const Integrand integrand = io::load_integrand(cfg.integrand);
      r["integrand"] = io::to_json(integrand);
      try {
        const auto bf = brute_force_best_competitor(set, *window, integrand, 6);
        r["brute_force"] = {{"base_energy", bf.base_energy},
                            {"best_energy", bf.best_energy},
                            {"competitors", bf.competitors}};
      } catch (const Error& e) {
        r["brute_force"] = {{"skipped", e.what()}};
      }
    }
    out.svg("verify.svg", {set, window, {}, "verify"});
  }
  result.report = r;
  out.json("verify.json", r);
  return result;
}

Emit parse_emit(const std::string& text) {
  Emit e{false, false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "svg") {
      e.svg = true;
    } else if (item == "csv") {
      e.csv = true;
    } else if (item == "json") {
      e.json = true;
    } else if (!item.empty()) {
      throw Error(ErrorCode::invalid_argument, "unknown --emit item \"" + item + "\" (expected svg, csv, json)");
    }
  }
  return e;
}

}  // namespace

RunResult run(const RunConfig& config) {
  switch (config.command) {
    case Command::energy: return run_energy(config);
    case Command::minimize: return run_minimize(config);
    case Command::bernstein: return run_bernstein(config);
    case Command::convexity: return run_convexity(config);
    case Command::verify: return run_verify(config);
  }
  throw Error(ErrorCode::invalid_argument, "unknown command");
}

io::Json error_json(const std::exception& e) {
  Json err;
  if (const auto* pe = dynamic_cast<const io::ParseError*>(&e)) {
    err["code"] = std::string(to_string(pe->code()));
    err["message"] = pe->what();
    err["line"] = pe->line();
    err["column"] = pe->column();
  } else if (const auto* ae = dynamic_cast<const Error*>(&e)) {
    err["code"] = std::string(to_string(ae->code()));
    err["message"] = ae->what();
  } else if (dynamic_cast<const std::domain_error*>(&e) != nullptr) {
    err["code"] = "domain_error";
    err["message"] = e.what();
  } else {
    err["code"] = "internal_error";
    err["message"] = e.what();
  }
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["error"] = err;
  return j;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anisotropic perimeter toolkit: energies, chord-replacement descent and checks", "aniso"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("ANISO_OUT_DIR"); env != nullptr && *env != '\0') cfg.out_dir = env;
  std::string emit = "json";
  std::string out_dir;

  struct Sub {
    Command command;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::energy, "energy", "Anisotropic perimeter of a scene, optionally inside a window"},
      {Command::minimize, "minimize", "Chord-replacement descent inside a window"},
      {Command::bernstein, "bernstein", "Rectangle competitor against two parallel lines"},
      {Command::convexity, "convexity", "Sampled convexity and comparability of an integrand"},
      {Command::verify, "verify", "Crossings, flatness, density ratios and brute-force oracle for a scene"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const Command command = s.command;
    sub->callback([&cfg, command] { cfg.command = command; });
    sub->add_option("--out", out_dir, "Output directory (default: $ANISO_OUT_DIR or .)");
    sub->add_option("--emit", emit, "Comma-separated artifacts: svg,csv,json")->default_str("json");
    auto* integrand = sub->add_option("--integrand", cfg.integrand, "Integrand JSON file, inline JSON, or family name");
    if (command != Command::verify) integrand->required();
    if (command != Command::bernstein && command != Command::convexity) {
      sub->add_option("--scene", cfg.scene, "Scene JSON file")->check(CLI::ExistingFile)->required();
      sub->add_option("--window", cfg.window, "Window JSON file or inline JSON (overrides the scene's)");
    }
    if (command == Command::minimize || command == Command::verify) {
      sub->add_option("--flat-tol", cfg.flat_tol, "Flatness tolerance (radians)");
    }
    if (command == Command::minimize) {
      sub->add_option("--gain-tol", cfg.gain_tol, "Stop when gain < gain-tol x energy");
      sub->add_option("--max-steps", cfg.max_steps, "Maximal number of descent steps");
      sub->add_option("--max-arc-edges", cfg.max_arc_edges, "Longest arc considered");
      sub->add_option("--enumeration", cfg.arc_enumeration, "all_subarcs or sliding_window");
      sub->add_flag("--snapshots", cfg.snapshots, "Write one SVG per step (with --emit svg)");
    }
    if (command == Command::bernstein) {
      sub->add_option("--rho", cfg.rho, "Rectangle half-length (default 2 rho_min)");
      sub->add_option("--delta", cfg.delta, "Fattening of the rectangle")->default_val(0.1);
      sub->add_option("--angle", cfg.angle_deg, "Direction of the lines, degrees")->default_val(0.0);
      sub->add_flag("--complement", cfg.complement, "Use the outside of the strip as E");
    }
    if (command == Command::convexity) {
      sub->add_option("--samples", cfg.samples, "Number of sampled directions")->default_val(720);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return 0;
    }
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["error"] = {{"code", "usage"}, {"message", e.what()}};
    err << io::dump(j);
    return 2;
  }

  try {
    cfg.emit = parse_emit(emit);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    const RunResult result = run(cfg);
    out << io::dump(result.report);
    return 0;
  } catch (const std::exception& e) {
    err << io::dump(error_json(e));
    return 1;
  }
}

}  // namespace aniso::cli
