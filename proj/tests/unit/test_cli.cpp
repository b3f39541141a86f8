#include <aniso/descent.hpp>
#include <aniso/energy.hpp>
#include <aniso/error.hpp>
#include <aniso_cli/cli.hpp>
#include <aniso_cli/io.hpp>

#include "../support/shapes.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace aniso;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = ANISO_FIXTURES_DIR;

std::string fixture(const char* name) { return (kFixtures / name).string(); }

fs::path fresh_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("aniso_test_cli_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "aniso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("scene round trip is exact") {
  testing::Rng rng(5);
  const fs::path dir = fresh_dir("roundtrip");
  for (int k = 0; k < 20; ++k) {
    io::Scene s;
    s.loops.push_back(testing::random_star(rng, 3 + rng() % 30, {0.1, -0.3}, 0.5, 3.0));
    s.loops.push_back(testing::reversed(testing::regular_polygon(7, {10, 10}, 0.3)));
    if (k % 2) s.window = Window::disk({0.25, 1.0 / 3.0}, std::sqrt(2.0));
    const fs::path p = dir / "scene.json";
    io::save_scene(p, s);
    const io::Scene a = io::load_scene(p);
    io::save_scene(p, a);
    const io::Scene b = io::load_scene(p);
    REQUIRE(b.loops.size() == s.loops.size());
    for (std::size_t l = 0; l < s.loops.size(); ++l) {
      REQUIRE(b.loops[l].size() == s.loops[l].size());
      for (std::size_t i = 0; i < s.loops[l].size(); ++i) {
        CHECK(std::abs(b.loops[l][i].x - s.loops[l][i].x) <= 1e-15);
        CHECK(std::abs(b.loops[l][i].y - s.loops[l][i].y) <= 1e-15);
      }
    }
    CHECK(b.window.has_value() == s.window.has_value());
  }
}

TEST_CASE("energy command reports total 6 for the square under diag(1,4)") {
  const fs::path dir = fresh_dir("energy");
  const auto r = invoke({"energy", "--scene", fixture("square.json"), "--integrand", fixture("ellipse_diag14.json"),
                         "--out", dir.string(), "--emit", "json,csv,svg"});
  REQUIRE(r.status == 0);
  const auto j = io::parse_json(r.out, "stdout");
  CHECK(j["schema_version"] == 1);
  CHECK(j["energy"]["total"].get<double>() == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(fs::exists(dir / "energy.json"));
  CHECK(fs::exists(dir / "energy.csv"));
  CHECK(fs::exists(dir / "energy.svg"));
  CHECK(slurp(dir / "energy.json") == r.out);
}

TEST_CASE("minimize command matches the library on the corner fixture") {
  const fs::path dir = fresh_dir("minimize");
  const auto r = invoke({"minimize", "--scene", fixture("corner.json"), "--integrand", fixture("euclidean.json"),
                         "--window", fixture("disk.json"), "--out", dir.string(), "--emit", "json,svg,csv"});
  REQUIRE(r.status == 0);
  CHECK(fs::exists(dir / "trace.json"));
  CHECK(fs::exists(dir / "final.svg"));
  CHECK(fs::exists(dir / "trace.csv"));
  CHECK(fs::exists(dir / "final_scene.json"));
  const auto j = io::parse_json(r.out, "stdout");
  CHECK(j["flatness_in_window"]["flat"] == true);

  const io::Scene scene = io::load_scene(fixture("corner.json"));
  const auto lib = descend(scene.set(), io::load_window(fixture("disk.json")),
                           io::load_integrand(fixture("euclidean.json")), DescentParams{});
  CHECK(j["trace"]["final_energy"].get<double>() == lib.trace.final_energy);
  CHECK(j["trace"]["step_count"].get<std::size_t>() == lib.trace.steps.size());
  CHECK(j["trace"]["termination"] == std::string(to_string(lib.trace.termination)));

  // The saved final scene reloads to the library's final set.
  const io::Scene fin = io::load_scene(dir / "final_scene.json");
  CHECK(phi_total(fin.set(), io::load_window(fixture("disk.json")), Integrand::euclidean()) ==
        doctest::Approx(lib.trace.final_energy).epsilon(1e-15));
}

TEST_CASE("bernstein command for the euclidean norm at rho 2") {
  const fs::path dir = fresh_dir("bernstein");
  const auto r = invoke({"bernstein", "--integrand", fixture("euclidean.json"), "--rho", "2", "--out", dir.string()});
  REQUIRE(r.status == 0);
  const auto j = io::parse_json(r.out, "stdout");
  CHECK(j["report"]["passes"] == true);
  CHECK(j["report"]["energy_E"].get<double>() == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(j["report"]["energy_F"].get<double>() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(fs::exists(dir / "bernstein.json"));
}

TEST_CASE("reports are byte-identical across runs") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  const std::vector<std::string> base = {"minimize", "--scene", fixture("corner.json"), "--integrand",
                                         fixture("ellipse_diag14.json"), "--window", fixture("disk.json"),
                                         "--emit", "json,csv,svg"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--out", a.string()});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--out", b.string()});
  const auto ra = invoke(args_a);
  const auto rb = invoke(args_b);
  REQUIRE(ra.status == 0);
  REQUIRE(rb.status == 0);
  CHECK(ra.out == rb.out);
  for (const char* f : {"trace.json", "trace.csv", "final.svg", "final_scene.json"}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("malformed input yields a parse error with its position") {
  const auto r = invoke({"energy", "--scene", fixture("malformed.json"), "--integrand", "euclidean", "--out",
                         fresh_dir("malformed").string()});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  const auto j = io::parse_json(r.err, "stderr");
  CHECK(j["schema_version"] == 1);
  CHECK(j["error"]["code"] == "parse_error");
  CHECK(j["error"]["line"] == 3);
  CHECK(j["error"]["column"] == 37);
}

TEST_CASE("validation failures carry typed codes") {
  const auto r = invoke({"energy", "--scene", fixture("square.json"), "--integrand", R"({"family":"p_norm"})",
                         "--out", fresh_dir("typed").string()});
  CHECK(r.status == 1);
  const auto j = io::parse_json(r.err, "stderr");
  CHECK(j["error"]["code"] == "invalid_integrand");

  const auto usage = invoke({"energy", "--no-such-flag"});
  CHECK(usage.status == 2);
  const auto none = invoke({});
  CHECK(none.status == 2);
  const auto missing = invoke({"energy", "--scene", fixture("square.json")});
  CHECK(missing.status == 2);
  CHECK(io::parse_json(missing.err, "stderr")["error"]["code"] == "usage");
}

TEST_CASE("output directory defaults to the environment variable") {
  const fs::path dir = fresh_dir("env");
  ::setenv("ANISO_OUT_DIR", dir.string().c_str(), 1);
  const auto r = invoke({"energy", "--scene", fixture("square.json"), "--integrand", "euclidean"});
  ::unsetenv("ANISO_OUT_DIR");
  REQUIRE(r.status == 0);
  CHECK(fs::exists(dir / "energy.json"));
  CHECK_FALSE(fs::exists(dir / "energy.csv"));
}

TEST_CASE("convexity and verify commands") {
  const fs::path dir = fresh_dir("misc");
  auto r = invoke({"convexity", "--integrand", fixture("asymmetric_shift.json"), "--out", dir.string()});
  REQUIRE(r.status == 0);
  auto j = io::parse_json(r.out, "stdout");
  CHECK(j["convex"] == true);
  CHECK(j["symmetric"] == false);

  r = invoke({"verify", "--scene", fixture("square.json"), "--out", dir.string()});
  REQUIRE(r.status == 0);
  j = io::parse_json(r.out, "stdout");
  CHECK(j["valid"] == true);
  CHECK(j["flatness"]["is_union_of_segments"] == true);
}
