#pragma once

#include <aniso_cli/io.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace aniso::cli {

enum class Command { energy, minimize, bernstein, convexity, verify };

struct Emit {
  bool svg = false;
  bool csv = false;
  bool json = true;
};

struct RunConfig {
  Command command = Command::energy;
  std::string scene;
  std::string integrand;
  std::string window;
  std::optional<double> gain_tol;
  std::optional<double> flat_tol;
  std::optional<std::size_t> max_steps;
  std::optional<std::size_t> max_arc_edges;
  std::optional<std::string> arc_enumeration;
  std::filesystem::path out_dir = ".";
  Emit emit;
  std::optional<double> rho;
  double delta = 0.1;
  double angle_deg = 0.0;
  bool complement = false;
  std::size_t samples = 720;
  bool snapshots = false;
};

struct RunResult {
  io::Json report;
  std::vector<std::filesystem::path> artifacts;
};

/// Executes one command, writing the requested artifacts under out_dir.
/// Throws aniso::Error (or io::ParseError) on invalid input.
RunResult run(const RunConfig& config);

/// Machine-readable error document for a failed run.
io::Json error_json(const std::exception& e);

/// Full command-line entry point: parses argv, runs, prints the report to
/// `out` and errors as JSON to `err`. Returns the process exit status
/// (0 success, 1 runtime failure, 2 usage error).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aniso::cli
