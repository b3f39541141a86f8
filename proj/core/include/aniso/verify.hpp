#pragma once

#include <aniso/integrand.hpp>
#include <aniso/polygon.hpp>
#include <aniso/window.hpp>

#include <cstddef>
#include <numbers>
#include <vector>

namespace aniso {

/// Maximal run of edges of one loop with no turn sharper than the corner angle.
struct FlatRun {
  std::size_t loop = 0;
  std::size_t first_edge = 0;
  std::size_t edge_count = 0;
  double spread = 0.0;   // range of the cumulative turning angle along the run
  double sagitta = 0.0;  // max distance of the run's vertices from its end-to-end segment
};

struct FlatnessReport {
  std::vector<FlatRun> runs;
  std::vector<double> loop_spread;  // max run spread per loop
  double max_spread = 0.0;
  double max_sagitta = 0.0;
  double tolerance = 0.0;
  bool is_union_of_segments = true;  // max_spread <= tolerance
};

/// Splits every loop at turns sharper than `corner_angle` and measures how far
/// each remaining run is from a straight segment. A polygon approximating a
/// curve forms one long run whose spread is its total turning.
FlatnessReport flatness(const PolygonalSet& set, double tol, double corner_angle = std::numbers::pi / 4);

struct WindowFlatnessReport {
  double max_spread = 0.0;
  std::size_t eligible_vertices = 0;
  std::size_t nonflat_vertices = 0;  // turn larger than the tolerance
  Vec2 worst_vertex;
  double tolerance = 0.0;
  bool flat = true;
};

/// Flatness restricted to the boundary that a window competitor can move:
/// chains of edges joined at vertices lying at least `margin` inside the
/// window. The spread of a chain is the range of its cumulative turning.
WindowFlatnessReport flatness_in_window(const PolygonalSet& set, const Window& window, double tol, double margin);

/// H^1(dE n B(x, r)) / r by exact segment-disk clipping. Throws
/// std::domain_error when x is farther than 1e-9 from the boundary.
double density_ratio(const PolygonalSet& set, Vec2 x, double r);

/// Transversal intersections between edges of raw (unvalidated) loops: points
/// interior to two non-adjacent edges, within a loop or across loops.
std::vector<Vec2> detect_crossings(const std::vector<std::vector<Vec2>>& loops);

struct BruteForceResult {
  double base_energy = 0.0;
  double best_energy = 0.0;
  std::size_t competitors = 0;  // valid competitors evaluated
  PolygonalSet best;
};

/// Exhaustive oracle for tiny instances. Window crossings of the boundary are
/// pinned; every subset of at most `vertex_budget` boundary vertices inside
/// the window is deleted (its runs replaced by chords), and loops lying in the
/// window may be dropped. Requires at most 8 vertices inside the window and a
/// budget of at most 6; throws Error(invalid_argument) otherwise.
BruteForceResult brute_force_best_competitor(const PolygonalSet& set, const Window& window,
                                             const Integrand& integrand, std::size_t vertex_budget);

}  // namespace aniso
