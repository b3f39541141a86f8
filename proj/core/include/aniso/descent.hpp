#pragma once

#include <aniso/arc.hpp>
#include <aniso/integrand.hpp>
#include <aniso/polygon.hpp>
#include <aniso/window.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aniso {

enum class ArcEnumeration {
  all_subarcs,     // every run of 2..max_arc_edges edges
  sliding_window,  // for each start vertex, only the longest run that fits
};

struct DescentParams {
  /// Stop when the best gain falls below gain_tol times the current energy.
  double gain_tol = 1e-10;
  /// Arcs whose edge normals all lie within this angle (radians) are flat.
  double flat_tol = 1e-9;
  std::size_t max_arc_edges = 16;
  std::size_t max_steps = 10000;
  ArcEnumeration arc_enumeration = ArcEnumeration::all_subarcs;
  /// An arc endpoint beyond the window is moved onto its edge, this fraction of
  /// the inside part away from the window boundary.
  double trim_fraction = 1e-3;

  void validate() const;
};

struct Candidate {
  enum class Kind { chord, island };
  Kind kind = Kind::chord;
  Arc enumerated;  // arc before chord shortening
  Arc arc;         // replaced arc (empty for islands)
  Chord chord;
  std::size_t island_loop = 0;
  double gain = 0.0;
  RegionSide side = RegionSide::inside_E;
  PolygonalSet region;
};

struct ArcSearch {
  std::optional<Candidate> best;
  /// Number of non-flat candidates enumerated before admissibility filtering.
  std::size_t nonflat_candidates = 0;
};

/// Best admissible replacement: a non-flat arc whose (shortened) chord meets
/// the boundary only at its endpoints, whose enclosed region closes up inside
/// the window and contains no other boundary. Loops lying wholly inside the
/// window are also candidates (removed outright). Maximal gain wins; ties go to
/// fewer edges, then lower loop and edge index. Candidates with gain below
/// `min_gain` are not examined.
ArcSearch find_replaceable_arc(const PolygonalSet& set, const Window& window, const Integrand& integrand,
                               const DescentParams& params, double min_gain = 0.0);

/// Competitor F = E \ G or E u G for the candidate's region G.
PolygonalSet apply_replacement(const PolygonalSet& set, const Candidate& candidate);

enum class Termination { converged_flat, gain_below_tol, max_steps };
std::string_view to_string(Termination t);

struct DescentStep {
  std::size_t index = 0;
  Candidate::Kind kind = Candidate::Kind::chord;
  Vec2 arc_start;
  Vec2 arc_end;
  Vec2 chord_start;
  Vec2 chord_end;
  std::size_t arc_edges = 0;
  bool shortened = false;
  RegionSide side = RegionSide::inside_E;
  double region_area = 0.0;
  double energy_before = 0.0;
  double energy_after = 0.0;
  double gain = 0.0;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  Termination termination = Termination::converged_flat;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  /// Candidates whose boolean step failed validation; each was skipped.
  std::vector<std::string> defective;
};

struct DescentResult {
  PolygonalSet set;
  DescentTrace trace;
};

/// Repeated chord replacement until no admissible arc with sufficient gain
/// remains. Energy strictly decreases along the trace.
/// `on_step`, when set, sees every accepted step together with the set it produced.
using StepObserver = std::function<void(const DescentStep&, const PolygonalSet&)>;
DescentResult descend(const PolygonalSet& initial, const Window& window, const Integrand& integrand,
                      const DescentParams& params, const StepObserver& on_step = {});

}  // namespace aniso
