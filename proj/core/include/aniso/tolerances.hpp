#pragma once

namespace aniso {

// Every geometric epsilon used by the library lives here.
struct Tolerances {
  // Point-on-segment and coincidence decisions, in scene units.
  double on_segment = 1e-11;
  // Consecutive vertices closer than this are merged during normalization.
  double merge_distance = 1e-12;
  // Vertices whose turning sine is below this are dropped as collinear.
  double collinear_sine = 1e-12;
  // Unit vectors closer than this angle (radians) count as parallel.
  double parallel_angle = 1e-6;
  // Minimal distance from both boundaries for a point-in-set sample.
  double sample_clearance = 1e-12;
};

inline constexpr Tolerances kTol{};

}  // namespace aniso
