#ifndef SPECKLE2P_GEOMETRY_HPP
#define SPECKLE2P_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "speckle2p/config.hpp"

namespace s2p {

enum class Spot { A, B };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct Emitter {
  double position = 0.0;  // x0, source-plane coordinate in meters
  Spot spot = Spot::A;
};

/// The two source apertures discretized into point emitters. Spot A occupies
/// [(d-s)/2, (d+s)/2], spot B its mirror image across the origin. Emitters
/// are stored in ascending position order (all of B, then all of A).
/// Immutable after construction.
struct SourceGeometry {
  std::vector<Emitter> emitters;
  Interval spot_a;
  Interval spot_b;

  std::size_t count(Spot s) const;
};

/// Aperture indicator: 1 iff x0 lies inside the named spot's closed interval.
int transmission(const SourceGeometry& geometry, Spot spot, double x0);

/// Places config.emitters_per_spot emitters per spot by the midpoint rule
/// (spacing s/n, half-spacing margins at the interval ends). Spot B emitters
/// are the exact negations of spot A's. Deterministic.
SourceGeometry discretize_sources(const ExperimentConfig& config);

/// One emitter at the center of spot A and nothing else. Used by the
/// single-emitter statistics diagnostics, where the regular two-spot
/// geometry would get in the way.
SourceGeometry single_emitter_geometry(const ExperimentConfig& config);

enum class ScanMode { FixedD2, Opposite };

struct DetectorPair {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// A sequence of detector placements. In Opposite mode the detectors move as
/// (x, -x); in FixedD2 mode detector 2 stays at fixed_x2 while detector 1
/// visits each position.
struct ScanPlan {
  ScanMode mode = ScanMode::Opposite;
  std::vector<double> positions;  // strictly increasing, meters
  double fixed_x2 = 0.0;

  DetectorPair pair(std::size_t i) const;
  void validate() const;
};

/// Symmetric uniform grid: positions (i - m)*step for i in [0, 2m],
/// m = round(half_range/step). The center position is exactly 0.
ScanPlan make_scan_plan(ScanMode mode, double half_range, double step,
                        double fixed_x2 = 0.0);

std::string to_string(ScanMode m);
ScanMode scan_mode_from_string(const std::string& s);

}  // namespace s2p

#endif
