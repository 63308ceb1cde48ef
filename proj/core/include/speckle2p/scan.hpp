#ifndef SPECKLE2P_SCAN_HPP
#define SPECKLE2P_SCAN_HPP

#include <optional>
#include <vector>

#include "speckle2p/config.hpp"
#include "speckle2p/geometry.hpp"

namespace s2p {

enum class Engine { Analytic, MonteCarlo };

struct CurvePoint {
  double x = 0.0;       // scan coordinate, meters
  double g2 = 0.0;      // normalized
  double stderr_ = 0.0; // 0 for analytic points
};

/// A g2 scan. Carries the configuration that produced it so downstream
/// analysis (grid checks, model residuals) can refer back to it; hand-built
/// curves may leave `config` empty.
struct CorrelationCurve {
  std::vector<CurvePoint> points;
  ScanMode mode = ScanMode::Opposite;
  Polarization polarization = Polarization::Parallel;
  Engine engine = Engine::Analytic;
  double fixed_x2 = 0.0;
  std::optional<ExperimentConfig> config;
};

/// Evaluates g2 at every plan position with the chosen engine.
CorrelationCurve run_scan(const ExperimentConfig& config, const ScanPlan& plan,
                          Engine engine, int workers = 1);

/// Default grids: counter-scan +/-3 mm, fixed-detector scan +/-4 mm;
/// step 0.05 mm analytic, 0.25 mm Monte Carlo.
ScanPlan default_scan_plan(ScanMode mode, Engine engine, double fixed_x2 = 0.0);

/// Peak structure of a correlation curve. fringe_spacing is empty when
/// fewer than two qualifying peaks exist (no fringes detected).
struct FringeReport {
  std::vector<double> peak_positions;      // refined, qualifying peaks only
  std::optional<double> fringe_spacing;    // mean adjacent-peak gap
  double spacing_stderr = 0.0;
  double visibility = 0.0;                 // in [0, 1]
  double center_peak_value = 0.0;
  std::optional<double> model_residual_rms;  // vs analytic, when config known

  bool fringes_detected() const { return fringe_spacing.has_value(); }
};

/// Local maxima with 3-point parabolic refinement. Peaks qualify when their
/// prominence exceeds 3x the median stderr (1e-6 for analytic curves).
/// Curves must have at least 7 points; parallel-polarization curves with a
/// known config must have grid steps below a third of the predicted fringe
/// spacing or GridTooCoarseError is thrown.
FringeReport extract_fringes(const CorrelationCurve& curve);

struct CurveComparison {
  double rms = 0.0;
  double max_abs = 0.0;
  double chi2_per_point = 0.0;
};

/// Pointwise comparison of two curves on the identical grid (else
/// GridMismatchError). chi2 uses Monte Carlo stderr where available.
CurveComparison compare_curves(const CorrelationCurve& a,
                               const CorrelationCurve& b);

}  // namespace s2p

#endif
