#ifndef SPECKLE2P_ANALYTIC_HPP
#define SPECKLE2P_ANALYTIC_HPP

#include <complex>

#include "speckle2p/config.hpp"
#include "speckle2p/geometry.hpp"

namespace s2p {

/// Second-order correlation value. `raw` carries the nominal (k*s/(pi*z))^2
/// scale of the closed forms; `normalized` divides that baseline out so the
/// far-field (uncorrelated) level is 1.
struct G2Value {
  double raw = 0.0;
  double normalized = 0.0;
};

/// sin(u)/u with a series branch near 0 (1 - u^2/6 for |u| < 1e-6), so the
/// scan center is free of cancellation.
double sinc(double u);

/// The DC level (k*s/(pi*z))^2 used to normalize G2.
double g2_baseline(const ExperimentConfig& config);

/// First-order correlation of a single spot between detector positions x1
/// and x2. With u = k*(x1-x2)/(2z):
///   spot A: (1/(pi*(x1-x2))) * sin(u*s) * [cos(u*d) - i*sin(u*d)]
///   spot B: complex conjugate (plus sign on the imaginary part).
/// The removable singularity at x1 == x2 evaluates to k*s/(2*pi*z).
std::complex<double> g1_spot(const ExperimentConfig& config, Spot spot,
                             double x1, double x2);

/// G2 for both spots in the same polarization: the interference term
/// |G1_A + G1_B|^2 plus the four DC intensity products.
G2Value g2_parallel(const ExperimentConfig& config, double x1, double x2);

/// G2 for orthogonally polarized spots: |G1_A|^2 + |G1_B|^2 plus the four DC
/// products. The cross-spot interference term is absent, so no fringes.
G2Value g2_orthogonal(const ExperimentConfig& config, double x1, double x2);

/// Dispatch on config.polarization.
G2Value g2_general(const ExperimentConfig& config, double x1, double x2);

/// Specialized counter-scan (x, -x) closed forms, evaluated directly:
///   parallel:   baseline * [1 + sinc^2(pi*s*x/((lambda/2)*z))
///                              * cos^2(pi*d*x/((lambda/2)*z))]
///   orthogonal: baseline * [1 + sinc^2(pi*s*x/((lambda/2)*z)) / 2]
/// Agrees with g2_parallel/g2_orthogonal at (x, -x) to ~1e-15 relative.
G2Value g2_anti_scan_closed_form(const ExperimentConfig& config, double x);

/// Fringe period of the parallel-polarization pattern:
/// lambda*z/d for a FixedD2 scan, half that for the counter-scan.
/// Throws NoFringesError for orthogonal polarization.
double predict_fringe_spacing(const ExperimentConfig& config, ScanMode mode);

}  // namespace s2p

#endif
