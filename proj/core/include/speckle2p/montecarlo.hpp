#ifndef SPECKLE2P_MONTECARLO_HPP
#define SPECKLE2P_MONTECARLO_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "speckle2p/config.hpp"
#include "speckle2p/geometry.hpp"

namespace s2p {

/// Channel index of an emitter: parallel polarization puts both spots in one
/// channel, orthogonal polarization separates them.
int emitter_channel(Polarization polarization, Spot spot);
int channel_count(Polarization polarization);

/// Far-field propagation from the source emitters to a fixed set of detector
/// positions: field(x, c) = sum over emitters j in channel c of
/// a_j * exp(i*k*x*x0_j/z). The phase matrix is precomputed once; propagate()
/// is a plain matrix-vector product with a fixed, emitter-ordered summation.
class PropagationKernel {
public:
  PropagationKernel(const ExperimentConfig& config,
                    const SourceGeometry& geometry,
                    std::span<const double> detector_positions);

  std::size_t n_positions() const { return n_pos_; }
  std::size_t n_emitters() const { return n_em_; }
  int n_channels() const { return n_ch_; }
  int channel_of(std::size_t emitter) const { return channel_[emitter]; }

  /// out must hold n_positions()*n_channels() values, laid out
  /// [position][channel].
  void propagate(std::span<const std::complex<double>> amplitudes,
                 std::span<std::complex<double>> out) const;

private:
  std::size_t n_pos_ = 0;
  std::size_t n_em_ = 0;
  int n_ch_ = 1;
  std::vector<std::complex<double>> phase_;  // [position][emitter]
  std::vector<int> channel_;
};

/// Emitter amplitudes for one ensemble member, in geometry emitter order.
void draw_amplitudes(const ExperimentConfig& config,
                     const SourceGeometry& geometry, long realization_index,
                     std::vector<std::complex<double>>& out);

/// Complex detector-plane field of one ensemble member, per position and
/// polarization channel.
struct FieldRealization {
  std::vector<std::complex<double>> values;  // [position][channel]
  std::size_t n_positions = 0;
  int n_channels = 1;
  long realization_index = 0;

  std::complex<double> at(std::size_t position, int channel) const {
    return values[position * static_cast<std::size_t>(n_channels) +
                  static_cast<std::size_t>(channel)];
  }
  /// Intensity summed over channels (orthogonal fields add in intensity).
  double intensity(std::size_t position) const;
};

FieldRealization draw_realization(const SourceGeometry& geometry,
                                  const ExperimentConfig& config,
                                  std::span<const double> detector_positions,
                                  long realization_index);

/// Ensemble moments for one detector pair.
struct EnsembleEstimate {
  double mean_i1 = 0.0;
  double mean_i2 = 0.0;
  double mean_i1i2 = 0.0;

  std::complex<double> g1;  // <E*(x1) E(x2)>, summed over channels
  double g1_stderr_re = 0.0;
  double g1_stderr_im = 0.0;
  std::complex<double> g1_channel[2];  // per-channel means

  std::complex<double> cross_channel;  // <E*(x1,ch0) E(x2,ch1)>, orthogonal
  double cross_stderr_re = 0.0;
  double cross_stderr_im = 0.0;

  double g2_normalized = 0.0;
  double stderr_g2 = 0.0;  // delta method: std(I1*I2)/sqrt(n) / (<I1><I2>)

  long n_realizations = 0;
  int n_channels = 1;
};

/// Core estimator: ensemble moments at each detector pair over n
/// realizations. Results are bit-identical for any worker count; the
/// reduction over realization indices is a fixed-shape pairwise tree.
std::vector<EnsembleEstimate> estimate_ensemble(
    const ExperimentConfig& config, const SourceGeometry& geometry,
    std::span<const DetectorPair> pairs, long n, int workers = 1);

/// g2 at every scan position of the plan, using config.realizations members
/// (must be >= 100) and config.seed.
std::vector<EnsembleEstimate> estimate_g2(const ExperimentConfig& config,
                                          const ScanPlan& plan,
                                          int workers = 1);

struct G1Estimate {
  std::complex<double> value;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  long n_realizations = 0;
};

/// <E*(x1) E(x2)> over n realizations (n >= 100), channel-summed.
G1Estimate estimate_g1(const ExperimentConfig& config, double x1, double x2,
                       long n, int workers = 1);

/// Relative residual of the Gaussian-moment identity
/// <I1 I2> = sum_c |<E*_1 E_2>_c|^2 + <I1><I2>
/// for the given estimate. Small for circular-Gaussian amplitudes, order 1
/// for the unit-modulus phasor model at low emitter counts.
double moment_residual(const EnsembleEstimate& estimate);

/// moment_residual at (x1, x2) over n realizations (n >= 10^4).
double moment_theorem_check(const ExperimentConfig& config, double x1,
                            double x2, long n, int workers = 1);

}  // namespace s2p

#endif
