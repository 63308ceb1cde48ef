#ifndef SPECKLE2P_CONFIG_HPP
#define SPECKLE2P_CONFIG_HPP

#include <cstdint>
#include <string>

namespace s2p {

enum class Polarization { Parallel, Orthogonal };

/// Statistical model of one emitter's complex amplitude. Gaussian is the
/// physical speckle model; Phasor (unit modulus, random phase) is kept only
/// as a diagnostic to show that the intensity-moment identity needs
/// Gaussian statistics.
enum class AmplitudeModel { Gaussian, Phasor };

/// Full physical description of one experiment: two pseudo-thermal spots of
/// width `spot_size_s` whose centers sit `source_separation_d` apart,
/// observed at distance `distance_z`, plus the numerical knobs for the
/// ensemble simulation. Defaults are the reference bench values.
///
/// All lengths in meters. Immutable by convention once validated; safe to
/// share across threads.
struct ExperimentConfig {
  double wavelength = 632.8e-9;
  double source_separation_d = 1.1e-3;  // center-to-center spot distance
  double spot_size_s = 0.11e-3;         // full width of each spot
  double distance_z = 2.955;            // source plane to detector plane
  Polarization polarization = Polarization::Parallel;
  int emitters_per_spot = 64;
  std::uint64_t seed = 42;
  long realizations = 200000;
  AmplitudeModel amplitude_model = AmplitudeModel::Gaussian;

  /// k = 2*pi/lambda. Derived, never stored.
  double wavenumber() const;

  /// Throws ValidationError naming the offending field.
  void validate() const;
};

/// The reference bench: 632.8 nm, d = 1.1 mm, s = 0.11 mm, z = 2.955 m,
/// parallel polarization. z is chosen so the classical fringe spacing
/// lambda*z/d lands at 1.70 mm.
ExperimentConfig reference_config();

std::string to_string(Polarization p);
std::string to_string(AmplitudeModel m);
Polarization polarization_from_string(const std::string& s);
AmplitudeModel amplitude_model_from_string(const std::string& s);

}  // namespace s2p

#endif
