#ifndef SPECKLE2P_RNG_HPP
#define SPECKLE2P_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "speckle2p/config.hpp"

namespace s2p::rng {

// Counter-based streams derived from (master seed, realization, emitter,
// channel). Every random number is a pure function of those four integers,
// which is what makes ensemble results independent of scheduling.

inline std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t next_u64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  return mix(state);
}

inline std::uint64_t derive_stream(std::uint64_t master_seed,
                                   std::uint64_t realization,
                                   std::uint64_t emitter,
                                   std::uint64_t channel) {
  std::uint64_t h = mix(master_seed + 0x9E3779B97F4A7C15ull);
  h = mix(h ^ (realization + 0xBF58476D1CE4E5B9ull));
  h = mix(h ^ (emitter + 0x94D049BB133111EBull));
  h = mix(h ^ (channel + 0xD6E8FEB86659FD93ull));
  return h;
}

/// Uniform double in (0, 1]; the open lower end keeps log() finite.
inline double unit_open(std::uint64_t& state) {
  return static_cast<double>((next_u64(state) >> 11) + 1) * 0x1.0p-53;
}

/// One complex emitter amplitude. Gaussian: circular complex normal with
/// unit mean square (Rayleigh modulus sqrt(-ln u), uniform phase). Phasor:
/// unit modulus, same phase stream.
inline std::complex<double> draw_amplitude(std::uint64_t stream_seed,
                                           AmplitudeModel model) {
  std::uint64_t state = stream_seed;
  const double u1 = unit_open(state);
  const double u2 = unit_open(state);
  const double phase = 2.0 * std::numbers::pi * u2;
  if (model == AmplitudeModel::Gaussian) {
    return std::polar(std::sqrt(-std::log(u1)), phase);
  }
  return std::polar(1.0, phase);
}

}  // namespace s2p::rng

#endif
