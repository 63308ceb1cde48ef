#ifndef SPECKLE2P_CONFIG_FILE_HPP
#define SPECKLE2P_CONFIG_FILE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "speckle2p/config.hpp"
#include "speckle2p/geometry.hpp"

namespace s2p {

/// Scan grid as requested by a config file; unset values fall back to the
/// per-engine defaults.
struct ScanSettings {
  std::optional<ScanMode> mode;
  std::optional<double> half_range;  // meters
  std::optional<double> step;        // meters
  double fixed_x2 = 0.0;
};

struct FileConfig {
  ExperimentConfig experiment;  // starts from the reference defaults
  ScanSettings scan;
};

/// Key-value config with [source], [scan] and [monte_carlo] sections.
/// Length values accept nm/um/mm/m suffixes (bare numbers are meters).
/// Unknown sections or keys are a hard error.
FileConfig parse_config_text(std::string_view text);

/// Reads and parses a config file. IoError if unreadable, ValidationError
/// for malformed or unknown content.
FileConfig load_config_file(const std::filesystem::path& path);

/// "632.8 nm" -> 6.328e-7, "0.25mm" -> 2.5e-4, "2.955" -> 2.955.
double parse_length(std::string_view text);

}  // namespace s2p

#endif
