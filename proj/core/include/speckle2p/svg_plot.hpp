#ifndef SPECKLE2P_SVG_PLOT_HPP
#define SPECKLE2P_SVG_PLOT_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "speckle2p/scan.hpp"

namespace s2p {

/// Minimal dependency-free SVG line plot for g2 curves. x axis is drawn in
/// millimeters, y is the normalized g2. Continuous curves render as one
/// <polyline>; point series render as one <g class="mc-series"> of markers
/// with error bars.
class SvgPlot {
public:
  SvgPlot(std::string title, std::string x_label = "x (mm)",
          std::string y_label = "g2 (normalized)");

  void add_line(std::span<const CurvePoint> points, std::string label,
                std::string color = "#1f77b4");
  void add_points(std::span<const CurvePoint> points, std::string label,
                  std::string color = "#d62728");
  /// Vertical tick marks annotating detected peak positions.
  void mark_peaks(std::span<const double> positions_m);

  std::string render() const;
  void save(const std::filesystem::path& path) const;  // IoError on failure

private:
  struct Series {
    std::vector<CurvePoint> points;
    std::string label;
    std::string color;
    bool markers = false;
  };

  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  std::vector<double> peak_marks_;
};

}  // namespace s2p

#endif
