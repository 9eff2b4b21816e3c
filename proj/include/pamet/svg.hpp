#pragma once

#include <span>
#include <string>
#include <vector>

#include "pamet/types.hpp"

namespace pamet {

struct ChartSeries {
  std::string label;
  std::string color;  // CSS color
  VectorX x;
  VectorX y;  // NaN entries break the polyline
};

/// Minimal standalone SVG line chart: axes, ticks, a dashed zero line
/// when the y-range spans it, one polyline per series, legend. No
/// external plotting machinery.
std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, std::span<const ChartSeries> series);

}  // namespace pamet
