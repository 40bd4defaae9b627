#pragma once

#include <string>
#include <vector>

namespace spikegate::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

enum class Style { Line, Bars, Points };

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  Style style = Style::Line;
  std::vector<Series> series;
};

/// Self-contained SVG document with the data embedded as polylines/rects.
[[nodiscard]] std::string render(const Plot& plot);

}  // namespace spikegate::svg
