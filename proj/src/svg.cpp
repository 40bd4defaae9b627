#include "spikegate/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spikegate/format.hpp"

namespace spikegate::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_sig9(std::round(v * 100.0) / 100.0); }

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    } else if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

std::string render(const Plot& plot) {
  Range xr, yr;
  for (const auto& s : plot.series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  if (plot.style == Style::Bars) yr.add(0.0);
  xr.finish();
  yr.finish();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(plot.title) + "</text>\n";
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    out += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kTop + ph + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + format_sig9(round_sig9(fx)) +
           "</text>\n";
    out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + format_sig9(round_sig9(fy)) +
           "</text>\n";
  }
  out += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape(plot.x_label) + "</text>\n";
  out += "<text x=\"18\" y=\"" + num(kTop + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" " +
         "font-size=\"13\" transform=\"rotate(-90 18 " + num(kTop + ph / 2) + ")\">" + escape(plot.y_label) +
         "</text>\n";

  for (std::size_t s = 0; s < plot.series.size(); ++s) {
    const auto& series = plot.series[s];
    const std::string color = kColors[s % std::size(kColors)];
    const std::size_t n = std::min(series.x.size(), series.y.size());
    out += "<g data-label=\"" + escape(series.label) + "\">\n";
    if (plot.style == Style::Line) {
      out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1\" points=\"";
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(series.x[i]) || !std::isfinite(series.y[i])) continue;
        out += num(px(series.x[i])) + "," + num(py(series.y[i])) + " ";
      }
      out += "\"/>\n";
    } else if (plot.style == Style::Points) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(series.x[i]) || !std::isfinite(series.y[i])) continue;
        out += "<circle cx=\"" + num(px(series.x[i])) + "\" cy=\"" + num(py(series.y[i])) + "\" r=\"1.5\" fill=\"" +
               color + "\"/>\n";
      }
    } else {
      // Bars: x holds left edges; width runs to the next edge.
      for (std::size_t i = 0; i < n; ++i) {
        const double left = px(series.x[i]);
        const double right = i + 1 < series.x.size() ? px(series.x[i + 1]) : left + pw / std::max<std::size_t>(n, 1);
        const double top = py(std::max(series.y[i], 0.0));
        out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(std::max(right - left - 1, 0.5)) +
               "\" height=\"" + num(py(0.0) - top) + "\" fill=\"" + color + "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace spikegate::svg
