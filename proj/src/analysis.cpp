#include "spikegate/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spikegate/spectral.hpp"

namespace spikegate::analysis {

void DetectParams::validate() const {
  if (!std::isfinite(threshold)) throw Error(ErrorCode::InvalidParams, "threshold must be finite");
  if (!std::isfinite(refractory) || refractory < 0.0) throw Error(ErrorCode::InvalidParams, "refractory must be >= 0");
  if (smooth_window < 1 || smooth_window % 2 == 0) {
    throw Error(ErrorCode::InvalidParams, "smooth_window must be odd and >= 1");
  }
}

std::vector<double> moving_average(std::span<const double> x, std::size_t width) {
  if (width < 1 || width % 2 == 0) throw Error(ErrorCode::InvalidParams, "smoothing width must be odd and >= 1");
  const std::size_t n = x.size();
  if (width == 1 || n == 0) return {x.begin(), x.end()};
  // Prefix sums keep this O(n) for the minute-scale windows used here.
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i];
  const std::size_t half = width / 2;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n, i + half + 1);
    out[i] = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
  }
  return out;
}

std::vector<double> detrend_linear(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> out(x.begin(), x.end());
  if (n < 2) {
    for (auto& v : out) v = 0.0;
    return out;
  }
  const double mean_i = static_cast<double>(n - 1) / 2.0;
  double mean_x = 0.0;
  for (double v : x) mean_x += v;
  mean_x /= static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double di = static_cast<double>(i) - mean_i;
    sxy += di * (x[i] - mean_x);
    sxx += di * di;
  }
  const double slope = sxy / sxx;
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - (mean_x + slope * (static_cast<double>(i) - mean_i));
  return out;
}

SpikeTrain detect_spikes(const TimeSeries& ts, const DetectParams& p) {
  p.validate();
  const auto raw = ts.samples();
  std::vector<double> y(raw.begin(), raw.end());
  if (p.detrend) y = detrend_linear(y);
  y = moving_average(y, p.smooth_window);

  std::vector<Spike> spikes;
  double last = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1] && y[i] >= p.threshold)) continue;
    const double t = ts.time_at(i);
    if (t - last < p.refractory) continue;
    spikes.push_back({t, raw[i]});
    last = t;
  }
  return SpikeTrain(std::move(spikes));
}

std::vector<double> periods(const SpikeTrain& train) {
  const auto s = train.spikes();
  std::vector<double> out;
  if (s.size() < 2) return out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) out.push_back(s[i].time - s[i - 1].time);
  return out;
}

double mean_firing_rate(const SpikeTrain& train, double window_start, double window_len) {
  if (!std::isfinite(window_len) || window_len <= 0.0) {
    throw Error(ErrorCode::NonPositiveWindow, "window length must be > 0");
  }
  const double end = window_start + window_len;
  std::size_t count = 0;
  for (const auto& s : train.spikes()) {
    if (s.time >= window_start && s.time < end) ++count;
  }
  return static_cast<double>(count) / window_len;
}

std::vector<RateBin> binned_rate(const SpikeTrain& train, double t0, double t1, double bin) {
  if (!std::isfinite(t0) || !std::isfinite(t1) || !std::isfinite(bin) || bin <= 0.0 || !(t1 > t0)) {
    throw Error(ErrorCode::InvalidRange, "need bin > 0 and t1 > t0");
  }
  // Whole bins that fit, plus a partial bin for any remainder.
  auto n = static_cast<std::size_t>(std::floor((t1 - t0) / bin));
  if (n == 0 || t0 + static_cast<double>(n) * bin < t1) ++n;
  std::vector<RateBin> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = t0 + static_cast<double>(i) * bin;
    const double hi = i + 1 == n ? t1 : t0 + static_cast<double>(i + 1) * bin;
    out[i].center = 0.5 * (lo + hi);
    out[i].width = hi - lo;
  }
  for (const auto& s : train.spikes()) {
    if (s.time < t0 || s.time >= t1) continue;
    auto k = std::min(n - 1, static_cast<std::size_t>(std::floor((s.time - t0) / bin)));
    // Guard against rounding at bin boundaries.
    while (k > 0 && s.time < t0 + static_cast<double>(k) * bin) --k;
    while (k + 1 < n && s.time >= t0 + static_cast<double>(k + 1) * bin) ++k;
    ++out[k].count;
  }
  for (auto& b : out) b.rate = static_cast<double>(b.count) / b.width;
  return out;
}

Histogram histogram(std::span<const double> values, std::span<const double> edges) {
  if (edges.size() < 2) throw Error(ErrorCode::BadEdges, "need at least two edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!std::isfinite(edges[i]) || (i > 0 && !(edges[i] > edges[i - 1]))) {
      throw Error(ErrorCode::BadEdges, "edges must be finite and strictly increasing");
    }
  }
  Histogram h;
  h.edges.assign(edges.begin(), edges.end());
  h.counts.assign(edges.size() - 1, 0);
  for (double v : values) {
    if (!(v >= edges.front() && v < edges.back())) {
      ++h.out_of_range;
      continue;
    }
    const auto it = std::upper_bound(edges.begin(), edges.end(), v);
    ++h.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
  }
  return h;
}

std::vector<double> auto_edges(std::span<const double> values, std::size_t bins) {
  if (bins == 0) throw Error(ErrorCode::BadEdges, "need at least one bin");
  if (values.empty()) {
    std::vector<double> out(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) out[i] = static_cast<double>(i) / static_cast<double>(bins);
    return out;
  }
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> out(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  out.back() = std::nextafter(hi, std::numeric_limits<double>::infinity());
  return out;
}

double percentile(std::span<const double> values, double p) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "percentile of no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = static_cast<double>(sorted.size() - 1) * p / 100.0;
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(sorted.size() - 1, lo + 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Quartiles quartiles(std::span<const double> values) {
  return {percentile(values, 25.0), percentile(values, 50.0), percentile(values, 75.0)};
}

Spectrum fft_spectrum(const TimeSeries& ts) {
  const std::size_t n = ts.size();
  if (n < 2) throw Error(ErrorCode::TooShort, "spectrum needs >= 2 samples");
  double mean = 0.0;
  for (double v : ts.samples()) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> centered(ts.samples().begin(), ts.samples().end());
  for (auto& v : centered) v -= mean;

  const auto X = spectral::rdft(centered);
  Spectrum out;
  out.frequencies.resize(X.size());
  out.magnitudes.resize(X.size());
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < X.size(); ++k) {
    out.frequencies[k] = static_cast<double>(k) / (nd * ts.dt());
    const bool single = k == 0 || (n % 2 == 0 && k == n / 2);
    out.magnitudes[k] = std::abs(X[k]) * (single ? 1.0 : 2.0) / nd;
  }
  return out;
}

double dominant_frequency(const TimeSeries& ts) {
  const auto spec = fft_spectrum(ts);
  double peak_scale = 0.0;
  for (double v : ts.samples()) peak_scale = std::max(peak_scale, std::abs(v));
  std::size_t best = 0;
  for (std::size_t k = 1; k < spec.magnitudes.size(); ++k) {
    if (best == 0 || spec.magnitudes[k] > spec.magnitudes[best]) best = k;
  }
  // Mean subtraction of a constant leaves only rounding residue.
  if (best == 0 || spec.magnitudes[best] <= 1e-12 * (1.0 + peak_scale)) {
    throw Error(ErrorCode::NoPeak, "spectrum is flat");
  }
  return spec.frequencies[best];
}

PhasePortrait phase_portrait(const TimeSeries& ts, std::size_t smooth_window) {
  const std::size_t n = ts.size();
  if (n < 3) throw Error(ErrorCode::TooShort, "phase portrait needs >= 3 samples");
  const auto x = moving_average(ts.samples(), smooth_window);
  const double dt = ts.dt();
  PhasePortrait out;
  out.points.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0.0;
    // Second-order one-sided stencils at the ends.
    if (i == 0) {
      v = (-3.0 * x[0] + 4.0 * x[1] - x[2]) / (2.0 * dt);
    } else if (i + 1 == n) {
      v = (3.0 * x[n - 1] - 4.0 * x[n - 2] + x[n - 3]) / (2.0 * dt);
    } else {
      v = (x[i + 1] - x[i - 1]) / (2.0 * dt);
    }
    out.points[i] = {x[i], v};
  }
  return out;
}

JumpMetric phase_jumps(const PhasePortrait& portrait) {
  const auto& pts = portrait.points;
  JumpMetric m;
  if (pts.size() < 2) return m;
  std::vector<double> steps;
  steps.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    steps.push_back(std::hypot(pts[i].x - pts[i - 1].x, pts[i].v - pts[i - 1].v));
  }
  m.max_step = *std::max_element(steps.begin(), steps.end());
  m.median_step = percentile(steps, 50.0);
  m.ratio = m.median_step > 0.0 ? m.max_step / m.median_step : 0.0;
  return m;
}

}  // namespace spikegate::analysis
