#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spikegate/core.hpp"

namespace spikegate::analysis {

struct DetectParams {
  double threshold = 1.0;       // mV, minimum processed peak value
  double refractory = 300.0;    // s, minimum spacing between accepted spikes
  std::size_t smooth_window = 5;  // samples, odd
  bool detrend = false;         // subtract least-squares line first

  /// Throws Error(InvalidParams).
  void validate() const;
};

/// Centered moving average of odd width; near the ends the window is
/// truncated to the samples that exist.
[[nodiscard]] std::vector<double> moving_average(std::span<const double> x, std::size_t width);

/// x minus its least-squares straight line.
[[nodiscard]] std::vector<double> detrend_linear(std::span<const double> x);

/// Local maxima (x[i-1] < x[i] >= x[i+1], interior only) of the processed
/// signal with value >= threshold, accepted greedily in time order; a
/// candidate closer than `refractory` to the last accepted spike is skipped.
/// Amplitudes are read from the raw signal at the detected index.
[[nodiscard]] SpikeTrain detect_spikes(const TimeSeries& ts, const DetectParams& p);

/// Consecutive spike-time differences.
[[nodiscard]] std::vector<double> periods(const SpikeTrain& train);

/// Spikes in [window_start, window_start + window_len) divided by window_len.
/// Throws Error(NonPositiveWindow).
[[nodiscard]] double mean_firing_rate(const SpikeTrain& train, double window_start, double window_len);

struct RateBin {
  double center = 0.0;  // s
  double width = 0.0;   // s, the last bin may be partial
  std::size_t count = 0;
  double rate = 0.0;    // Hz, count / width
};

/// ceil((t1 - t0)/bin) bins over [t0, t1). Throws Error(InvalidRange).
[[nodiscard]] std::vector<RateBin> binned_rate(const SpikeTrain& train, double t0, double t1, double bin);

struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;  // edges.size() - 1 half-open bins
  std::size_t out_of_range = 0;
};

/// Throws Error(BadEdges) unless edges are finite, strictly increasing, >= 2.
[[nodiscard]] Histogram histogram(std::span<const double> values, std::span<const double> edges);

/// `bins` equal-width bins spanning [min, max] of the data; the upper edge is
/// nudged up one ulp so the maximum lands inside. Empty data gives [0, 1].
[[nodiscard]] std::vector<double> auto_edges(std::span<const double> values, std::size_t bins);

struct Quartiles {
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
};

/// Percentile p of n sorted values sits at rank (n-1)*p/100, linearly
/// interpolated. Throws Error(EmptyInput).
[[nodiscard]] Quartiles quartiles(std::span<const double> values);
[[nodiscard]] double percentile(std::span<const double> values, double p);

struct Spectrum {
  std::vector<double> frequencies;  // Hz, k / (n*dt), k = 0..floor(n/2)
  std::vector<double> magnitudes;   // single-sided amplitude
};

/// One-sided amplitude spectrum of the mean-subtracted trace:
/// 2|X_k|/n, with DC and (even n) Nyquist at |X_k|/n. Throws Error(TooShort).
[[nodiscard]] Spectrum fft_spectrum(const TimeSeries& ts);

/// Argmax of fft_spectrum excluding DC, ties toward the lower frequency.
/// Throws Error(TooShort) or Error(NoPeak) for a flat spectrum.
[[nodiscard]] double dominant_frequency(const TimeSeries& ts);

/// x = smoothed signal, v = central difference (second-order one-sided at
/// both ends).
/// Throws Error(TooShort) for fewer than 3 samples.
[[nodiscard]] PhasePortrait phase_portrait(const TimeSeries& ts, std::size_t smooth_window);

struct JumpMetric {
  double max_step = 0.0;
  double median_step = 0.0;
  double ratio = 0.0;  // max / median, 0 when median is 0
};

/// Euclidean step lengths between successive phase-space points.
[[nodiscard]] JumpMetric phase_jumps(const PhasePortrait& portrait);

}  // namespace spikegate::analysis
