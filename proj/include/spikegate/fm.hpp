#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spikegate/error.hpp"

namespace spikegate::fm {

struct FmParams {
  double carrier_hz = 200.0;
  double deviation_hz = 50.0;
  double sample_rate_hz = 2000.0;
  double amplitude = 1.0;
};

/// Lower bound quoted for sampling an FM carrier (2 * carrier) and the bound
/// actually enforced (2 * (carrier + deviation)), which also keeps the upper
/// frequency excursion below Nyquist.
struct NyquistBounds {
  double carrier_only = 0.0;
  double enforced = 0.0;
};

[[nodiscard]] NyquistBounds nyquist_bounds(const FmParams& p) noexcept;

/// Empty when p is admissible; otherwise the error (NyquistViolation for the
/// sampling bound, InvalidParams for non-positive carrier, negative deviation
/// or non-positive amplitude). The message names both bounds.
[[nodiscard]] std::optional<Error> nyquist_ok(const FmParams& p);

struct FmSignal {
  std::vector<double> samples;
  std::size_t clipped = 0;  // message samples outside [-1, 1] that were clipped
};

/// s[i] = A cos(2 pi fc t_i + 2 pi df sum_{j<=i} m[j] / fs), t_i = i / fs.
/// Throws the nyquist_ok error or Error(EmptyMessage).
[[nodiscard]] FmSignal fm_modulate(std::span<const double> message, const FmParams& p);

/// A exp(i theta_i) for the same phase; its real part is fm_modulate.
[[nodiscard]] std::vector<std::complex<double>> fm_modulate_analytic(std::span<const double> message,
                                                                     const FmParams& p);

/// Instantaneous frequency (Hz) per sample: analytic representation, mixed
/// down by the carrier, moving-average low-pass of round(fs/fc) samples, then
/// the unwrapped phase difference. Sample 0 repeats sample 1.
/// Throws the nyquist_ok error or Error(TooShort) for fewer than 3 samples.
[[nodiscard]] std::vector<double> instantaneous_frequency(std::span<const double> signal, const FmParams& p);

/// (f_inst - fc) / df. Throws like instantaneous_frequency, plus
/// Error(ZeroDeviation).
[[nodiscard]] std::vector<double> fm_demodulate(std::span<const double> signal, const FmParams& p);

/// 2 (df + fm). Throws Error(DegenerateInput) if either is negative or both 0.
[[nodiscard]] double carson_bandwidth(double deviation_hz, double max_message_hz);

/// Width between the (1-fraction)/2 and (1+fraction)/2 cumulative-energy
/// frequencies of the one-sided spectrum (passband signals).
[[nodiscard]] double occupied_bandwidth(std::span<const double> x, double sample_rate_hz, double fraction = 0.99);

/// Frequency below which `fraction` of the energy lies (baseband signals,
/// mean removed).
[[nodiscard]] double baseband_bandwidth(std::span<const double> x, double sample_rate_hz, double fraction = 0.99);

/// m = scale * v + offset maps [min, max] of the data onto [-1, 1].
struct AffineMap {
  double scale = 0.0;
  double offset = 0.0;
  [[nodiscard]] double apply(double v) const noexcept { return scale * v + offset; }
};

/// Constant data maps to 0 (scale 0). Throws Error(EmptyMessage).
[[nodiscard]] AffineMap minmax_to_unit(std::span<const double> values);

/// Each value repeated `samples_per_value` times.
[[nodiscard]] std::vector<double> hold(std::span<const double> values, std::size_t samples_per_value);

}  // namespace spikegate::fm
