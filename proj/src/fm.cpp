#include "spikegate/fm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spikegate/spectral.hpp"

namespace spikegate::fm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_valid(const FmParams& p) {
  if (auto err = nyquist_ok(p)) throw *err;
}

// Carrier phase reduced to one turn before scaling, so long signals keep
// full precision.
double carrier_phase(const FmParams& p, std::size_t i) {
  const double cycles = p.carrier_hz * static_cast<double>(i) / p.sample_rate_hz;
  return kTwoPi * (cycles - std::floor(cycles));
}

std::vector<double> modulation_phase(std::span<const double> message, const FmParams& p, std::size_t& clipped) {
  std::vector<double> phase(message.size());
  const double step = kTwoPi * p.deviation_hz / p.sample_rate_hz;
  double integral = 0.0;
  clipped = 0;
  for (std::size_t i = 0; i < message.size(); ++i) {
    double m = message[i];
    if (!std::isfinite(m)) throw Error(ErrorCode::NonFinite, "message sample " + std::to_string(i));
    if (m > 1.0 || m < -1.0) {
      m = std::clamp(m, -1.0, 1.0);
      ++clipped;
    }
    integral += step * m;
    integral = std::remainder(integral, kTwoPi);
    phase[i] = carrier_phase(p, i) + integral;
  }
  return phase;
}

std::vector<double> cumulative_energy(std::span<const double> x, bool remove_mean) {
  std::vector<double> v(x.begin(), x.end());
  if (remove_mean && !v.empty()) {
    double mean = 0.0;
    for (double s : v) mean += s;
    mean /= static_cast<double>(v.size());
    for (auto& s : v) s -= mean;
  }
  const auto X = spectral::rdft(v);
  std::vector<double> cum(X.size());
  double total = 0.0;
  for (std::size_t k = 0; k < X.size(); ++k) {
    total += std::norm(X[k]);
    cum[k] = total;
  }
  return cum;
}

std::size_t quantile_bin(const std::vector<double>& cum, double q) {
  const double target = q * cum.back();
  return static_cast<std::size_t>(std::lower_bound(cum.begin(), cum.end(), target) - cum.begin());
}

void require_fraction(std::span<const double> x, double fs, double fraction) {
  if (x.size() < 2) throw Error(ErrorCode::TooShort, "bandwidth needs >= 2 samples");
  if (!(fs > 0.0) || !(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::InvalidParams, "need fs > 0 and 0 < fraction < 1");
  }
}

}  // namespace

NyquistBounds nyquist_bounds(const FmParams& p) noexcept {
  return {2.0 * p.carrier_hz, 2.0 * (p.carrier_hz + p.deviation_hz)};
}

std::optional<Error> nyquist_ok(const FmParams& p) {
  if (!std::isfinite(p.carrier_hz) || p.carrier_hz <= 0.0) return Error(ErrorCode::InvalidParams, "carrier must be > 0");
  if (!std::isfinite(p.deviation_hz) || p.deviation_hz < 0.0) {
    return Error(ErrorCode::InvalidParams, "deviation must be >= 0");
  }
  if (!std::isfinite(p.amplitude) || p.amplitude <= 0.0) return Error(ErrorCode::InvalidParams, "amplitude must be > 0");
  const auto b = nyquist_bounds(p);
  if (!std::isfinite(p.sample_rate_hz) || p.sample_rate_hz < b.enforced) {
    return Error(ErrorCode::NyquistViolation,
                 "sample rate " + std::to_string(p.sample_rate_hz) + " Hz is below 2*(carrier+deviation) = " +
                     std::to_string(b.enforced) + " Hz (carrier-only bound 2*carrier = " +
                     std::to_string(b.carrier_only) + " Hz)");
  }
  return std::nullopt;
}

FmSignal fm_modulate(std::span<const double> message, const FmParams& p) {
  require_valid(p);
  if (message.empty()) throw Error(ErrorCode::EmptyMessage, "message is empty");
  FmSignal out;
  const auto phase = modulation_phase(message, p, out.clipped);
  out.samples.resize(phase.size());
  for (std::size_t i = 0; i < phase.size(); ++i) out.samples[i] = p.amplitude * std::cos(phase[i]);
  return out;
}

std::vector<std::complex<double>> fm_modulate_analytic(std::span<const double> message, const FmParams& p) {
  require_valid(p);
  if (message.empty()) throw Error(ErrorCode::EmptyMessage, "message is empty");
  std::size_t clipped = 0;
  const auto phase = modulation_phase(message, p, clipped);
  std::vector<std::complex<double>> out(phase.size());
  for (std::size_t i = 0; i < phase.size(); ++i) out[i] = std::polar(p.amplitude, phase[i]);
  return out;
}

std::vector<double> instantaneous_frequency(std::span<const double> signal, const FmParams& p) {
  require_valid(p);
  const std::size_t n = signal.size();
  if (n < 3) throw Error(ErrorCode::TooShort, "demodulation needs >= 3 samples");

  auto z = spectral::analytic_signal(signal);
  for (std::size_t i = 0; i < n; ++i) z[i] *= std::polar(1.0, -carrier_phase(p, i));

  // Moving average over one carrier period.
  const auto width = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(p.sample_rate_hz / p.carrier_hz)));
  std::vector<std::complex<double>> prefix(n + 1);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + z[i];
  std::vector<std::complex<double>> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= width / 2 ? i - width / 2 : 0;
    const std::size_t hi = std::min(n, lo + width);
    base[i] = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
  }

  std::vector<double> f(n);
  const double to_hz = p.sample_rate_hz / kTwoPi;
  for (std::size_t i = 1; i < n; ++i) f[i] = p.carrier_hz + std::arg(base[i] * std::conj(base[i - 1])) * to_hz;
  f[0] = f[1];
  return f;
}

std::vector<double> fm_demodulate(std::span<const double> signal, const FmParams& p) {
  require_valid(p);
  if (p.deviation_hz == 0.0) throw Error(ErrorCode::ZeroDeviation, "cannot demodulate with zero deviation");
  auto f = instantaneous_frequency(signal, p);
  for (auto& v : f) v = (v - p.carrier_hz) / p.deviation_hz;
  return f;
}

double carson_bandwidth(double deviation_hz, double max_message_hz) {
  if (!std::isfinite(deviation_hz) || !std::isfinite(max_message_hz) || deviation_hz < 0.0 || max_message_hz < 0.0 ||
      (deviation_hz == 0.0 && max_message_hz == 0.0)) {
    throw Error(ErrorCode::DegenerateInput, "need deviation, message frequency >= 0 and not both 0");
  }
  return 2.0 * (deviation_hz + max_message_hz);
}

double occupied_bandwidth(std::span<const double> x, double sample_rate_hz, double fraction) {
  require_fraction(x, sample_rate_hz, fraction);
  const auto cum = cumulative_energy(x, false);
  if (cum.back() == 0.0) return 0.0;
  const double resolution = sample_rate_hz / static_cast<double>(x.size());
  const auto lo = quantile_bin(cum, (1.0 - fraction) / 2.0);
  const auto hi = quantile_bin(cum, (1.0 + fraction) / 2.0);
  return static_cast<double>(hi - lo) * resolution;
}

double baseband_bandwidth(std::span<const double> x, double sample_rate_hz, double fraction) {
  require_fraction(x, sample_rate_hz, fraction);
  const auto cum = cumulative_energy(x, true);
  if (cum.back() == 0.0) return 0.0;
  const double resolution = sample_rate_hz / static_cast<double>(x.size());
  return static_cast<double>(quantile_bin(cum, fraction)) * resolution;
}

AffineMap minmax_to_unit(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyMessage, "no values to normalize");
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*hi > *lo)) return {0.0, 0.0};
  const double scale = 2.0 / (*hi - *lo);
  return {scale, -1.0 - scale * *lo};
}

std::vector<double> hold(std::span<const double> values, std::size_t samples_per_value) {
  std::vector<double> out;
  out.reserve(values.size() * samples_per_value);
  for (double v : values) out.insert(out.end(), samples_per_value, v);
  return out;
}

}  // namespace spikegate::fm
