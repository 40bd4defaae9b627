#pragma once

#include <cstddef>
#include <cstdint>

#include "spikegate/core.hpp"

namespace spikegate::simulate {

/// Multiplier applied to each inter-spike gap, by the light source active
/// when the gap starts.
struct LightPeriodFactors {
  double white = 1.0;
  double black = 1.0;
  double off = 1.0;

  [[nodiscard]] double at(LightSource source) const noexcept;
};

struct SimParams {
  ProteinoidProfile profile;
  LightSchedule schedule;
  double duration = 0.0;      // s
  std::uint64_t seed = 42;
  double noise_std = 0.0;     // mV
  LightPeriodFactors light_period_factor;
  double spike_tau = 60.0;    // s, burst envelope decay

  /// Throws Error(InvalidParams).
  void validate() const;
};

/// Gaps below this are clamped up to it.
inline constexpr double kMinGap = 60.0;
/// Amplitudes are clamped to at least this fraction of amplitude_mean.
inline constexpr double kMinAmplitudeFraction = 0.1;

/// Ground-truth spike onsets produced alongside the trace.
struct SynthResult {
  TimeSeries trace;
  SpikeTrain onsets;  // burst start times and their drawn amplitudes A
};

/// Light-modulated spiking trace sampled at 1 Hz.
///
/// Gaps ~ Normal(period_mean, period_std) clamped at kMinGap and scaled by
/// the light factor at the gap's start; the first spike comes one gap after
/// t = 0. Each spike at t_s adds A*exp(-(t-t_s)/tau)*sin(2*pi*(t-t_s)/fast_period)
/// for t_s <= t < t_s + 12*tau, A ~ Normal(amplitude_mean, amplitude_std)
/// clamped at 0.1*amplitude_mean. Gaussian noise of noise_std is added per
/// sample. Gaps, amplitudes and noise each draw from their own RNG stream.
[[nodiscard]] SynthResult synth_proteinoid_detailed(const SimParams& params);
[[nodiscard]] TimeSeries synth_proteinoid(const SimParams& params);

struct PendulumParams {
  double omega = 1.0;  // rad/s
  double zeta = 0.0;
  double theta0 = 1.0;
  double v0 = 0.0;
  double dt = 1e-3;    // s
  std::size_t n = 10000;

  /// Throws Error(InvalidParams).
  void validate() const;
};

struct PendulumTrace {
  TimeSeries displacement;  // n + 1 samples, t = 0 .. n*dt
  TimeSeries velocity;
};

/// Classic RK4 on x'' + 2*zeta*omega*x' + omega^2*x = 0.
[[nodiscard]] PendulumTrace pendulum(const PendulumParams& params);

struct SphereMetrics {
  double surface_area = 0.0;  // m^2
  double volume = 0.0;        // m^3
};

/// area = pi*d^2, volume = pi*d^3/6. Throws Error(NonPositiveDiameter).
[[nodiscard]] SphereMetrics sphere_metrics(double diameter);

}  // namespace spikegate::simulate
