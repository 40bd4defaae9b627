#include "spikegate/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "spikegate/rng.hpp"

namespace spikegate::simulate {

double LightPeriodFactors::at(LightSource source) const noexcept {
  switch (source) {
    case LightSource::White: return white;
    case LightSource::Black: return black;
    case LightSource::Off: return off;
  }
  return off;
}

void SimParams::validate() const {
  try {
    profile.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidParams, e.what());
  }
  if (!std::isfinite(duration) || duration < 0.0) throw Error(ErrorCode::InvalidParams, "duration must be >= 0");
  if (!std::isfinite(noise_std) || noise_std < 0.0) throw Error(ErrorCode::InvalidParams, "noise_std must be >= 0");
  for (double f : {light_period_factor.white, light_period_factor.black, light_period_factor.off}) {
    if (!std::isfinite(f) || f <= 0.0) throw Error(ErrorCode::InvalidParams, "light period factors must be > 0");
  }
  if (!std::isfinite(spike_tau) || spike_tau <= 0.0) throw Error(ErrorCode::InvalidParams, "spike_tau must be > 0");
}

SynthResult synth_proteinoid_detailed(const SimParams& params) {
  params.validate();
  const auto& prof = params.profile;
  const auto n = static_cast<std::size_t>(std::floor(params.duration));
  std::vector<double> samples(n, 0.0);

  auto gaps = rng::stream(params.seed, rng::Stream::Gaps);
  auto amps = rng::stream(params.seed, rng::Stream::Amplitudes);
  auto noise = rng::stream(params.seed, rng::Stream::Noise);

  const double omega_fast = 2.0 * std::numbers::pi / prof.fast_period;
  const double reach = 12.0 * params.spike_tau;
  const double min_amp = kMinAmplitudeFraction * prof.amplitude_mean;
  const double end = static_cast<double>(n);

  std::vector<Spike> onsets;
  double t = 0.0;
  while (true) {
    const double factor = params.light_period_factor.at(params.schedule.source_at(t));
    const double gap = std::max(kMinGap, prof.period_mean + prof.period_std * gaps.normal()) * factor;
    t += gap;
    if (t >= end) break;
    const double a = std::max(min_amp, prof.amplitude_mean + prof.amplitude_std * amps.normal());
    onsets.push_back({t, a});
    const auto first = static_cast<std::size_t>(std::ceil(t));
    const auto last = std::min(n, static_cast<std::size_t>(std::ceil(t + reach)));
    for (std::size_t i = first; i < last; ++i) {
      const double age = static_cast<double>(i) - t;
      samples[i] += a * std::exp(-age / params.spike_tau) * std::sin(omega_fast * age);
    }
  }
  if (params.noise_std > 0.0) {
    for (auto& s : samples) s += params.noise_std * noise.normal();
  }
  return {TimeSeries(0.0, 1.0, std::move(samples)), SpikeTrain(std::move(onsets))};
}

TimeSeries synth_proteinoid(const SimParams& params) { return synth_proteinoid_detailed(params).trace; }

void PendulumParams::validate() const {
  if (!std::isfinite(omega) || omega <= 0.0) throw Error(ErrorCode::InvalidParams, "omega must be > 0");
  if (!std::isfinite(zeta) || zeta < 0.0) throw Error(ErrorCode::InvalidParams, "zeta must be >= 0");
  if (!std::isfinite(dt) || dt <= 0.0) throw Error(ErrorCode::InvalidParams, "dt must be > 0");
  if (!std::isfinite(theta0) || !std::isfinite(v0)) throw Error(ErrorCode::InvalidParams, "non-finite initial state");
  if (n < 1) throw Error(ErrorCode::InvalidParams, "n must be >= 1");
}

PendulumTrace pendulum(const PendulumParams& p) {
  p.validate();
  using State = std::array<double, 2>;
  const double damping = 2.0 * p.zeta * p.omega;
  const double stiffness = p.omega * p.omega;
  const auto deriv = [&](const State& s) -> State { return {s[1], -damping * s[1] - stiffness * s[0]}; };
  const auto axpy = [](const State& s, double h, const State& k) -> State { return {s[0] + h * k[0], s[1] + h * k[1]}; };

  std::vector<double> x(p.n + 1), v(p.n + 1);
  State s{p.theta0, p.v0};
  x[0] = s[0];
  v[0] = s[1];
  const double h = p.dt;
  for (std::size_t i = 1; i <= p.n; ++i) {
    const State k1 = deriv(s);
    const State k2 = deriv(axpy(s, h / 2, k1));
    const State k3 = deriv(axpy(s, h / 2, k2));
    const State k4 = deriv(axpy(s, h, k3));
    s[0] += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    s[1] += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    x[i] = s[0];
    v[i] = s[1];
  }
  return {TimeSeries(0.0, h, std::move(x)), TimeSeries(0.0, h, std::move(v))};
}

SphereMetrics sphere_metrics(double diameter) {
  if (!std::isfinite(diameter) || diameter <= 0.0) {
    throw Error(ErrorCode::NonPositiveDiameter, "diameter must be positive and finite");
  }
  const double d2 = diameter * diameter;
  const double area = std::numbers::pi * d2;
  return {area, area * (diameter / 6.0)};
}

}  // namespace spikegate::simulate
