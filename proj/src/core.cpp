#include "spikegate/core.hpp"

#include <algorithm>
#include <cmath>

namespace spikegate {

std::optional<ErrorCode> validate_timeseries(double t0, double dt, std::span<const double> samples) noexcept {
  if (!std::isfinite(dt) || dt <= 0.0) return ErrorCode::NonPositiveDt;
  if (!std::isfinite(t0)) return ErrorCode::NonFinite;
  for (double s : samples) {
    if (!std::isfinite(s)) return ErrorCode::NonFinite;
  }
  return std::nullopt;
}

std::optional<ErrorCode> validate_timeseries(const TimeSeries& ts) noexcept {
  return validate_timeseries(ts.t0(), ts.dt(), ts.samples());
}

TimeSeries::TimeSeries(double t0, double dt, std::vector<double> samples)
    : t0_(t0), dt_(dt), samples_(std::move(samples)) {
  if (auto err = validate_timeseries(t0_, dt_, samples_)) {
    throw Error(*err, "invalid time series");
  }
}

SpikeTrain::SpikeTrain(std::vector<Spike> spikes) : spikes_(std::move(spikes)) {
  for (std::size_t i = 0; i < spikes_.size(); ++i) {
    if (!std::isfinite(spikes_[i].time) || !std::isfinite(spikes_[i].amplitude)) {
      throw Error(ErrorCode::NonFinite, "spike " + std::to_string(i));
    }
    if (i > 0 && !(spikes_[i].time > spikes_[i - 1].time)) {
      throw Error(ErrorCode::UnsortedSpikes, "spike times must strictly increase at index " + std::to_string(i));
    }
  }
}

SpikeTrain SpikeTrain::from_times(std::span<const double> times) {
  std::vector<Spike> spikes;
  spikes.reserve(times.size());
  for (double t : times) spikes.push_back({t, 1.0});
  return SpikeTrain(std::move(spikes));
}

std::vector<double> SpikeTrain::times() const {
  std::vector<double> out;
  out.reserve(spikes_.size());
  for (const auto& s : spikes_) out.push_back(s.time);
  return out;
}

std::string_view to_string(LightSource source) noexcept {
  switch (source) {
    case LightSource::White: return "white";
    case LightSource::Black: return "black";
    case LightSource::Off: return "off";
  }
  return "off";
}

std::optional<LightSource> parse_light_source(std::string_view name) noexcept {
  if (name == "white") return LightSource::White;
  if (name == "black") return LightSource::Black;
  if (name == "off") return LightSource::Off;
  return std::nullopt;
}

LightSchedule::LightSchedule(std::vector<LightSegment> segments) : segments_(std::move(segments)) {
  std::stable_sort(segments_.begin(), segments_.end(),
                   [](const LightSegment& a, const LightSegment& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    if (!std::isfinite(seg.start) || !std::isfinite(seg.duration) || !std::isfinite(seg.intensity)) {
      throw Error(ErrorCode::InvalidSegment, "non-finite segment field");
    }
    if (seg.duration <= 0.0) throw Error(ErrorCode::InvalidSegment, "segment duration must be positive");
    if (seg.intensity < 0.0) throw Error(ErrorCode::NegativeIntensity, "segment intensity must be >= 0");
    if ((seg.intensity == 0.0) != (seg.source == LightSource::Off)) {
      throw Error(ErrorCode::InvalidSegment, "intensity must be 0 exactly when the source is off");
    }
    if (i > 0 && seg.start < segments_[i - 1].end()) {
      throw Error(ErrorCode::OverlappingSegments,
                  "segment at " + std::to_string(seg.start) + " s overlaps the previous one");
    }
  }
}

LightSource LightSchedule::source_at(double t) const noexcept {
  // Last segment starting at or before t.
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double value, const LightSegment& seg) { return value < seg.start; });
  if (it == segments_.begin()) return LightSource::Off;
  --it;
  return t < it->end() ? it->source : LightSource::Off;
}

void ProteinoidProfile::validate() const {
  const bool finite = std::isfinite(period_mean) && std::isfinite(period_std) && std::isfinite(amplitude_mean) &&
                      std::isfinite(amplitude_std) && std::isfinite(fast_period);
  if (!finite) throw Error(ErrorCode::InvalidProfile, name + ": non-finite field");
  if (period_mean <= 0.0) throw Error(ErrorCode::InvalidProfile, name + ": period_mean must be > 0");
  if (period_std < 0.0) throw Error(ErrorCode::InvalidProfile, name + ": period_std must be >= 0");
  if (amplitude_std < 0.0) throw Error(ErrorCode::InvalidProfile, name + ": amplitude_std must be >= 0");
  if (fast_period <= 0.0) throw Error(ErrorCode::InvalidProfile, name + ": fast_period must be > 0");
}

namespace {

ProteinoidProfile make_profile(std::string name, double period_mean, double period_std, double nll,
                               double amplitude_mean, double amplitude_std, std::optional<double> periodic_mean,
                               std::optional<double> periodic_std, bool amplitude_published = true) {
  ProteinoidProfile p;
  p.name = std::move(name);
  p.period_mean = period_mean;
  p.period_std = period_std;
  p.amplitude_mean = amplitude_mean;
  p.amplitude_std = amplitude_std;
  p.reference_nll = nll;
  p.periodic_period_mean = periodic_mean;
  p.periodic_period_std = periodic_std;
  p.amplitude_published = amplitude_published;
  return p;
}

std::map<std::string, ProteinoidProfile> make_builtin_profiles() {
  std::map<std::string, ProteinoidProfile> out;
  auto add = [&out](ProteinoidProfile p) { out.emplace(p.name, std::move(p)); };
  add(make_profile("L-Glu:L-Phe:L-His", 3247.9, 760.83, 148.06, 6.68, 0.61, 3417.83, 316.04));
  add(make_profile("L-Glu:L-Phe", 3534.3, 453.94, 272.21, 2.87, 0.47, 2174.00, 612.09));
  add(make_profile("L-Phe:L-Lys", 3742.9, 517.55, 248.54, 23.77, 0.83, 3265.83, 451.62));
  add(make_profile("L-Phe", 3400.8, 1144.8, 122.58, 0.82, 0.43, 759.32, 108.34));
  // No peak-voltage row exists for L-Asp; amplitude is the mean of the four
  // published rows.
  add(make_profile("L-Asp", 2237.4, 745.87, 118.03, 8.535, 0.585, std::nullopt, std::nullopt, false));
  return out;
}

}  // namespace

const std::map<std::string, ProteinoidProfile>& builtin_profiles() {
  static const std::map<std::string, ProteinoidProfile> profiles = make_builtin_profiles();
  return profiles;
}

const ProteinoidProfile& find_profile(std::string_view name) {
  const auto& all = builtin_profiles();
  auto it = all.find(std::string(name));
  if (it == all.end()) throw Error(ErrorCode::UnknownProfile, std::string(name));
  return it->second;
}

const std::vector<PublishedQuartiles>& published_quartiles() {
  static const std::vector<PublishedQuartiles> table = {
      {"L-Glu:L-Phe:L-His", 3328.64, 3548.0, false},
      {"L-Glu:L-Phe", 3412.75, 3676.57, false},
      {"L-Phe:L-Lys", 3541.38, 4154.73, false},  // printed as "4154.73.57"
      {"L-Asp", 2251.13, 4316.33, false},
      {"L-Phe", 1807.8, 2529.9, false},
  };
  return table;
}

}  // namespace spikegate
