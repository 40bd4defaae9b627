#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spikegate/error.hpp"

// Units throughout: voltage in mV, time in seconds, illuminance in lux.

namespace spikegate {

/// Returns the first violated invariant of a uniformly sampled trace, if any.
[[nodiscard]] std::optional<ErrorCode> validate_timeseries(double t0, double dt,
                                                           std::span<const double> samples) noexcept;

/// Uniformly sampled voltage trace. Sample i sits at t0 + i*dt.
class TimeSeries {
 public:
  /// Empty trace at the logger's native rate of one sample per second.
  TimeSeries() = default;
  /// Throws Error(NonFinite | NonPositiveDt) on invalid input.
  TimeSeries(double t0, double dt, std::vector<double> samples);

  [[nodiscard]] double t0() const noexcept { return t0_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }
  [[nodiscard]] double time_at(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return samples_[i]; }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  double t0_ = 0.0;
  double dt_ = 1.0;
  std::vector<double> samples_;
};

[[nodiscard]] std::optional<ErrorCode> validate_timeseries(const TimeSeries& ts) noexcept;

struct Spike {
  double time = 0.0;       // s, absolute
  double amplitude = 0.0;  // mV, signed peak value
  friend bool operator==(const Spike&, const Spike&) = default;
};

/// Spike events in strictly increasing time order.
class SpikeTrain {
 public:
  SpikeTrain() = default;
  /// Throws Error(NonFinite | UnsortedSpikes).
  explicit SpikeTrain(std::vector<Spike> spikes);
  /// Convenience: unit-amplitude spikes at the given times.
  static SpikeTrain from_times(std::span<const double> times);

  [[nodiscard]] std::span<const Spike> spikes() const noexcept { return spikes_; }
  [[nodiscard]] std::vector<double> times() const;
  [[nodiscard]] std::size_t size() const noexcept { return spikes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return spikes_.empty(); }

  friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

 private:
  std::vector<Spike> spikes_;
};

enum class LightSource { White, Black, Off };

[[nodiscard]] std::string_view to_string(LightSource source) noexcept;
[[nodiscard]] std::optional<LightSource> parse_light_source(std::string_view name) noexcept;

struct LightSegment {
  double start = 0.0;
  double duration = 0.0;
  LightSource source = LightSource::Off;
  double intensity = 0.0;  // lux

  [[nodiscard]] double end() const noexcept { return start + duration; }
  friend bool operator==(const LightSegment&, const LightSegment&) = default;
};

/// Timed illumination. Time not covered by any segment is unlit (Off).
class LightSchedule {
 public:
  LightSchedule() = default;
  /// Sorts by start, then throws Error(InvalidSegment | NegativeIntensity |
  /// OverlappingSegments) if a segment is ill-formed or two segments overlap.
  explicit LightSchedule(std::vector<LightSegment> segments);

  [[nodiscard]] std::span<const LightSegment> segments() const noexcept { return segments_; }
  [[nodiscard]] LightSource source_at(double t) const noexcept;

  friend bool operator==(const LightSchedule&, const LightSchedule&) = default;

 private:
  std::vector<LightSegment> segments_;
};

/// Generator parameters for one proteinoid.
///
/// The published measurements never cover both statistics under one
/// condition: amplitudes come from the periodic-white-light peak table, while
/// the period mean/std come from the Gaussian fits made under black/white
/// alternation. fast_period (intra-spike oscillation) is 128 s for every
/// profile because that is the only value reported.
struct ProteinoidProfile {
  std::string name;
  double period_mean = 0.0;     // s
  double period_std = 0.0;      // s
  double amplitude_mean = 0.0;  // mV
  double amplitude_std = 0.0;   // mV
  double fast_period = 128.0;   // s

  // Reference metadata, not used by the generator.
  std::optional<double> reference_nll;            // NLL of the published period fit
  std::optional<double> periodic_period_mean;     // s, periodic-white-light table
  std::optional<double> periodic_period_std;      // s
  bool amplitude_published = true;                // false: amplitude is a pooled placeholder

  /// Throws Error(InvalidProfile) if period_mean <= 0, period_std < 0,
  /// fast_period <= 0, amplitude_std < 0 or any field is non-finite.
  void validate() const;
};

/// The five published profiles, keyed by name.
[[nodiscard]] const std::map<std::string, ProteinoidProfile>& builtin_profiles();

/// Throws Error(UnknownProfile).
[[nodiscard]] const ProteinoidProfile& find_profile(std::string_view name);

/// Published box-plot quartiles of period (s). Raw samples were never
/// released, so these cannot be recomputed; they are carried for reference.
struct PublishedQuartiles {
  std::string name;
  double q25 = 0.0;
  double q75 = 0.0;
  bool raw_data_available = false;
};

[[nodiscard]] const std::vector<PublishedQuartiles>& published_quartiles();

struct GaussianFit {
  double mu = 0.0;
  double sigma = 0.0;
  double nll = 0.0;
  std::size_t n = 0;
};

/// Two-input gate realised by the spike responses to inputs (01), (10), (11).
enum class GateClass { Or, SelectY, Xor, SelectX, NotXAndY, XAndNotY, And, ConstFalse };

struct PhasePoint {
  double x = 0.0;  // mV
  double v = 0.0;  // mV/s
};

struct PhasePortrait {
  std::vector<PhasePoint> points;
};

}  // namespace spikegate
