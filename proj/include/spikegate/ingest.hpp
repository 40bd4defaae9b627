#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spikegate/core.hpp"

namespace spikegate::ingest {

/// A parsed recording CSV: one TimeSeries per voltage column, in file order.
struct Recording {
  std::vector<std::string> channel_names;
  std::vector<TimeSeries> channels;
};

/// Parses a recording CSV.
///
/// Format: a mandatory header whose first column is `time_s`, followed by one
/// column per channel (e.g. `ch1_mV`); then one row per sample. Lines whose
/// first non-blank character is '#' and blank lines are ignored. Times must
/// strictly increase with uniform spacing (1e-9 s tolerance).
///
/// Errors carry the 1-based data-row index: MalformedRow(row),
/// NonMonotonicTime(row), NonUniformSpacing(row); EmptyFile when no header is
/// present. A header-only file gives zero-length channels.
[[nodiscard]] Recording parse_recording(std::istream& in);
[[nodiscard]] Recording parse_recording(std::string_view text);

/// Serializes channels sharing t0, dt and length. Voltages use nine
/// significant digits and times fifteen; '\n' line endings.
/// Column names default to ch1_mV, ch2_mV, ... Throws MismatchedSeries.
[[nodiscard]] std::string write_recording(std::span<const TimeSeries> series,
                                          std::span<const std::string> names = {});

/// `cycle <source> <intensity> lux <on>s on <off>s off repeat <n> [start <t>s]`
struct CycleSpec {
  LightSource source = LightSource::White;
  double intensity = 0.0;
  double on = 0.0;
  double off = 0.0;
  int repeats = 0;
  double start = 0.0;

  [[nodiscard]] double total_duration() const noexcept { return repeats * (on + off); }
};

/// ON segments of a cycle; OFF phases are left uncovered (unlit).
[[nodiscard]] std::vector<LightSegment> expand_cycle(const CycleSpec& cycle);

/// Parses a schedule file with one directive per line:
///   segment <source> <intensity_lux> <start_s> <duration_s>
///   cycle <source> <intensity> lux <on>s on <off>s off repeat <n> [start <t>s]
/// Throws UnknownSource, NegativeIntensity, OverlappingSegments, or
/// MalformedRow(row) for unparseable directives.
[[nodiscard]] LightSchedule parse_schedule(std::istream& in);
[[nodiscard]] LightSchedule parse_schedule(std::string_view text);

}  // namespace spikegate::ingest
