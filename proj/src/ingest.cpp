#include "spikegate/ingest.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "spikegate/format.hpp"

namespace spikegate::ingest {

namespace {

constexpr double kSpacingTolerance = 1e-9;

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(trim(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Finite decimal number, nothing else on the field.
bool parse_number(std::string_view field, double& out) {
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

// Number with an optional unit suffix, e.g. "1800s".
bool parse_number_suffix(std::string_view field, std::string_view suffix, double& out) {
  if (field.size() > suffix.size() && field.substr(field.size() - suffix.size()) == suffix) {
    field.remove_suffix(suffix.size());
  }
  return parse_number(field, out);
}

std::string physical(long line) { return "line " + std::to_string(line); }

}  // namespace

Recording parse_recording(std::istream& in) {
  std::string line;
  long line_no = 0;
  std::vector<std::string> names;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto cols = split(trim(line), ',');
    if (cols.size() < 2 || cols.front() != "time_s") {
      throw Error(ErrorCode::MalformedRow, "header must be time_s followed by >= 1 channel, " + physical(line_no), 0);
    }
    for (std::size_t c = 1; c < cols.size(); ++c) {
      if (cols[c].empty()) throw Error(ErrorCode::MalformedRow, "empty channel name, " + physical(line_no), 0);
      names.emplace_back(cols[c]);
    }
    have_header = true;
    break;
  }
  if (!have_header) throw Error(ErrorCode::EmptyFile, "no header line");

  const std::size_t n_channels = names.size();
  std::vector<double> times;
  std::vector<std::vector<double>> values(n_channels);
  long row = 0;
  double first_spacing = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    ++row;
    auto cols = split(trim(line), ',');
    if (cols.size() != n_channels + 1) {
      throw Error(ErrorCode::MalformedRow,
                  "expected " + std::to_string(n_channels + 1) + " fields, got " + std::to_string(cols.size()) +
                      ", " + physical(line_no),
                  row);
    }
    double t = 0.0;
    if (!parse_number(cols[0], t)) throw Error(ErrorCode::MalformedRow, "bad time value, " + physical(line_no), row);
    for (std::size_t c = 0; c < n_channels; ++c) {
      double v = 0.0;
      if (!parse_number(cols[c + 1], v)) {
        throw Error(ErrorCode::MalformedRow, "bad value in column " + std::to_string(c + 2) + ", " + physical(line_no),
                    row);
      }
      values[c].push_back(v);
    }
    if (!times.empty()) {
      const double spacing = t - times.back();
      if (!(spacing > 0.0)) throw Error(ErrorCode::NonMonotonicTime, physical(line_no), row);
      if (times.size() == 1) {
        first_spacing = spacing;
      } else if (std::abs(spacing - first_spacing) > kSpacingTolerance) {
        throw Error(ErrorCode::NonUniformSpacing, physical(line_no), row);
      }
    }
    times.push_back(t);
  }

  Recording out;
  out.channel_names = std::move(names);
  const double t0 = times.empty() ? 0.0 : times.front();
  const double dt = times.size() < 2 ? 1.0 : (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  for (auto& v : values) out.channels.emplace_back(t0, dt, std::move(v));
  return out;
}

Recording parse_recording(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_recording(in);
}

std::string write_recording(std::span<const TimeSeries> series, std::span<const std::string> names) {
  if (series.empty()) throw Error(ErrorCode::MismatchedSeries, "at least one series is required");
  if (!names.empty() && names.size() != series.size()) {
    throw Error(ErrorCode::MismatchedSeries, "name count differs from series count");
  }
  const auto& ref = series.front();
  for (const auto& s : series) {
    if (s.t0() != ref.t0() || s.dt() != ref.dt() || s.size() != ref.size()) {
      throw Error(ErrorCode::MismatchedSeries, "series must share t0, dt and length");
    }
  }
  std::string out = "time_s";
  for (std::size_t c = 0; c < series.size(); ++c) {
    out += ',';
    out += names.empty() ? "ch" + std::to_string(c + 1) + "_mV" : names[c];
  }
  out += '\n';
  for (std::size_t i = 0; i < ref.size(); ++i) {
    out += format_time(ref.time_at(i));
    for (const auto& s : series) {
      out += ',';
      out += format_sig9(s[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<LightSegment> expand_cycle(const CycleSpec& cycle) {
  if (!(cycle.on > 0.0) || cycle.off < 0.0 || cycle.repeats < 0) {
    throw Error(ErrorCode::InvalidSegment, "cycle needs on > 0, off >= 0, repeat >= 0");
  }
  std::vector<LightSegment> out;
  out.reserve(static_cast<std::size_t>(cycle.repeats));
  for (int k = 0; k < cycle.repeats; ++k) {
    out.push_back({cycle.start + k * (cycle.on + cycle.off), cycle.on, cycle.source, cycle.intensity});
  }
  return out;
}

namespace {

LightSource source_or_throw(std::string_view token, long row) {
  auto source = parse_light_source(token);
  if (!source) throw Error(ErrorCode::UnknownSource, std::string(token), row);
  return *source;
}

CycleSpec parse_cycle(const std::vector<std::string_view>& tok, long row) {
  // cycle <source> <intensity> lux <on>s on <off>s off repeat <n> [start <t>s]
  if ((tok.size() != 10 && tok.size() != 12) || tok[3] != "lux" || tok[5] != "on" || tok[7] != "off" ||
      tok[8] != "repeat") {
    throw Error(ErrorCode::MalformedRow, "expected: cycle <source> <intensity> lux <on>s on <off>s off repeat <n>", row);
  }
  CycleSpec c;
  c.source = source_or_throw(tok[1], row);
  double repeats = 0.0;
  if (!parse_number(tok[2], c.intensity) || !parse_number_suffix(tok[4], "s", c.on) ||
      !parse_number_suffix(tok[6], "s", c.off) || !parse_number(tok[9], repeats) || repeats != std::floor(repeats) ||
      repeats < 0 || repeats > 1e6) {
    throw Error(ErrorCode::MalformedRow, "bad number in cycle directive", row);
  }
  c.repeats = static_cast<int>(repeats);
  if (tok.size() == 12) {
    if (tok[10] != "start" || !parse_number_suffix(tok[11], "s", c.start)) {
      throw Error(ErrorCode::MalformedRow, "expected: start <t>s", row);
    }
  }
  if (c.intensity < 0.0) throw Error(ErrorCode::NegativeIntensity, "", row);
  return c;
}

}  // namespace

LightSchedule parse_schedule(std::istream& in) {
  std::vector<LightSegment> segments;
  std::string line;
  long row = 0;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (skippable(line)) continue;
    ++row;
    const auto tok = split_ws(trim(line));
    if (tok.front() == "segment") {
      if (tok.size() != 5) throw Error(ErrorCode::MalformedRow, "expected: segment <source> <lux> <start> <duration>", row);
      LightSegment seg;
      seg.source = source_or_throw(tok[1], row);
      if (!parse_number(tok[2], seg.intensity) || !parse_number_suffix(tok[3], "s", seg.start) ||
          !parse_number_suffix(tok[4], "s", seg.duration)) {
        throw Error(ErrorCode::MalformedRow, "bad number in segment directive", row);
      }
      if (seg.intensity < 0.0) throw Error(ErrorCode::NegativeIntensity, "", row);
      segments.push_back(seg);
    } else if (tok.front() == "cycle") {
      auto expanded = expand_cycle(parse_cycle(tok, row));
      segments.insert(segments.end(), expanded.begin(), expanded.end());
    } else {
      throw Error(ErrorCode::MalformedRow, "unknown directive '" + std::string(tok.front()) + "'", row);
    }
  }
  return LightSchedule(std::move(segments));
}

LightSchedule parse_schedule(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_schedule(in);
}

}  // namespace spikegate::ingest
