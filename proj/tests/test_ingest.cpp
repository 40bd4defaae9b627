#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "spikegate/format.hpp"
#include "spikegate/ingest.hpp"

using namespace spikegate;
using namespace spikegate::ingest;

namespace {

ErrorCode parse_error_code(std::string_view text, long* row = nullptr) {
  try {
    (void)parse_recording(text);
  } catch (const Error& e) {
    if (row) *row = e.row().value_or(-1);
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error";
  return ErrorCode::EmptyInput;
}

}  // namespace

TEST(ParseRecording, TwoRowFile) {
  const auto rec = parse_recording("time_s,ch1_mV\n0,1.0\n1,2.0");
  ASSERT_EQ(rec.channels.size(), 1u);
  EXPECT_EQ(rec.channel_names[0], "ch1_mV");
  const auto& ts = rec.channels[0];
  EXPECT_EQ(ts.t0(), 0.0);
  EXPECT_EQ(ts.dt(), 1.0);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0], 1.0);
  EXPECT_EQ(ts[1], 2.0);
}

TEST(ParseRecording, DuplicateTimeReportsRow) {
  long row = 0;
  EXPECT_EQ(parse_error_code("time_s,ch1_mV\n0,1\n1,2\n1,3\n", &row), ErrorCode::NonMonotonicTime);
  EXPECT_EQ(row, 3);
}

TEST(ParseRecording, CommentsAndCrlfIgnored) {
  const auto rec = parse_recording("# logger export\r\ntime_s,a_mV,b_mV\r\n# row comment\r\n5,1,2\r\n6,3,4\r\n");
  ASSERT_EQ(rec.channels.size(), 2u);
  EXPECT_EQ(rec.channel_names[1], "b_mV");
  EXPECT_EQ(rec.channels[0].t0(), 5.0);
  EXPECT_EQ(rec.channels[1][1], 4.0);
}

TEST(ParseRecording, Errors) {
  long row = 0;
  EXPECT_EQ(parse_error_code(""), ErrorCode::EmptyFile);
  EXPECT_EQ(parse_error_code("# only a comment\n"), ErrorCode::EmptyFile);
  EXPECT_EQ(parse_error_code("volts\n1\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(parse_error_code("time_s\n1\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(parse_error_code("time_s,ch1_mV\n0,1\n1,x\n", &row), ErrorCode::MalformedRow);
  EXPECT_EQ(row, 2);
  EXPECT_EQ(parse_error_code("time_s,ch1_mV\n0,1\n1,2,3\n", &row), ErrorCode::MalformedRow);
  EXPECT_EQ(row, 2);
  EXPECT_EQ(parse_error_code("time_s,ch1_mV\n0,nan\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(parse_error_code("time_s,ch1_mV\n0,1\n1,1\n3,1\n", &row), ErrorCode::NonUniformSpacing);
  EXPECT_EQ(row, 3);
  EXPECT_EQ(parse_error_code("time_s,ch1_mV\n1,1\n0,1\n", &row), ErrorCode::NonMonotonicTime);
  EXPECT_EQ(row, 2);
}

TEST(ParseRecording, HeaderOnlyGivesEmptyChannels) {
  const auto rec = parse_recording("time_s,ch1_mV\n");
  ASSERT_EQ(rec.channels.size(), 1u);
  EXPECT_TRUE(rec.channels[0].empty());
}

TEST(WriteRecording, SingleSample) {
  const std::vector<TimeSeries> s{TimeSeries(0.0, 1.0, {0.5})};
  EXPECT_EQ(write_recording(s), "time_s,ch1_mV\n0,0.5\n");
}

TEST(WriteRecording, NineSignificantDigits) {
  const std::vector<TimeSeries> s{TimeSeries(0.0, 1.0, {1.0 / 3.0, -2.0 / 3.0, 123456789.123, -0.0})};
  EXPECT_EQ(write_recording(s), "time_s,ch1_mV\n0,0.333333333\n1,-0.666666667\n2,123456789\n3,0\n");
}

TEST(WriteRecording, MismatchedSeries) {
  const std::vector<TimeSeries> s{TimeSeries(0.0, 1.0, {1, 2}), TimeSeries(0.0, 2.0, {1, 2})};
  try {
    (void)write_recording(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MismatchedSeries);
  }
  const std::vector<TimeSeries> lengths{TimeSeries(0.0, 1.0, {1, 2}), TimeSeries(0.0, 1.0, {1})};
  EXPECT_THROW((void)write_recording(lengths), Error);
  EXPECT_THROW((void)write_recording(std::vector<TimeSeries>{}), Error);
}

// parse(write(x)) reproduces x exactly once samples are rounded to the
// documented nine significant digits.
TEST(RecordingRoundTrip, PropertyOverRandomRecordings) {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> value(-50.0, 50.0);
  std::uniform_int_distribution<int> len(0, 400);
  std::uniform_int_distribution<int> chans(1, 4);
  const double dts[] = {1.0, 0.5, 0.25, 2.0, 0.001, 0.1};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = trial == 0 ? 3600 : len(gen);
    const double dt = dts[trial % std::size(dts)];
    const double t0 = static_cast<double>(trial * 7);
    std::vector<TimeSeries> channels;
    for (int c = 0, k = chans(gen); c < k; ++c) {
      std::vector<double> s(static_cast<std::size_t>(n));
      for (auto& v : s) v = value(gen);
      channels.emplace_back(t0, dt, std::move(s));
    }
    const auto text = write_recording(channels);
    const auto back = parse_recording(text);
    ASSERT_EQ(back.channels.size(), channels.size());
    for (std::size_t c = 0; c < channels.size(); ++c) {
      const auto& a = channels[c];
      const auto& b = back.channels[c];
      ASSERT_EQ(a.size(), b.size());
      if (n > 0) EXPECT_EQ(b.t0(), a.t0());
      if (n > 1) EXPECT_NEAR(b.dt(), a.dt(), 1e-12 * a.dt());
      for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(b[i], round_sig9(a[i]));
    }
    // Writing the parsed recording again is byte-identical.
    EXPECT_EQ(write_recording(back.channels, back.channel_names), text);
  }
}

TEST(RecordingRoundTrip, DyadicSpacingIsExact) {
  std::vector<double> s(3600);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<double>(i % 17) * 0.25;
  const std::vector<TimeSeries> x{TimeSeries(0.0, 1.0, s)};
  const auto back = parse_recording(write_recording(x));
  EXPECT_EQ(back.channels[0], x[0]);
}

// Arbitrary bytes yield either a recording or a typed Error, nothing else.
TEST(ParseRecording, NeverFailsUntyped) {
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(0, 200);
  const std::string alphabet = "time_s,ch1_mV\n0123456789.-+e#, \r\tnaninf";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    std::string text = i % 2 ? "time_s,ch1_mV\n" : "";
    for (int k = 0, n = len(gen); k < n; ++k) {
      text += i % 3 ? alphabet[pick(gen)] : static_cast<char>(byte(gen));
    }
    try {
      (void)parse_recording(text);
    } catch (const Error&) {
    } catch (...) {
      FAIL() << "untyped failure on input " << i;
    }
  }
}

TEST(ParseSchedule, CycleShorthand) {
  const auto s = parse_schedule("cycle white 186600 lux 1800s on 1800s off repeat 6\n");
  ASSERT_EQ(s.segments().size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(s.segments()[k].source, LightSource::White);
    EXPECT_EQ(s.segments()[k].duration, 1800.0);
    EXPECT_EQ(s.segments()[k].start, 3600.0 * static_cast<double>(k));
    EXPECT_EQ(s.segments()[k].intensity, 186600.0);
  }
  EXPECT_EQ(s.source_at(1799), LightSource::White);
  EXPECT_EQ(s.source_at(1800), LightSource::Off);
}

TEST(ParseSchedule, CycleTotalDuration) {
  for (int repeats : {0, 1, 3, 6, 11}) {
    for (double off : {0.0, 900.0, 1800.0}) {
      CycleSpec c{LightSource::Black, 695.8, 1800.0, off, repeats, 0.0};
      const auto segs = expand_cycle(c);
      ASSERT_EQ(segs.size(), static_cast<std::size_t>(repeats));
      EXPECT_EQ(c.total_duration(), repeats * (1800.0 + off));
      if (repeats > 0) EXPECT_EQ(segs.back().end() + off, c.total_duration());
    }
  }
}

TEST(ParseSchedule, ExplicitSegmentsAndStart) {
  const auto s = parse_schedule(
      "# comment\n"
      "segment black 695.8 0 1800\n"
      "segment white 37200 1800 1800\n"
      "cycle white 186600 lux 1800s on 1800s off repeat 2 start 7200s\n");
  ASSERT_EQ(s.segments().size(), 4u);
  EXPECT_EQ(s.source_at(100), LightSource::Black);
  EXPECT_EQ(s.source_at(2000), LightSource::White);
  EXPECT_EQ(s.segments()[2].start, 7200.0);
  EXPECT_EQ(s.segments()[3].start, 10800.0);
}

TEST(ParseSchedule, Errors) {
  const auto code = [](std::string_view text) {
    try {
      (void)parse_schedule(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::EmptyInput;
  };
  EXPECT_EQ(code("segment white 1 0 100\nsegment white 1 50 100\n"), ErrorCode::OverlappingSegments);
  EXPECT_EQ(code("segment red 1 0 100\n"), ErrorCode::UnknownSource);
  EXPECT_EQ(code("cycle uv 1 lux 1s on 1s off repeat 1\n"), ErrorCode::UnknownSource);
  EXPECT_EQ(code("segment white -5 0 100\n"), ErrorCode::NegativeIntensity);
  EXPECT_EQ(code("cycle white -5 lux 1s on 1s off repeat 1\n"), ErrorCode::NegativeIntensity);
  EXPECT_EQ(code("segment white 1 0\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(code("flash white\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(code("cycle white 1 lux 1s on 1s off repeat 1.5\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(code(""), ErrorCode::EmptyInput);  // empty schedule is valid
}

TEST(ParseSchedule, PublishedIntensityAccepted) {
  const auto s = parse_schedule("segment white 186600 0 1800\n");
  EXPECT_EQ(s.segments()[0].intensity, 186600.0);
}

TEST(ParseSchedule, InlineComments) {
  const auto s = parse_schedule("segment white 186600 0 1800s   # lamp on\n# full-line comment\n"
                                "segment black 695.8 3600s 600s#uv\n");
  ASSERT_EQ(s.segments().size(), 2u);
  EXPECT_EQ(s.source_at(100), LightSource::White);
  EXPECT_EQ(s.source_at(3700), LightSource::Black);
}
