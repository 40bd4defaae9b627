#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spikegate/analysis.hpp"
#include "spikegate/ingest.hpp"
#include "spikegate/simulate.hpp"
#include "spikegate/stats.hpp"

using namespace spikegate;
using namespace spikegate::simulate;

namespace {

SimParams base_params(const std::string& profile, double duration, double noise) {
  SimParams p;
  p.profile = find_profile(profile);
  p.duration = duration;
  p.noise_std = noise;
  p.seed = 42;
  return p;
}

// Closed-form solution of x'' + 2 zeta omega x' + omega^2 x = 0, zeta < 1.
double underdamped(double t, double omega, double zeta, double x0, double v0) {
  const double wd = omega * std::sqrt(1.0 - zeta * zeta);
  return std::exp(-zeta * omega * t) * (x0 * std::cos(wd * t) + (v0 + zeta * omega * x0) / wd * std::sin(wd * t));
}

double max_error_vs_closed_form(const PendulumParams& p) {
  const auto tr = pendulum(p);
  double err = 0.0;
  for (std::size_t i = 0; i < tr.displacement.size(); ++i) {
    const double t = static_cast<double>(i) * p.dt;
    err = std::max(err, std::abs(tr.displacement[i] - underdamped(t, p.omega, p.zeta, p.theta0, p.v0)));
  }
  return err;
}

}  // namespace

TEST(SynthProteinoid, ZeroDurationIsEmpty) {
  const auto ts = synth_proteinoid(base_params("L-Asp", 0.0, 0.05));
  EXPECT_TRUE(ts.empty());
  EXPECT_EQ(ts.dt(), 1.0);
}

TEST(SynthProteinoid, SameSeedBitIdentical) {
  auto p = base_params("L-Glu:L-Phe:L-His", 50000, 0.05);
  const auto a = synth_proteinoid(p);
  const auto b = synth_proteinoid(p);
  ASSERT_EQ(a.size(), 50000u);
  EXPECT_EQ(a, b);
  p.seed = 43;
  EXPECT_NE(synth_proteinoid(p), a);
}

TEST(SynthProteinoid, NoiseStreamDoesNotPerturbSpikes) {
  // Separate streams: changing the noise level leaves spike timing untouched.
  const auto quiet = synth_proteinoid_detailed(base_params("L-Phe", 100000, 0.0));
  const auto noisy = synth_proteinoid_detailed(base_params("L-Phe", 100000, 0.2));
  EXPECT_EQ(quiet.onsets, noisy.onsets);
}

TEST(SynthProteinoid, GapsAndAmplitudesRespectClamps) {
  auto p = base_params("L-Phe", 2'000'000, 0.0);
  const auto r = synth_proteinoid_detailed(p);
  const auto gaps = analysis::periods(r.onsets);
  ASSERT_GT(gaps.size(), 100u);
  for (double g : gaps) EXPECT_GE(g, kMinGap);
  for (const auto& s : r.onsets.spikes()) EXPECT_GE(s.amplitude, 0.1 * p.profile.amplitude_mean);
}

TEST(SynthProteinoid, InvalidParams) {
  auto p = base_params("L-Asp", 100, 0.0);
  p.noise_std = -1;
  EXPECT_THROW((void)synth_proteinoid(p), Error);
  p = base_params("L-Asp", -1, 0.0);
  EXPECT_THROW((void)synth_proteinoid(p), Error);
  p = base_params("L-Asp", 100, 0.0);
  p.light_period_factor.black = 0.0;
  EXPECT_THROW((void)synth_proteinoid(p), Error);
  p = base_params("L-Asp", 100, 0.0);
  p.spike_tau = 0.0;
  try {
    (void)synth_proteinoid(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
}

TEST(SynthProteinoid, DetectedMeanPeriodMatchesProfile) {
  const auto ts = synth_proteinoid(base_params("L-Glu:L-Phe:L-His", 400000, 0.05));
  analysis::DetectParams d;
  d.threshold = 0.2;
  d.refractory = 300;
  d.smooth_window = 5;
  const auto per = analysis::periods(analysis::detect_spikes(ts, d));
  ASSERT_GT(per.size(), 50u);
  EXPECT_NEAR(stats::mean(per), 3247.9, 0.05 * 3247.9);
}

TEST(SynthProteinoid, WhiteLightShortensPeriods) {
  auto p = base_params("L-Glu:L-Phe:L-His", 1'000'000, 0.05);
  p.schedule = ingest::parse_schedule("cycle white 186600 lux 1800s on 1800s off repeat 300\n");
  p.light_period_factor.white = 0.8;
  p.light_period_factor.off = 1.0;
  const auto ts = synth_proteinoid(p);
  analysis::DetectParams d{0.2, 300, 5, false};
  const auto train = analysis::detect_spikes(ts, d);
  std::vector<double> white, off;
  const auto spikes = train.spikes();
  for (std::size_t i = 1; i < spikes.size(); ++i) {
    const double gap = spikes[i].time - spikes[i - 1].time;
    (p.schedule.source_at(spikes[i - 1].time) == LightSource::White ? white : off).push_back(gap);
  }
  ASSERT_GE(white.size(), 50u);
  ASSERT_GE(off.size(), 50u);
  EXPECT_LT(stats::mean(white), stats::mean(off));
}

TEST(Pendulum, UndampedMatchesCosine) {
  PendulumParams p{1.0, 0.0, 1.0, 0.0, 0.001, 10000};
  const auto tr = pendulum(p);
  ASSERT_EQ(tr.displacement.size(), 10001u);
  double err = 0.0;
  for (std::size_t i = 0; i < tr.displacement.size(); ++i) {
    err = std::max(err, std::abs(tr.displacement[i] - std::cos(static_cast<double>(i) * 0.001)));
  }
  EXPECT_LE(err, 1e-6);
}

TEST(Pendulum, UndampedEnergyConserved) {
  PendulumParams p{2.0, 0.0, 0.7, 0.3, 0.001, 10000};
  const auto tr = pendulum(p);
  const auto energy = [&](std::size_t i) {
    return 0.5 * tr.velocity[i] * tr.velocity[i] + 0.5 * p.omega * p.omega * tr.displacement[i] * tr.displacement[i];
  };
  const double e0 = energy(0);
  double drift = 0.0;
  for (std::size_t i = 0; i < tr.displacement.size(); ++i) drift = std::max(drift, std::abs(energy(i) - e0) / e0);
  EXPECT_LE(drift, 1e-6);
}

TEST(Pendulum, DampedMaximaDecrease) {
  PendulumParams p{1.0, 0.1, 1.0, 0.0, 0.001, 60000};
  const auto tr = pendulum(p);
  std::vector<double> maxima;
  for (std::size_t i = 1; i + 1 < tr.displacement.size(); ++i) {
    if (tr.displacement[i] > tr.displacement[i - 1] && tr.displacement[i] >= tr.displacement[i + 1]) {
      maxima.push_back(tr.displacement[i]);
    }
  }
  ASSERT_GE(maxima.size(), 5u);
  for (std::size_t k = 1; k < maxima.size(); ++k) EXPECT_LT(maxima[k], maxima[k - 1]);
}

TEST(Pendulum, DampedMatchesClosedForm) {
  PendulumParams p{1.0, 0.1, 1.0, 0.0, 0.001, 10000};
  EXPECT_LE(max_error_vs_closed_form(p), 1e-6);
}

TEST(Pendulum, FourthOrderConvergence) {
  PendulumParams coarse{1.0, 0.1, 1.0, 0.0, 0.02, 1000};
  PendulumParams fine{1.0, 0.1, 1.0, 0.0, 0.01, 2000};
  const double e1 = max_error_vs_closed_form(coarse);
  const double e2 = max_error_vs_closed_form(fine);
  EXPECT_GE(e1 / e2, 8.0) << e1 << " vs " << e2;
}

TEST(Pendulum, InvalidParams) {
  EXPECT_THROW((void)pendulum({0.0, 0.0, 1.0, 0.0, 0.01, 10}), Error);
  EXPECT_THROW((void)pendulum({1.0, 0.0, 1.0, 0.0, 0.0, 10}), Error);
  EXPECT_THROW((void)pendulum({1.0, 0.0, 1.0, 0.0, 0.01, 0}), Error);
  EXPECT_THROW((void)pendulum({1.0, -0.1, 1.0, 0.0, 0.01, 10}), Error);
}

TEST(SphereMetrics, PublishedNanosphere) {
  const auto m = sphere_metrics(370.394e-9);
  EXPECT_NEAR(m.surface_area, 4.32e-13, 0.01 * 4.32e-13);
  EXPECT_NEAR(m.volume, 2.67e-20, 0.01 * 2.67e-20);
}

TEST(SphereMetrics, UnitFormulas) {
  EXPECT_NEAR(sphere_metrics(1.0).volume, 0.5235988, 1e-7);
  EXPECT_NEAR(sphere_metrics(2.0).surface_area, 12.566371, 1e-6);
}

TEST(SphereMetrics, VolumeOverAreaIsSixthDiameter) {
  for (double d : {1e-9, 370.394e-9, 0.5, 1.0, 3.0, 17.25, 1e4}) {
    const auto m = sphere_metrics(d);
    EXPECT_DOUBLE_EQ(m.volume / m.surface_area, d / 6.0);
  }
}

TEST(SphereMetrics, RejectsNonPositive) {
  try {
    (void)sphere_metrics(0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveDiameter);
  }
  EXPECT_THROW((void)sphere_metrics(-1.0), Error);
}
