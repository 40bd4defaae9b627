#include "spikegate/stats.hpp"

#include <cmath>
#include <numbers>

namespace spikegate::stats {

namespace {

void require_sigma(double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0.0) throw Error(ErrorCode::NonPositiveSigma, "sigma must be > 0");
}

}  // namespace

double gaussian_pdf(double v, double mu, double sigma) {
  require_sigma(sigma);
  const double z = (v - mu) / sigma;
  return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

double nll(std::span<const double> values, double mu, double sigma) {
  require_sigma(sigma);
  const double log_norm = 0.5 * std::log(2.0 * std::numbers::pi * sigma * sigma);
  double sum = 0.0;
  for (double v : values) {
    const double d = v - mu;
    sum += log_norm + d * d / (2.0 * sigma * sigma);
  }
  return sum;
}

double mean(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "mean of no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

GaussianFit fit_gaussian(std::span<const double> values) {
  if (values.size() < 2) throw Error(ErrorCode::TooFewValues, "need at least two values");
  bool all_equal = true;
  for (double v : values) all_equal = all_equal && v == values.front();
  if (all_equal) throw Error(ErrorCode::DegenerateData, "all values are equal");

  const double mu = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  const double sigma = std::sqrt(ss / static_cast<double>(values.size()));
  if (!(sigma > 0.0)) throw Error(ErrorCode::DegenerateData, "zero spread");
  return {mu, sigma, nll(values, mu, sigma), values.size()};
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "correlation inputs differ in length");
  if (a.size() < 2) throw Error(ErrorCode::TooFewValues, "correlation needs >= 2 pairs");
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace spikegate::stats
