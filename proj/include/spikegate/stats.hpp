#pragma once

#include <span>

#include "spikegate/core.hpp"

namespace spikegate::stats {

/// Normal density exp(-(v-mu)^2 / (2 sigma^2)) / (sqrt(2 pi) sigma).
/// Throws Error(NonPositiveSigma).
[[nodiscard]] double gaussian_pdf(double v, double mu, double sigma);

/// sum_i 0.5*ln(2 pi sigma^2) + (v_i - mu)^2 / (2 sigma^2).
/// Throws Error(NonPositiveSigma).
[[nodiscard]] double nll(std::span<const double> values, double mu, double sigma);

/// Maximum-likelihood fit: sample mean, population (1/n) standard deviation,
/// and the NLL at those parameters. Throws Error(TooFewValues) for n < 2 and
/// Error(DegenerateData) when all values are equal.
[[nodiscard]] GaussianFit fit_gaussian(std::span<const double> values);

[[nodiscard]] double mean(std::span<const double> values);

/// Pearson correlation; 0 if either side has zero variance.
/// Throws Error(LengthMismatch) or Error(TooFewValues).
[[nodiscard]] double correlation(std::span<const double> a, std::span<const double> b);

}  // namespace spikegate::stats
