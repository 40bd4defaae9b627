#pragma once

#include <complex>
#include <span>
#include <vector>

// Thin FFT layer shared by analysis and fm. Any length is supported.

namespace spikegate::spectral {

/// Unnormalized forward DFT: X_k = sum_n x_n exp(-2*pi*i*k*n/N).
[[nodiscard]] std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x);

/// Inverse DFT including the 1/N factor.
[[nodiscard]] std::vector<std::complex<double>> idft(std::span<const std::complex<double>> X);

/// Bins 0..floor(N/2) of the DFT of real input.
[[nodiscard]] std::vector<std::complex<double>> rdft(std::span<const double> x);

/// x + i*H{x}, formed by zeroing negative frequencies of the DFT.
[[nodiscard]] std::vector<std::complex<double>> analytic_signal(std::span<const double> x);

}  // namespace spikegate::spectral
