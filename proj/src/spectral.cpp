#include "spikegate/spectral.hpp"

#include <fftw3.h>

#include <mutex>

namespace spikegate::spectral {

namespace {

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Plan {
  fftw_plan plan = nullptr;
  ~Plan() {
    if (plan) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan);
    }
  }
};

std::vector<std::complex<double>> c2c(std::span<const std::complex<double>> x, int sign) {
  std::vector<std::complex<double>> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(x.size());
  if (x.empty()) return out;
  Plan p;
  {
    std::lock_guard lock(planner_mutex());
    p.plan = fftw_plan_dft_1d(static_cast<int>(x.size()), reinterpret_cast<fftw_complex*>(in.data()),
                              reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE);
  }
  fftw_execute(p.plan);
  return out;
}

}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x) { return c2c(x, FFTW_FORWARD); }

std::vector<std::complex<double>> idft(std::span<const std::complex<double>> X) {
  auto out = c2c(X, FFTW_BACKWARD);
  const double scale = out.empty() ? 1.0 : 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<std::complex<double>> rdft(std::span<const double> x) {
  if (x.empty()) return {};
  std::vector<double> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(x.size() / 2 + 1);
  Plan p;
  {
    std::lock_guard lock(planner_mutex());
    p.plan = fftw_plan_dft_r2c_1d(static_cast<int>(x.size()), in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                  FFTW_ESTIMATE);
  }
  fftw_execute(p.plan);
  return out;
}

std::vector<std::complex<double>> analytic_signal(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<std::complex<double>> buf(x.begin(), x.end());
  auto X = dft(buf);
  // Keep DC (and Nyquist for even n) once, double positive bins, drop negative.
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k < n; ++k) {
    if (k < (n + 1) / 2) {
      X[k] *= 2.0;
    } else if (!(n % 2 == 0 && k == half)) {
      X[k] = 0.0;
    }
  }
  return idft(X);
}

}  // namespace spikegate::spectral
