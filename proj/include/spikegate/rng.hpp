#pragma once

#include <array>
#include <cstdint>

namespace spikegate::rng {

/// SplitMix64 (Steele, Lea, Flood 2014). Used only to expand seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna). State filled from SplitMix64.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard normal via Box-Muller (cosine branch; two uniforms per draw).
  double normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

enum class Stream : std::uint64_t { Gaps = 0, Amplitudes = 1, Noise = 2 };

/// Independent generator for one named stream of a seeded run. Stream k is
/// seeded with seed + (k + 1) * 0x9E3779B97F4A7C15.
[[nodiscard]] Xoshiro256StarStar stream(std::uint64_t seed, Stream which) noexcept;

}  // namespace spikegate::rng
