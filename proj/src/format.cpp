#include "spikegate/format.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>

namespace spikegate {

std::string format_sig9(double value) {
  if (value == 0.0) return "0";
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.9g", value);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string format_time(double value) {
  if (value == 0.0) return "0";
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.15g", value);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

double round_sig9(double value) { return std::strtod(format_sig9(value).c_str(), nullptr); }

}  // namespace spikegate
