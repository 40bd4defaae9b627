#pragma once

#include <string>

namespace spikegate {

/// Nine significant digits, printf "%.9g" style; negative zero prints as "0".
[[nodiscard]] std::string format_sig9(double value);

/// Fifteen significant digits ("%.15g"), used for time stamps: enough for
/// any sampling grid, and it hides accumulation noise such as 28.016000000000002.
[[nodiscard]] std::string format_time(double value);

/// `value` rounded to nine significant digits.
[[nodiscard]] double round_sig9(double value);

}  // namespace spikegate
