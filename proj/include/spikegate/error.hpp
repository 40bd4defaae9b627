#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spikegate {

enum class ErrorCode {
  // core-model
  NonFinite,
  NonPositiveDt,
  UnsortedSpikes,
  InvalidSegment,
  InvalidProfile,
  // ingest
  MalformedRow,
  NonMonotonicTime,
  NonUniformSpacing,
  EmptyFile,
  MismatchedSeries,
  OverlappingSegments,
  UnknownSource,
  NegativeIntensity,
  // simulate
  InvalidParams,
  NonPositiveDiameter,
  // analysis
  NonPositiveWindow,
  InvalidRange,
  BadEdges,
  EmptyInput,
  TooShort,
  NoPeak,
  // stats
  NonPositiveSigma,
  TooFewValues,
  DegenerateData,
  // gates
  MissingInputPair,
  LengthMismatch,
  TooFewInputs,
  // fm
  NyquistViolation,
  EmptyMessage,
  ZeroDeviation,
  DegenerateInput,
  // cli
  UnknownProfile,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Typed failure raised by every library operation. `row()` carries the
/// 1-based data-row index for parse errors, when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<long> row = std::nullopt);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<long> row() const noexcept { return row_; }
  /// The message without the "Code(row): " prefix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<long> row_;
};

}  // namespace spikegate
