#include "spikegate/error.hpp"

namespace spikegate {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonPositiveDt: return "NonPositiveDt";
    case ErrorCode::UnsortedSpikes: return "UnsortedSpikes";
    case ErrorCode::InvalidSegment: return "InvalidSegment";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::NonUniformSpacing: return "NonUniformSpacing";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::MismatchedSeries: return "MismatchedSeries";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::UnknownSource: return "UnknownSource";
    case ErrorCode::NegativeIntensity: return "NegativeIntensity";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonPositiveDiameter: return "NonPositiveDiameter";
    case ErrorCode::NonPositiveWindow: return "NonPositiveWindow";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::BadEdges: return "BadEdges";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NoPeak: return "NoPeak";
    case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
    case ErrorCode::TooFewValues: return "TooFewValues";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::MissingInputPair: return "MissingInputPair";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewInputs: return "TooFewInputs";
    case ErrorCode::NyquistViolation: return "NyquistViolation";
    case ErrorCode::EmptyMessage: return "EmptyMessage";
    case ErrorCode::ZeroDeviation: return "ZeroDeviation";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::UnknownProfile: return "UnknownProfile";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<long> row) {
  std::string out{to_string(code)};
  if (row) out += "(" + std::to_string(*row) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<long> row)
    : std::runtime_error(decorate(code, message, row)), code_(code), message_(message), row_(row) {}

}  // namespace spikegate
