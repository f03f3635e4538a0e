#include "springer/error.hpp"

namespace springer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kInvalidSignedPermutation: return "InvalidSignedPermutation";
    case ErrorCode::kInvalidWip3: return "InvalidWip3";
    case ErrorCode::kBelowAxis: return "BelowAxis";
    case ErrorCode::kHorizontalStepPresent: return "HorizontalStepPresent";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kOddLength: return "OddLength";
    case ErrorCode::kNotRcFixed: return "NotRcFixed";
    case ErrorCode::kNotASnake: return "NotASnake";
    case ErrorCode::kInconsistentBars: return "InconsistentBars";
    case ErrorCode::kMarkNotCyclePeak: return "MarkNotCyclePeak";
    case ErrorCode::kNotRcInvariant: return "NotRcInvariant";
    case ErrorCode::kNotAlternating: return "NotAlternating";
    case ErrorCode::kPlaceholderExhausted: return "PlaceholderExhausted";
    case ErrorCode::kInvariantBroken: return "InvariantBroken";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> index) {
  std::string text(to_string(code));
  if (index) text += "(" + std::to_string(*index) + ")";
  if (!message.empty()) text += ": " + message;
  return text;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(describe(code, message, index)),
      code_(code),
      index_(index) {}

}  // namespace springer
