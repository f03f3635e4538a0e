#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace springer {

enum class ErrorCode {
  kParse,
  kOutOfRange,
  kInvalidPermutation,
  kInvalidSignedPermutation,
  kInvalidWip3,
  kBelowAxis,
  kHorizontalStepPresent,
  kWeightOutOfRange,
  kLengthMismatch,
  kNotClosed,
  kOddLength,
  kNotRcFixed,
  kNotASnake,
  kInconsistentBars,
  kMarkNotCyclePeak,
  kNotRcInvariant,
  kNotAlternating,
  kPlaceholderExhausted,
  kInvariantBroken,
};

std::string_view to_string(ErrorCode code);

/// Raised for every contract violation in the library. `index()` is the
/// 1-based position of the first offending entry when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace springer
