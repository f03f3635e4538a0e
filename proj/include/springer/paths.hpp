#pragma once

// Ballot paths, two-colored Motzkin paths and their weight systems.
//
// Heights are measured before each step: h_i counts the U steps minus the D
// steps strictly to the left of step i. The weight on step i is bounded by
// h_i for U and H, and by h_i - 1 for D and T (T is the second color of
// horizontal step).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "springer/bigint.hpp"

namespace springer {

enum class Step : char { kUp = 'U', kDown = 'D', kHorizontal = 'H', kTilde = 'T' };

inline bool is_horizontal(Step s) { return s == Step::kHorizontal || s == Step::kTilde; }

/// Largest admissible weight on a step of kind `s` started at height `h`.
/// Negative when no weight is admissible.
inline int weight_bound(Step s, int h) {
  return (s == Step::kUp || s == Step::kHorizontal) ? h : h - 1;
}

/// Heights before each step. Throws BelowAxis when a prefix dips below 0.
std::vector<int> height_profile(std::span<const Step> steps);

/// A step word that never dips below the axis.
class StepWord {
 public:
  StepWord() = default;
  explicit StepWord(std::vector<Step> steps);
  static StepWord parse(std::string_view letters);

  std::size_t size() const noexcept { return steps_.size(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  std::span<const Step> steps() const noexcept { return steps_; }
  const std::vector<int>& heights() const noexcept { return heights_; }
  int final_height() const noexcept { return final_height_; }
  std::string str() const;

  bool operator==(const StepWord& other) const { return steps_ == other.steps_; }

 private:
  std::vector<Step> steps_;
  std::vector<int> heights_;
  int final_height_ = 0;
};

class LabeledBallotPath {
 public:
  /// Validated constructor; see validate_labeled_ballot.
  static LabeledBallotPath make(StepWord steps, std::vector<int> weights);

  std::size_t size() const noexcept { return steps_.size(); }
  const StepWord& steps() const noexcept { return steps_; }
  std::span<const int> weights() const noexcept { return weights_; }

  bool operator==(const LabeledBallotPath&) const = default;

 private:
  LabeledBallotPath(StepWord steps, std::vector<int> weights)
      : steps_(std::move(steps)), weights_(std::move(weights)) {}

  StepWord steps_;
  std::vector<int> weights_;
};

class LaguerreHistory {
 public:
  /// Validated constructor; see validate_laguerre.
  static LaguerreHistory make(StepWord steps, std::vector<int> weights);

  std::size_t size() const noexcept { return steps_.size(); }
  const StepWord& steps() const noexcept { return steps_; }
  std::span<const int> weights() const noexcept { return weights_; }

  bool operator==(const LaguerreHistory&) const = default;

 private:
  LaguerreHistory(StepWord steps, std::vector<int> weights)
      : steps_(std::move(steps)), weights_(std::move(weights)) {}

  StepWord steps_;
  std::vector<int> weights_;
};

/// Errors: LengthMismatch, HorizontalStepPresent, WeightOutOfRange(i).
LabeledBallotPath validate_labeled_ballot(StepWord steps, std::vector<int> weights);
/// Errors: LengthMismatch, WeightOutOfRange(i), NotClosed.
LaguerreHistory validate_laguerre(StepWord steps, std::vector<int> weights);

/// Reverse the history, swap U and D, and reflect every weight inside its
/// admissible range. An involution on histories of each length.
LaguerreHistory history_rc(const LaguerreHistory& hw);

/// First half of an rc-fixed Dyck history.
/// Errors: OddLength, HorizontalStepPresent, NotRcFixed.
LabeledBallotPath halve_rc_fixed(const LaguerreHistory& hw);

/// The unique rc-fixed history of twice the length whose first half is lbp.
LaguerreHistory extend_to_rc_fixed(const LabeledBallotPath& lbp);

/// Reflects every weight inside its range; steps are kept.
LabeledBallotPath wbar(const LabeledBallotPath& lbp);

/// Number of labeled ballot paths of length n, by a height DP in which an
/// up step from height h carries h + 1 choices and a down step h.
BigInt count_lbp_dp(std::size_t n);

}  // namespace springer
