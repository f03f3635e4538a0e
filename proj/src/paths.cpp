#include "springer/paths.hpp"

#include <string>

#include "springer/error.hpp"

namespace springer {

namespace {

int delta(Step s) {
  switch (s) {
    case Step::kUp: return 1;
    case Step::kDown: return -1;
    default: return 0;
  }
}

Step flip_vertical(Step s) {
  switch (s) {
    case Step::kUp: return Step::kDown;
    case Step::kDown: return Step::kUp;
    default: return s;
  }
}

void check_weights(const StepWord& steps, const std::vector<int>& weights) {
  if (weights.size() != steps.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(steps.size()) + " steps but " +
                                                std::to_string(weights.size()) + " weights");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int bound = weight_bound(steps[i], steps.heights()[i]);
    if (weights[i] < 0 || weights[i] > bound) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  "weight " + std::to_string(weights[i]) + " not in 0.." + std::to_string(bound),
                  i + 1);
    }
  }
}

// Reflected weights w -> bound - w, written in reverse order with flipped steps.
std::pair<std::vector<Step>, std::vector<int>> rc_image(const StepWord& steps,
                                                       std::span<const int> weights) {
  const auto n = steps.size();
  std::vector<Step> s(n);
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[n - 1 - i] = flip_vertical(steps[i]);
    w[n - 1 - i] = weight_bound(steps[i], steps.heights()[i]) - weights[i];
  }
  return {std::move(s), std::move(w)};
}

}  // namespace

std::vector<int> height_profile(std::span<const Step> steps) {
  std::vector<int> h(steps.size());
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h[i] = height;
    height += delta(steps[i]);
    if (height < 0) throw Error(ErrorCode::kBelowAxis, "path dips below the axis", i + 1);
  }
  return h;
}

StepWord::StepWord(std::vector<Step> steps) : steps_(std::move(steps)) {
  heights_ = height_profile(steps_);
  final_height_ = steps_.empty() ? 0 : heights_.back() + delta(steps_.back());
}

StepWord StepWord::parse(std::string_view letters) {
  std::vector<Step> steps;
  steps.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case 'U': steps.push_back(Step::kUp); break;
      case 'D': steps.push_back(Step::kDown); break;
      case 'H': steps.push_back(Step::kHorizontal); break;
      case 'T': steps.push_back(Step::kTilde); break;
      default:
        throw Error(ErrorCode::kParse,
                    "unknown step letter '" + std::string(1, letters[i]) + "'", i + 1);
    }
  }
  return StepWord(std::move(steps));
}

std::string StepWord::str() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step step : steps_) s.push_back(static_cast<char>(step));
  return s;
}

LabeledBallotPath LabeledBallotPath::make(StepWord steps, std::vector<int> weights) {
  if (weights.size() == steps.size()) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (is_horizontal(steps[i])) {
        throw Error(ErrorCode::kHorizontalStepPresent, "ballot paths have no horizontal steps",
                    i + 1);
      }
    }
  }
  check_weights(steps, weights);
  return LabeledBallotPath(std::move(steps), std::move(weights));
}

LaguerreHistory LaguerreHistory::make(StepWord steps, std::vector<int> weights) {
  check_weights(steps, weights);
  if (steps.final_height() != 0) {
    throw Error(ErrorCode::kNotClosed,
                "path ends at height " + std::to_string(steps.final_height()));
  }
  return LaguerreHistory(std::move(steps), std::move(weights));
}

LabeledBallotPath validate_labeled_ballot(StepWord steps, std::vector<int> weights) {
  return LabeledBallotPath::make(std::move(steps), std::move(weights));
}

LaguerreHistory validate_laguerre(StepWord steps, std::vector<int> weights) {
  return LaguerreHistory::make(std::move(steps), std::move(weights));
}

LaguerreHistory history_rc(const LaguerreHistory& hw) {
  auto [s, w] = rc_image(hw.steps(), hw.weights());
  return LaguerreHistory::make(StepWord(std::move(s)), std::move(w));
}

LabeledBallotPath halve_rc_fixed(const LaguerreHistory& hw) {
  const auto len = hw.size();
  if (len % 2 != 0) throw Error(ErrorCode::kOddLength, "length " + std::to_string(len));
  for (std::size_t i = 0; i < len; ++i) {
    if (is_horizontal(hw.steps()[i])) {
      throw Error(ErrorCode::kHorizontalStepPresent, "history is not a Dyck path", i + 1);
    }
  }
  if (history_rc(hw) != hw) throw Error(ErrorCode::kNotRcFixed, "history is not rc-fixed");

  const auto n = len / 2;
  const auto steps = hw.steps().steps();
  std::vector<Step> half(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<int> weights(hw.weights().begin(),
                           hw.weights().begin() + static_cast<std::ptrdiff_t>(n));
  return LabeledBallotPath::make(StepWord(std::move(half)), std::move(weights));
}

LaguerreHistory extend_to_rc_fixed(const LabeledBallotPath& lbp) {
  const auto n = lbp.size();
  auto [tail_steps, tail_weights] = rc_image(lbp.steps(), lbp.weights());
  std::vector<Step> steps(lbp.steps().steps().begin(), lbp.steps().steps().end());
  std::vector<int> weights(lbp.weights().begin(), lbp.weights().end());
  steps.reserve(2 * n);
  weights.reserve(2 * n);
  steps.insert(steps.end(), tail_steps.begin(), tail_steps.end());
  weights.insert(weights.end(), tail_weights.begin(), tail_weights.end());
  return LaguerreHistory::make(StepWord(std::move(steps)), std::move(weights));
}

LabeledBallotPath wbar(const LabeledBallotPath& lbp) {
  const auto& steps = lbp.steps();
  std::vector<int> w(lbp.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = weight_bound(steps[i], steps.heights()[i]) - lbp.weights()[i];
  }
  return LabeledBallotPath::make(steps, std::move(w));
}

BigInt count_lbp_dp(std::size_t n) {
  // ways[h]: weighted number of prefixes ending at height h.
  std::vector<BigInt> ways(n + 2, 0);
  ways[0] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<BigInt> next(n + 2, 0);
    for (std::size_t h = 0; h <= step; ++h) {
      if (ways[h] == 0) continue;
      next[h + 1] += ways[h] * (h + 1);
      if (h >= 1) next[h - 1] += ways[h] * h;
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

}  // namespace springer
