#include "springer/bijections.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "springer/error.hpp"

namespace springer {

namespace {

void require_snake(const SignedPermutation& s) {
  if (!is_snake(s)) throw Error(ErrorCode::kNotASnake, "input is not a snake");
}

void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::kInvariantBroken, what);
}

}  // namespace

MarkedPermutation phi_step1(const ThreeWIP& wip) {
  const auto n = wip.size();
  const auto sigma = wip.sigma().values();
  const auto pi = wip.pi().values();
  std::vector<int> tau(n);
  for (std::size_t i = 0; i < n; ++i) tau[sigma[i] - 1] = pi[i];

  MarkedPermutation out{Permutation(std::move(tau)), {}};
  const auto peaks = cycle_peaks(out.perm);
  for (std::size_t l = 0; l + 1 < n; ++l) {
    const int k = sigma[l];
    if (pi[l + 1] == k && std::binary_search(peaks.begin(), peaks.end(), k)) {
      out.marks.insert(k);
    }
  }
  return out;
}

ThreeWIP phi_step1_inverse(const MarkedPermutation& mp) {
  const auto tau = mp.perm.values();
  const auto n = tau.size();
  const auto peaks = cycle_peaks(mp.perm);
  for (int m : mp.marks) {
    if (!std::binary_search(peaks.begin(), peaks.end(), m)) {
      throw Error(ErrorCode::kMarkNotCyclePeak, std::to_string(m) + " is not a cycle peak");
    }
  }

  // Bucket the columns by c = max(i, tau_i); a bucket holds two columns
  // exactly when c is a cycle peak.
  struct Column {
    int index;
    int image;
  };
  std::vector<std::vector<Column>> buckets(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const int index = static_cast<int>(i + 1);
    buckets[std::max(index, tau[i])].push_back({index, tau[i]});
  }

  std::vector<int> sigma;
  std::vector<int> pi;
  sigma.reserve(n);
  pi.reserve(n);
  for (int c = 1; c <= static_cast<int>(n); ++c) {
    auto& bucket = buckets[c];
    ensure(bucket.size() <= 2, "more than two columns share a maximum");
    if (bucket.size() == 2) {
      // Index order puts (j, c) before (c, tau_c); a mark swaps them.
      if (bucket[0].index > bucket[1].index) std::swap(bucket[0], bucket[1]);
      if (mp.is_marked(c)) std::swap(bucket[0], bucket[1]);
    }
    for (const auto& col : bucket) {
      sigma.push_back(col.index);
      pi.push_back(col.image);
    }
  }
  return ThreeWIP(Permutation(std::move(sigma)), Permutation(std::move(pi)));
}

PhiTrace phi_trace(const ThreeWIP& wip, Check check) {
  PhiTrace trace;
  trace.tau = phi_step1(wip);
  trace.tau_tilde = MarkedPermutation{foata(trace.tau.perm), trace.tau.marks};

  const auto word = trace.tau_tilde.perm.values();
  const auto n = word.size();
  const auto valleys = right_valleys(trace.tau_tilde.perm);
  const auto peaks = left_peaks(trace.tau_tilde.perm);
  if (check == Check::kVerify) {
    for (int m : trace.tau_tilde.marks) {
      const auto it = std::find(word.begin(), word.end(), m);
      const auto pos = static_cast<std::size_t>(it - word.begin()) + 1;
      ensure(std::binary_search(peaks.begin(), peaks.end(), pos),
             "a mark did not land on a left peak");
    }
  }

  std::vector<int> out(word.begin(), word.end());
  std::optional<std::size_t> last_peak;
  auto valley = valleys.begin();
  auto peak = peaks.begin();
  for (std::size_t pos = 1; pos <= n; ++pos) {
    if (peak != peaks.end() && *peak == pos) {
      last_peak = pos;
      ++peak;
    }
    const bool is_valley = valley != valleys.end() && *valley == pos;
    bool barred = false;
    if (is_valley) {
      ++valley;
      ensure(last_peak.has_value(), "right valley without a left peak to its left");
      barred = trace.tau_tilde.is_marked(word[*last_peak - 1]);
    } else {
      barred = pos % 2 == 0;
    }
    if (barred) out[pos - 1] = -out[pos - 1];
  }
  trace.snake = SignedPermutation(std::move(out));
  if (check == Check::kVerify) ensure(is_snake(trace.snake), "phi produced a non-snake");
  return trace;
}

SignedPermutation phi(const ThreeWIP& wip, Check check) {
  return phi_trace(wip, check).snake;
}

ThreeWIP phi_inverse(const SignedPermutation& snake, Check check) {
  require_snake(snake);
  const auto signs = snake.values();
  MarkedPermutation tau_tilde{snake.magnitudes(), {}};
  const auto word = tau_tilde.perm.values();
  const auto valleys = right_valleys(tau_tilde.perm);
  const auto peaks = left_peaks(tau_tilde.perm);

  // Bars on the valleys owned by one peak must agree; they are its mark.
  std::optional<std::size_t> last_peak;
  // -1 until the current peak has seen a valley, then 0 or 1.
  int peak_barred = -1;
  auto valley = valleys.begin();
  auto peak = peaks.begin();
  for (std::size_t pos = 1; pos <= word.size(); ++pos) {
    if (peak != peaks.end() && *peak == pos) {
      last_peak = pos;
      peak_barred = -1;
      ++peak;
    }
    const bool barred = signs[pos - 1] < 0;
    if (valley != valleys.end() && *valley == pos) {
      ++valley;
      if (!last_peak) {
        throw Error(ErrorCode::kInvariantBroken, "right valley without a left peak", pos);
      }
      if (peak_barred >= 0 && peak_barred != static_cast<int>(barred)) {
        throw Error(ErrorCode::kInconsistentBars,
                    "valleys of the peak at position " + std::to_string(*last_peak) +
                        " disagree",
                    pos);
      }
      peak_barred = static_cast<int>(barred);
      if (barred) tau_tilde.marks.insert(word[*last_peak - 1]);
    } else if (check == Check::kVerify) {
      ensure(barred == (pos % 2 == 0), "snake sign pattern violated off the valleys");
    }
  }

  MarkedPermutation tau{foata_inverse(tau_tilde.perm), std::move(tau_tilde.marks)};
  return phi_step1_inverse(tau);
}

Permutation psi(const SignedPermutation& snake, Check check) {
  require_snake(snake);
  const auto v = snake.values();
  const int n = static_cast<int>(v.size());
  const int len = 2 * n;
  std::vector<int> tilde(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) tilde[i] = v[i] > 0 ? n + v[i] : n + 1 + v[i];

  std::vector<int> out(len, 0);
  for (int i = 0; i < n; ++i) {
    if (n % 2 == 1) {
      out[i] = tilde[n - 1 - i];  // first half is the reverse of tilde
    } else {
      out[n + i] = tilde[i];  // second half is tilde
    }
  }
  // Mirror positions sum to 2n + 1.
  for (int i = 0; i < n; ++i) {
    if (n % 2 == 1) {
      out[len - 1 - i] = len + 1 - out[i];
    } else {
      out[i] = len + 1 - out[len - 1 - i];
    }
  }
  Permutation p(std::move(out));
  if (check == Check::kVerify) {
    ensure(is_alternating(p) && is_rc_invariant(p), "psi produced a non-member");
  }
  return p;
}

SignedPermutation psi_inverse(const Permutation& p, Check check) {
  if (p.size() % 2 != 0) throw Error(ErrorCode::kOddLength, "length " + std::to_string(p.size()));
  if (!is_rc_invariant(p)) throw Error(ErrorCode::kNotRcInvariant, "input is not rc-invariant");
  if (!is_alternating(p)) throw Error(ErrorCode::kNotAlternating, "input is not alternating");

  const auto v = p.values();
  const int n = static_cast<int>(v.size() / 2);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    const int t = (n % 2 == 1) ? v[n - 1 - i] : v[n + i];
    out[i] = t > n ? t - n : t - n - 1;
  }
  SignedPermutation s(std::move(out));
  if (check == Check::kVerify) ensure(is_snake(s), "psi_inverse produced a non-snake");
  return s;
}

LaguerreHistory fz(const Permutation& p) {
  const auto v = p.values();
  const auto n = v.size();
  std::vector<Step> steps(n);
  std::vector<int> weights(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int i = v[j];
    const int left = j == 0 ? 0 : v[j - 1];
    const bool rises_in = left < i;
    const bool rises_out = j + 1 == n || i < v[j + 1];
    Step s;
    if (!rises_in && rises_out) {
      s = Step::kUp;
    } else if (rises_in && !rises_out) {
      s = Step::kDown;
    } else if (rises_in) {
      s = Step::kHorizontal;
    } else {
      s = Step::kTilde;
    }
    steps[i - 1] = s;
    weights[i - 1] = count_pat_31_2_at(p, i);
  }
  return LaguerreHistory::make(StepWord(std::move(steps)), std::move(weights));
}

Permutation fz_inverse(const LaguerreHistory& hw) {
  constexpr int kSlot = 0;
  std::vector<int> tokens{kSlot};
  const auto n = hw.size();
  tokens.reserve(2 * n + 1);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const int value = static_cast<int>(idx + 1);
    const int target = hw.weights()[idx];
    int seen = -1;
    auto it = std::find_if(tokens.begin(), tokens.end(),
                           [&](int t) { return t == kSlot && ++seen == target; });
    if (it == tokens.end()) {
      throw Error(ErrorCode::kPlaceholderExhausted,
                  "fewer than " + std::to_string(target + 1) + " placeholders", idx + 1);
    }
    switch (hw.steps()[idx]) {
      case Step::kUp:  // slot i slot
        it = tokens.insert(it + 1, value);
        tokens.insert(it + 1, kSlot);
        break;
      case Step::kHorizontal:  // i slot
        tokens.insert(it, value);
        break;
      case Step::kDown:  // i
        *it = value;
        break;
      case Step::kTilde:  // slot i
        tokens.insert(it + 1, value);
        break;
    }
  }
  const auto slots = std::count(tokens.begin(), tokens.end(), kSlot);
  if (slots != 1) {
    throw Error(ErrorCode::kInvariantBroken,
                std::to_string(slots) + " placeholders remain after insertion");
  }
  tokens.erase(std::find(tokens.begin(), tokens.end(), kSlot));
  return Permutation(std::move(tokens));
}

LabeledBallotPath rcalt_to_lbp(const Permutation& p, Check check) {
  if (p.size() % 2 != 0) throw Error(ErrorCode::kOddLength, "length " + std::to_string(p.size()));
  if (!is_alternating(p)) throw Error(ErrorCode::kNotAlternating, "input is not alternating");
  if (!is_rc_invariant(p)) throw Error(ErrorCode::kNotRcInvariant, "input is not rc-invariant");
  const auto history = fz(p);
  if (check == Check::kVerify) {
    ensure(std::none_of(history.steps().steps().begin(), history.steps().steps().end(),
                        is_horizontal),
           "fz image of an alternating permutation has a horizontal step");
  }
  return halve_rc_fixed(history);
}

Permutation lbp_to_rcalt(const LabeledBallotPath& lbp, Check check) {
  Permutation p = fz_inverse(extend_to_rc_fixed(lbp));
  if (check == Check::kVerify) ensure(is_rcalt(p), "lbp_to_rcalt produced a non-member");
  return p;
}

LabeledBallotPath snake_to_lbp(const SignedPermutation& snake, Check check) {
  return rcalt_to_lbp(psi(snake, check), check);
}

SignedPermutation lbp_to_snake(const LabeledBallotPath& lbp, Check check) {
  return psi_inverse(lbp_to_rcalt(lbp, check), check);
}

}  // namespace springer
