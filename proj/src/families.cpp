#include "springer/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "springer/error.hpp"
#include "springer/text.hpp"

namespace springer {

ThreeWIP::ThreeWIP(Permutation sigma, Permutation pi)
    : sigma_(std::move(sigma)), pi_(std::move(pi)) {
  if (sigma_.size() != pi_.size()) {
    throw Error(ErrorCode::kLengthMismatch, "sigma and pi differ in length");
  }
  int prev = 0;
  for (std::size_t pos = 1; pos <= sigma_.size(); ++pos) {
    const int c = std::max(sigma_.value_at(pos), pi_.value_at(pos));
    if (c < prev) throw Error(ErrorCode::kInvalidWip3, "column maxima decrease", pos);
    prev = c;
  }
}

bool is_wip3(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) return false;
  int prev = 0;
  for (std::size_t pos = 1; pos <= sigma.size(); ++pos) {
    const int c = std::max(sigma.value_at(pos), pi.value_at(pos));
    if (c < prev) return false;
    prev = c;
  }
  return true;
}

bool is_rcalt(const Permutation& p) {
  return p.size() % 2 == 0 && is_alternating(p) && is_rc_invariant(p);
}

namespace {

// Sorting by decimal text makes backtracking emit canonical order directly:
// each object has a fixed number of tokens, and the separators sort below
// every digit.
std::vector<int> text_order(std::vector<int> values) {
  std::sort(values.begin(), values.end(), [](int a, int b) {
    return std::to_string(a) < std::to_string(b);
  });
  return values;
}

std::vector<int> text_order_range(int lo, int hi) {
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x) v.push_back(x);
  return text_order(std::move(v));
}

// Down-up relation required between the entry at 0-based index i-1 and i.
bool continues_down_up(const std::vector<int>& word, int next) {
  if (word.empty()) return true;
  return (word.size() % 2 == 1) ? word.back() > next : word.back() < next;
}

// Generic backtracking over words with distinct magnitudes 1..n.
template <class Admit, class Emit>
bool grow(std::vector<int>& word, std::vector<bool>& used, std::size_t n,
          const std::vector<int>& candidates, const Admit& admit, const Emit& emit) {
  if (word.size() == n) return emit(word);
  for (int c : candidates) {
    const int m = std::abs(c);
    if (used[m] || !admit(word, c)) continue;
    used[m] = true;
    word.push_back(c);
    const bool keep_going = grow(word, used, n, candidates, admit, emit);
    word.pop_back();
    used[m] = false;
    if (!keep_going) return false;
  }
  return true;
}

template <class Admit, class Emit>
void grow_words(std::size_t n, const std::vector<int>& candidates, const Admit& admit,
                const Emit& emit) {
  std::vector<int> word;
  word.reserve(n);
  std::vector<bool> used(n + 1, false);
  grow(word, used, n, candidates, admit, emit);
}

// Weight vectors for a fixed step word, odometer style in canonical order.
template <class Emit>
bool grow_weights(const StepWord& steps, std::vector<int>& weights,
                  const std::vector<std::vector<int>>& choices, const Emit& emit) {
  const auto i = weights.size();
  if (i == steps.size()) return emit(weights);
  for (int w : choices[i]) {
    weights.push_back(w);
    const bool keep_going = grow_weights(steps, weights, choices, emit);
    weights.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

// Step words in canonical order over `alphabet` (already sorted), followed by
// all weight vectors on each.
template <class Make, class T>
void enumerate_weighted(std::size_t n, std::span<const Step> alphabet, bool closed,
                        const Make& make, const Visitor<T>& visit) {
  std::vector<Step> steps;
  steps.reserve(n);
  bool stop = false;
  auto rec = [&](auto&& self, int height) -> void {
    if (stop) return;
    if (steps.size() == n) {
      if (closed && height != 0) return;
      const StepWord word(steps);
      std::vector<std::vector<int>> choices(n);
      for (std::size_t i = 0; i < n; ++i) {
        choices[i] = text_order_range(0, weight_bound(word[i], word.heights()[i]));
      }
      std::vector<int> weights;
      weights.reserve(n);
      const bool keep_going = grow_weights(word, weights, choices, [&](const std::vector<int>& w) {
        return visit(make(word, w));
      });
      if (!keep_going) stop = true;
      return;
    }
    const auto remaining = n - steps.size();
    for (Step s : alphabet) {
      if (weight_bound(s, height) < 0) continue;
      const int next = height + (s == Step::kUp ? 1 : s == Step::kDown ? -1 : 0);
      if (closed && static_cast<std::size_t>(next) > remaining - 1) continue;
      steps.push_back(s);
      self(self, next);
      steps.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

void enumerate_permutations(std::size_t n, const Visitor<Permutation>& visit) {
  grow_words(
      n, text_order_range(1, static_cast<int>(n)),
      [](const std::vector<int>&, int) { return true; },
      [&](const std::vector<int>& w) { return visit(Permutation(w)); });
}

void enumerate_alternating(std::size_t n, const Visitor<Permutation>& visit) {
  grow_words(
      n, text_order_range(1, static_cast<int>(n)),
      [](const std::vector<int>& w, int c) { return continues_down_up(w, c); },
      [&](const std::vector<int>& w) { return visit(Permutation(w)); });
}

void enumerate_snakes(std::size_t n, const Visitor<SignedPermutation>& visit) {
  std::vector<int> signed_values;
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    signed_values.push_back(v);
    signed_values.push_back(-v);
  }
  grow_words(
      n, text_order(std::move(signed_values)),
      [](const std::vector<int>& w, int c) {
        if (w.empty()) return c > 0;
        return continues_down_up(w, c);
      },
      [&](const std::vector<int>& w) { return visit(SignedPermutation(w)); });
}

void enumerate_wip3(std::size_t n, const Visitor<ThreeWIP>& visit) {
  const auto order = text_order_range(1, static_cast<int>(n));
  enumerate_permutations(n, [&](const Permutation& sigma) {
    const auto s = sigma.values();
    bool keep_going = true;
    grow_words(
        n, order,
        [&](const std::vector<int>& w, int c) {
          if (w.empty()) return true;
          const auto i = w.size();
          return std::max(s[i], c) >= std::max(s[i - 1], w.back());
        },
        [&](const std::vector<int>& w) {
          keep_going = visit(ThreeWIP(sigma, Permutation(w)));
          return keep_going;
        });
    return keep_going;
  });
}

void enumerate_rcalt(std::size_t n, const Visitor<Permutation>& visit) {
  const int len = static_cast<int>(2 * n);
  const auto order = text_order_range(1, len);
  // A choice of v in the first half fixes len + 1 - v in the mirror position,
  // so each complementary pair is claimed at once.
  std::vector<bool> used(len + 2, false);
  std::vector<int> half;
  half.reserve(n);
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    if (half.size() == n) {
      if (n > 0) {
        // Middle pair: p_n > p_{n+1} = len + 1 - p_n when n is odd.
        const int mid = half.back();
        const bool descent = mid > len + 1 - mid;
        if (descent != (n % 2 == 1)) return;
      }
      std::vector<int> full(half);
      full.resize(len);
      for (std::size_t i = 0; i < n; ++i) full[len - 1 - i] = len + 1 - half[i];
      if (!visit(Permutation(std::move(full)))) stop = true;
      return;
    }
    for (int c : order) {
      if (used[c] || !continues_down_up(half, c)) continue;
      used[c] = used[len + 1 - c] = true;
      half.push_back(c);
      self(self);
      half.pop_back();
      used[c] = used[len + 1 - c] = false;
      if (stop) return;
    }
  };
  rec(rec);
}

void enumerate_lbp(std::size_t n, const Visitor<LabeledBallotPath>& visit) {
  static constexpr std::array kAlphabet{Step::kDown, Step::kUp};
  enumerate_weighted(
      n, kAlphabet, false,
      [](const StepWord& s, const std::vector<int>& w) { return validate_labeled_ballot(s, w); },
      visit);
}

void enumerate_laguerre(std::size_t n, const Visitor<LaguerreHistory>& visit) {
  static constexpr std::array kAlphabet{Step::kDown, Step::kHorizontal, Step::kTilde, Step::kUp};
  enumerate_weighted(
      n, kAlphabet, true,
      [](const StepWord& s, const std::vector<int>& w) { return validate_laguerre(s, w); },
      visit);
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kSnakes: return "snakes";
    case Family::kWip3: return "wip3";
    case Family::kRcalt: return "rcalt";
    case Family::kLbp: return "lbp";
    case Family::kLaguerre: return "laguerre";
    case Family::kAltperm: return "altperm";
  }
  return "";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> kAll{Family::kSnakes, Family::kWip3,     Family::kRcalt,
                                        Family::kLbp,    Family::kLaguerre, Family::kAltperm};
  return kAll;
}

namespace {

template <class T>
Visitor<T> as_text(const Visitor<std::string>& visit) {
  return [&visit](const T& x) { return visit(to_text(x)); };
}

template <class T>
Visitor<T> counting(std::uint64_t& count) {
  return [&count](const T&) {
    ++count;
    return true;
  };
}

}  // namespace

void enumerate_text(Family family, std::size_t n, const Visitor<std::string>& visit) {
  switch (family) {
    case Family::kSnakes: return enumerate_snakes(n, as_text<SignedPermutation>(visit));
    case Family::kWip3: return enumerate_wip3(n, as_text<ThreeWIP>(visit));
    case Family::kRcalt: return enumerate_rcalt(n, as_text<Permutation>(visit));
    case Family::kLbp: return enumerate_lbp(n, as_text<LabeledBallotPath>(visit));
    case Family::kLaguerre: return enumerate_laguerre(n, as_text<LaguerreHistory>(visit));
    case Family::kAltperm: return enumerate_alternating(n, as_text<Permutation>(visit));
  }
}

std::uint64_t count_by_enumeration(Family family, std::size_t n) {
  std::uint64_t count = 0;
  switch (family) {
    case Family::kSnakes: enumerate_snakes(n, counting<SignedPermutation>(count)); break;
    case Family::kWip3: enumerate_wip3(n, counting<ThreeWIP>(count)); break;
    case Family::kRcalt: enumerate_rcalt(n, counting<Permutation>(count)); break;
    case Family::kLbp: enumerate_lbp(n, counting<LabeledBallotPath>(count)); break;
    case Family::kLaguerre: enumerate_laguerre(n, counting<LaguerreHistory>(count)); break;
    case Family::kAltperm: enumerate_alternating(n, counting<Permutation>(count)); break;
  }
  return count;
}

BigInt count_by_oracle(Family family, std::size_t n) {
  switch (family) {
    case Family::kSnakes:
    case Family::kWip3:
    case Family::kRcalt: return springer_egf(n).values.back();
    case Family::kLbp: return count_lbp_dp(n);
    case Family::kAltperm: return euler_sequence(n).back();
    case Family::kLaguerre: {
      BigInt f = 1;
      for (std::size_t k = 2; k <= n; ++k) f *= k;
      return f;
    }
  }
  return 0;
}

bool SpringerTable::agrees_with(const SpringerTable& other) const {
  const auto common = std::min(values.size(), other.values.size());
  return std::equal(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(common),
                    other.values.begin());
}

namespace {

// Row n of Pascal's triangle.
std::vector<BigInt> binomial_row(std::size_t n) {
  std::vector<BigInt> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1);
    next[0] = next[r] = 1;
    for (std::size_t k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

}  // namespace

SpringerTable springer_egf(std::size_t m) {
  // Derivatives of cos x - sin x at 0, by k mod 4.
  static constexpr std::array<int, 4> kCoeff{1, -1, -1, 1};
  SpringerTable table;
  table.method = SpringerTable::Method::kEgf;
  table.values.reserve(m + 1);
  table.values.emplace_back(1);
  std::vector<BigInt> row{1};
  for (std::size_t n = 1; n <= m; ++n) {
    row = binomial_row(n);
    BigInt sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += row[k] * kCoeff[k % 4] * table.values[n - k];
    table.values.push_back(-sum);
  }
  return table;
}

SpringerTable springer_dp(std::size_t m) {
  SpringerTable table;
  table.method = SpringerTable::Method::kDp;
  for (std::size_t n = 0; n <= m; ++n) table.values.push_back(count_lbp_dp(n));
  return table;
}

SpringerTable springer_enumeration(std::size_t m) {
  SpringerTable table;
  table.method = SpringerTable::Method::kEnumeration;
  for (std::size_t n = 0; n <= m; ++n) {
    table.values.emplace_back(count_by_enumeration(Family::kSnakes, n));
  }
  return table;
}

std::vector<BigInt> euler_sequence(std::size_t m) {
  // Taylor coefficients of cos and sin at 0, by k mod 4.
  static constexpr std::array<int, 4> kCos{1, 0, -1, 0};
  static constexpr std::array<int, 4> kSin{0, 1, 0, -1};
  std::vector<BigInt> e;
  e.reserve(m + 1);
  for (std::size_t n = 0; n <= m; ++n) {
    const auto row = binomial_row(n);
    BigInt value = (n == 0 ? 1 : 0) + kSin[n % 4];
    for (std::size_t k = 1; k <= n; ++k) value -= row[k] * kCos[k % 4] * e[n - k];
    e.push_back(value);
  }
  return e;
}

}  // namespace springer
