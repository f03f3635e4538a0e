#pragma once

// The families counted by Springer numbers, plus alternating permutations,
// with validators, enumerators and counting oracles.
//
// Every enumerator visits its family in canonical order: lexicographic order
// of the text format from text.hpp. A visitor returns false to stop early.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/bigint.hpp"
#include "springer/paths.hpp"
#include "springer/permcore.hpp"

namespace springer {

/// A pair (sigma, pi) of permutations whose columnwise maxima
/// max(sigma_i, pi_i) are weakly increasing.
class ThreeWIP {
 public:
  ThreeWIP() = default;
  ThreeWIP(Permutation sigma, Permutation pi);

  std::size_t size() const noexcept { return sigma_.size(); }
  const Permutation& sigma() const noexcept { return sigma_; }
  const Permutation& pi() const noexcept { return pi_; }

  auto operator<=>(const ThreeWIP&) const = default;

 private:
  Permutation sigma_;
  Permutation pi_;
};

bool is_wip3(const Permutation& sigma, const Permutation& pi);
/// Even length, alternating and rc-invariant.
bool is_rcalt(const Permutation& p);

template <class T>
using Visitor = std::function<bool(const T&)>;

void enumerate_permutations(std::size_t n, const Visitor<Permutation>& visit);
void enumerate_alternating(std::size_t n, const Visitor<Permutation>& visit);
void enumerate_snakes(std::size_t n, const Visitor<SignedPermutation>& visit);
void enumerate_wip3(std::size_t n, const Visitor<ThreeWIP>& visit);
/// Rc-invariant alternating permutations of length 2n.
void enumerate_rcalt(std::size_t n, const Visitor<Permutation>& visit);
void enumerate_lbp(std::size_t n, const Visitor<LabeledBallotPath>& visit);
void enumerate_laguerre(std::size_t n, const Visitor<LaguerreHistory>& visit);

template <class T>
std::vector<T> collect(void (*enumerate)(std::size_t, const Visitor<T>&), std::size_t n) {
  std::vector<T> out;
  enumerate(n, [&out](const T& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

enum class Family { kSnakes, kWip3, kRcalt, kLbp, kLaguerre, kAltperm };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);
const std::vector<Family>& all_families();

/// Canonical text of every member of `family` at size n, in order.
void enumerate_text(Family family, std::size_t n, const Visitor<std::string>& visit);
std::uint64_t count_by_enumeration(Family family, std::size_t n);
/// Closed-form or recurrence count: S_n for the Springer families (EGF for
/// snakes/wip3/rcalt, height DP for lbp), E_n for altperm, n! for laguerre.
BigInt count_by_oracle(Family family, std::size_t n);

struct SpringerTable {
  enum class Method { kDp, kEgf, kEnumeration };

  std::vector<BigInt> values;
  Method method = Method::kEgf;

  /// True when both tables hold the same values on their common range.
  bool agrees_with(const SpringerTable& other) const;
};

/// S_0..S_m from 1/(cos x - sin x): S_n = -sum_{k=1..n} C(n,k) c_k S_{n-k}
/// with c_k = 1, -1, -1, 1 for k = 0, 1, 2, 3 mod 4.
SpringerTable springer_egf(std::size_t m);
SpringerTable springer_dp(std::size_t m);
/// Snake enumeration; only sensible for small m.
SpringerTable springer_enumeration(std::size_t m);

/// E_0..E_m from (tan x + sec x) cos x = 1 + sin x.
std::vector<BigInt> euler_sequence(std::size_t m);

}  // namespace springer
