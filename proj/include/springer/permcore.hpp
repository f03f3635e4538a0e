#pragma once

// Permutations, signed permutations and the per-position statistics the
// bijections are built from. Positions are 1-based wherever they cross the
// public surface; `values()` exposes the raw 0-based storage.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <vector>

namespace springer {

/// A rearrangement of {1, ..., n}. Construction validates.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// Entry at 1-based position `pos`.
  int value_at(std::size_t pos) const { return values_[pos - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// A word of nonzero integers whose absolute values form a Permutation.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  int value_at(std::size_t pos) const { return values_[pos - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  Permutation magnitudes() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> values_;
};

/// A permutation with some of its values hatted. Marks are values, not
/// positions, so they travel from cycle form to one-line form unchanged.
struct MarkedPermutation {
  Permutation perm;
  std::set<int> marks;

  bool is_marked(int value) const { return marks.contains(value); }
  bool operator==(const MarkedPermutation&) const = default;
};

struct CycleForm {
  std::vector<std::vector<int>> cycles;
  bool standard = false;

  bool operator==(const CycleForm&) const = default;
};

Permutation invert(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

/// Down-up chain v1 > v2 < v3 > v4 < ... on an arbitrary integer word.
bool is_down_up(std::span<const int> word);
bool is_alternating(const Permutation& p);
bool is_snake(const SignedPermutation& sp);
bool is_rc_invariant(const Permutation& p);

// Sentinels: p[0] = 0 and p[n+1] = +infinity.
std::vector<std::size_t> left_peaks(const Permutation& p);
std::vector<std::size_t> right_valleys(const Permutation& p);

/// Values k with p^{-1}(k) < k > p(k), ascending.
std::vector<int> cycle_peaks(const Permutation& p);

CycleForm cycle_form(const Permutation& p);
CycleForm standard_cycle_form(const Permutation& p);
Permutation from_cycles(const CycleForm& form);

/// Foata's fundamental transformation: erase the parentheses of the
/// standard cycle form.
Permutation foata(const Permutation& p);
/// Cuts before every left-to-right maximum and reads the pieces as cycles.
Permutation foata_inverse(const Permutation& p);

/// Occurrences of the vincular pattern 31-2 in which value i plays the 2:
/// |{k < j : p[k] < i < p[k-1]}| with p[j] = i.
int count_pat_31_2_at(const Permutation& p, int i);
/// Occurrences of 2-31 with value i as the 2: |{k > j : p[k+1] < i < p[k]}|.
int count_pat_2_31_at(const Permutation& p, int i);

}  // namespace springer
