#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "springer/error.hpp"
#include "springer/families.hpp"
#include "springer/permcore.hpp"
#include "springer/text.hpp"

using namespace springer;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

template <class F>
void for_all_perms(std::size_t n_max, const F& f) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    enumerate_permutations(n, [&](const Permutation& p) {
      f(p);
      return true;
    });
  }
}

}  // namespace

TEST_CASE("Permutation rejects non-rearrangements") {
  CHECK_THROWS_AS(P({1, 1}), Error);
  CHECK_THROWS_AS(P({0, 1}), Error);
  CHECK_THROWS_AS(P({1, 3}), Error);
  try {
    P({2, 3, 3});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidPermutation);
    CHECK(e.index() == 3u);
  }
  CHECK(P({}).empty());
  CHECK_THROWS_AS(SignedPermutation({1, -1}), Error);
  CHECK_NOTHROW(SignedPermutation({-2, 1}));
}

TEST_CASE("invert") {
  CHECK(invert(P({1, 2, 3})) == P({1, 2, 3}));
  CHECK(invert(P({2, 6, 7, 9, 5, 3, 1, 8, 4})) == P({7, 1, 6, 9, 5, 2, 3, 8, 4}));
  CHECK(invert(P({4, 1, 3, 5, 2})) == P({2, 5, 3, 1, 4}));
}

TEST_CASE("reverse_complement") {
  CHECK(reverse_complement(P({4, 1, 3, 5, 2})) == P({4, 1, 3, 5, 2}));
  CHECK(reverse_complement(P({1})) == P({1}));
  // r[i] = n + 1 - p[n + 1 - i], worked by hand.
  CHECK(reverse_complement(P({4, 3, 1, 2, 9, 6, 8, 5, 7})) == P({3, 5, 2, 4, 1, 8, 9, 7, 6}));
  CHECK(is_rc_invariant(P({4, 1, 3, 5, 2})));
}

TEST_CASE("is_alternating and is_snake") {
  CHECK(is_alternating(P({3, 2, 10, 6, 7, 4, 5, 1, 9, 8})));
  CHECK_FALSE(is_alternating(P({1, 2, 3})));
  CHECK_FALSE(is_alternating(P({4, 3, 1, 2, 9, 6, 8, 5, 7})));
  CHECK(is_alternating(P({})));

  CHECK(is_snake(SignedPermutation({2, -1, 5, 4, 7, -6, -3})));
  CHECK(is_snake(SignedPermutation({1, -2, 3})));
  CHECK_FALSE(is_snake(SignedPermutation({-1, 2, -3})));
  CHECK(is_snake(SignedPermutation(std::vector<int>{})));
}

TEST_CASE("left peaks and right valleys") {
  const auto p = P({5, 7, 1, 2, 6, 3, 8, 9, 4});
  CHECK(left_peaks(p) == std::vector<std::size_t>{2, 5, 8});
  CHECK(right_valleys(p) == std::vector<std::size_t>{3, 6, 9});
  CHECK(left_peaks(P({1, 2, 3})).empty());
  CHECK(right_valleys(P({1, 2, 3})).empty());
  CHECK(left_peaks(P({2, 1})) == std::vector<std::size_t>{1});
  CHECK(right_valleys(P({2, 1})) == std::vector<std::size_t>{2});
  CHECK(left_peaks(P({})).empty());
}

TEST_CASE("cycle peaks") {
  CHECK(cycle_peaks(P({2, 6, 7, 9, 5, 3, 1, 8, 4})) == std::vector<int>{6, 7, 9});
  CHECK(cycle_peaks(P({1, 2, 3})).empty());
  CHECK(cycle_peaks(P({2, 1})) == std::vector<int>{2});

  for_all_perms(7, [](const Permutation& p) {
    const std::vector<int> raw(p.values().begin(), p.values().end());
    REQUIRE(cycle_peaks(p) == oracle::cycle_peaks(raw));
  });
}

TEST_CASE("standard cycle form and Foata's transformation") {
  const auto sigma = P({2, 6, 7, 9, 5, 3, 1, 8, 4});
  const auto form = standard_cycle_form(sigma);
  CHECK(form.standard);
  CHECK(to_text(form) == "(5)(7,1,2,6,3)(8)(9,4)");
  CHECK(to_text(standard_cycle_form(P({1, 2, 3}))) == "(1)(2)(3)");
  CHECK(to_text(standard_cycle_form(P({2, 1}))) == "(2,1)");
  CHECK(from_cycles(form) == sigma);

  CHECK(foata(sigma) == P({5, 7, 1, 2, 6, 3, 8, 9, 4}));
  CHECK(foata(P({1, 2, 3})) == P({1, 2, 3}));
  CHECK(foata(P({2, 1})) == P({2, 1}));

  CHECK(foata_inverse(P({5, 7, 1, 2, 6, 3, 8, 9, 4})) == sigma);
  CHECK(foata_inverse(P({1, 2, 3})) == P({1, 2, 3}));
  CHECK(foata_inverse(P({2, 1})) == P({2, 1}));
}

TEST_CASE("vincular pattern counts") {
  const auto p = P({4, 3, 1, 2, 9, 6, 8, 5, 7});
  CHECK(count_pat_31_2_at(p, 2) == 1);
  CHECK(count_pat_31_2_at(p, 7) == 2);
  CHECK(count_pat_31_2_at(P({1, 2, 3}), 2) == 0);
  CHECK(count_pat_2_31_at(p, 6) == 1);
  CHECK(count_pat_2_31_at(p, 5) == 0);
  CHECK(count_pat_2_31_at(P({1, 2, 3}), 1) == 0);
  CHECK_THROWS_AS(count_pat_31_2_at(p, 0), Error);
  CHECK_THROWS_AS(count_pat_2_31_at(p, 10), Error);

  // The full weight word of the worked example.
  std::vector<int> w;
  for (int i = 1; i <= 9; ++i) w.push_back(count_pat_31_2_at(p, i));
  CHECK(w == std::vector<int>{0, 1, 0, 0, 0, 0, 2, 1, 0});
}

TEST_CASE("exhaustive permutation invariants, n <= 8") {
  for_all_perms(8, [](const Permutation& p) {
    REQUIRE(invert(invert(p)) == p);
    REQUIRE(reverse_complement(reverse_complement(p)) == p);
    const auto f = foata(p);
    REQUIRE(foata_inverse(f) == p);
    REQUIRE(foata(foata_inverse(p)) == p);

    std::vector<int> peak_values;
    for (auto pos : left_peaks(f)) peak_values.push_back(f.value_at(pos));
    std::sort(peak_values.begin(), peak_values.end());
    REQUIRE(peak_values == cycle_peaks(p));

    // Each left peak owns at least one right valley before the next peak.
    const auto peaks = left_peaks(p);
    const auto valleys = right_valleys(p);
    for (std::size_t k = 0; k < peaks.size(); ++k) {
      const auto hi = k + 1 < peaks.size() ? peaks[k + 1] : p.size() + 1;
      REQUIRE(std::any_of(valleys.begin(), valleys.end(),
                          [&](auto v) { return peaks[k] < v && v < hi; }));
    }
  });
}

TEST_CASE("pattern counts swap under reverse-complement, n <= 7") {
  for_all_perms(7, [](const Permutation& p) {
    const auto r = reverse_complement(p);
    const int n = static_cast<int>(p.size());
    for (int i = 1; i <= n; ++i) {
      REQUIRE(count_pat_31_2_at(r, n + 1 - i) == count_pat_2_31_at(p, i));
    }
  });
}

TEST_CASE("alternating counts match Euler numbers") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 16, 61};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    std::size_t count = 0;
    enumerate_permutations(n, [&](const Permutation& p) {
      count += is_alternating(p) ? 1 : 0;
      return true;
    });
    CHECK(count == expected[n]);
  }
}
