#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "springer/error.hpp"
#include "springer/families.hpp"
#include "springer/text.hpp"

using namespace springer;

namespace {

std::vector<std::string> texts(Family f, std::size_t n) {
  std::vector<std::string> out;
  enumerate_text(f, n, [&](const std::string& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool strictly_increasing(const std::vector<std::string>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("ThreeWIP construction") {
  const auto sigma = parse_permutation("1 5 2 6 7 3 8 9 4");
  const auto pi = parse_permutation("2 5 6 3 1 7 8 4 9");
  CHECK(is_wip3(sigma, pi));
  CHECK_NOTHROW(ThreeWIP(sigma, pi));
  CHECK_FALSE(is_wip3(pi, parse_permutation("2 1 3 4 5 6 7 8 9")));
  try {
    ThreeWIP(parse_permutation("2 1"), parse_permutation("2 1"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidWip3);
  }
  try {
    ThreeWIP(parse_permutation("1"), parse_permutation("2 1"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }
}

TEST_CASE("the eleven snakes of length 3") {
  CHECK(texts(Family::kSnakes, 3) ==
        std::vector<std::string>{"1 -2 3", "1 -3 -2", "1 -3 2", "2 -1 3", "2 -3 -1", "2 -3 1",
                                 "2 1 3", "3 -1 2", "3 -2 -1", "3 -2 1", "3 1 2"});
  CHECK(texts(Family::kSnakes, 0) == std::vector<std::string>{""});
  CHECK(texts(Family::kSnakes, 4).size() == 57);
}

TEST_CASE("small enumerations") {
  CHECK(texts(Family::kRcalt, 1) == std::vector<std::string>{"2 1"});
  CHECK(texts(Family::kRcalt, 2) == std::vector<std::string>{"2 1 4 3", "3 1 4 2", "4 2 3 1"});
  CHECK(texts(Family::kLbp, 1) == std::vector<std::string>{"U;0"});
  CHECK(texts(Family::kLbp, 2) == std::vector<std::string>{"UD;0,0", "UU;0,0", "UU;0,1"});
  CHECK(texts(Family::kAltperm, 3) == std::vector<std::string>{"2 1 3", "3 1 2"});
  CHECK(texts(Family::kAltperm, 6).size() == 61);
  CHECK(texts(Family::kWip3, 2).size() == 3);
  CHECK(texts(Family::kWip3, 0).size() == 1);
  CHECK(texts(Family::kLaguerre, 0) == std::vector<std::string>{";"});
}

TEST_CASE("enumerators agree with brute force") {
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(texts(Family::kSnakes, n) == oracle::snakes(n));
    CHECK(texts(Family::kLbp, n) == oracle::lbp(n));
    CHECK(texts(Family::kLaguerre, n) == oracle::laguerre(n));
  }
  for (int n = 0; n <= 5; ++n) CHECK(texts(Family::kWip3, n) == oracle::wip3(n));
  for (int n = 0; n <= 4; ++n) CHECK(texts(Family::kRcalt, n) == oracle::rcalt(n));
  for (int n = 0; n <= 8; ++n) CHECK(texts(Family::kAltperm, n) == oracle::alternating(n));
}

TEST_CASE("canonical order is strictly increasing") {
  for (Family f : all_families()) {
    for (std::size_t n = 0; n <= 6; ++n) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      if (f == Family::kLaguerre && n > 5) continue;
      CHECK(strictly_increasing(texts(f, n)));
    }
  }
}

TEST_CASE("every enumerated object parses back to itself") {
  for (std::size_t n = 0; n <= 5; ++n) {
    enumerate_snakes(n, [](const SignedPermutation& x) {
      REQUIRE(parse_signed_permutation(to_text(x)) == x);
      REQUIRE(is_snake(x));
      return true;
    });
    enumerate_wip3(n, [](const ThreeWIP& x) {
      REQUIRE(parse_wip3(to_text(x)) == x);
      return true;
    });
    enumerate_rcalt(n, [](const Permutation& x) {
      REQUIRE(is_rcalt(x));
      return true;
    });
  }
}

TEST_CASE("the running 3-WIP shows up in the n = 9 enumeration") {
  const auto target = parse_wip3("1 5 2 6 7 3 8 9 4 / 2 5 6 3 1 7 8 4 9");
  bool found = false;
  enumerate_wip3(9, [&](const ThreeWIP& x) {
    if (x.sigma() < target.sigma()) return true;
    found = x == target;
    return !found && x.sigma() == target.sigma();
  });
  CHECK(found);
}

TEST_CASE("early stop") {
  int seen = 0;
  enumerate_snakes(5, [&](const SignedPermutation&) { return ++seen < 7; });
  CHECK(seen == 7);
}

TEST_CASE("number sequences") {
  CHECK(springer_egf(6).values == big({1, 1, 3, 11, 57, 361, 2763}));
  CHECK(springer_egf(7).values.back() == 24611);
  CHECK(springer_egf(0).values == big({1}));
  CHECK(euler_sequence(6) == big({1, 1, 1, 2, 5, 16, 61}));
  CHECK(euler_sequence(7).back() == 272);
  CHECK(euler_sequence(0) == big({1}));

  const auto egf = springer_egf(40);
  CHECK(egf.agrees_with(springer_dp(40)));
  CHECK(egf.agrees_with(springer_enumeration(6)));
  CHECK(egf.values[40] > BigInt(1) << 128);
  CHECK(springer_enumeration(7).values.back() == 24611);

  auto off = springer_dp(5);
  off.values[3] += 1;
  CHECK_FALSE(egf.agrees_with(off));
}

TEST_CASE("four-way counts") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const BigInt s = springer_egf(n).values.back();
    for (Family f : {Family::kSnakes, Family::kWip3, Family::kRcalt, Family::kLbp}) {
      CAPTURE(family_name(f));
      CHECK(BigInt(count_by_enumeration(f, n)) == s);
      CHECK(count_by_oracle(f, n) == s);
    }
  }
  CHECK(count_by_oracle(Family::kLaguerre, 6) == 720);
  CHECK(count_by_oracle(Family::kAltperm, 7) == 272);
  CHECK(count_by_enumeration(Family::kAltperm, 7) == 272);
}

TEST_CASE("family vocabulary") {
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(all_families().size() == 6);
  CHECK(parse_family("snakes") == Family::kSnakes);
  CHECK_FALSE(parse_family("snake").has_value());
  CHECK_FALSE(parse_family("").has_value());
}
