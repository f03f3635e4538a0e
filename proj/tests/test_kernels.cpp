#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "springer/bijections.hpp"
#include "springer/kernels.hpp"
#include "springer/text.hpp"

using namespace springer;
using namespace springer::kernels;

TEST_CASE("tallies agree between serial and parallel") {
  std::vector<int> xs(10'000);
  for (int i = 0; i < 10'000; ++i) xs[i] = i;
  const std::span<const int> items(xs);

  const auto odd_free = [](int x) { return x % 7 != 3; };
  const Tally s = check_all_serial(items, odd_free);
  CHECK(s.checked == 10'000);
  CHECK(s.failed == 1'429);
  CHECK(s.first_failure == 3);
  CHECK(check_all_parallel(items, odd_free) == s);
  CHECK(check_all(items, odd_free, Execution::kParallel) == s);

  const auto all = check_all_parallel(items, [](int) { return true; });
  CHECK(all.ok());
  CHECK(all.first_failure == std::numeric_limits<std::size_t>::max());

  const auto empty = check_all_parallel(std::span<const int>{}, [](int) { return false; });
  CHECK(empty.checked == 0);
  CHECK(empty.ok());
}

TEST_CASE("a throwing predicate is a failure") {
  std::vector<int> xs{1, 2, 3, 4, 5, 6};
  const auto pred = [](int x) {
    if (x == 4) throw std::runtime_error("boom");
    return x != 6;
  };
  const Tally s = check_all_serial(std::span<const int>(xs), pred);
  CHECK(s.failed == 2);
  CHECK(s.first_failure == 3);
  CHECK(check_all_parallel(std::span<const int>(xs), pred) == s);
}

TEST_CASE("maps agree between serial and parallel") {
  std::vector<Permutation> perms;
  enumerate_permutations(7, [&](const Permutation& p) {
    perms.push_back(p);
    return true;
  });
  const std::span<const Permutation> items(perms);
  const auto f = [](const Permutation& p) { return to_text(fz(p)); };
  const auto serial = map_all_serial(items, f);
  const auto parallel = map_all_parallel(items, f);
  REQUIRE(serial.size() == 5040);
  CHECK(serial == parallel);

  // psi_inverse rejects everything that is not rc-invariant alternating.
  const auto g = [](const Permutation& p) { return to_text(psi_inverse(p)); };
  std::vector<Permutation> four;
  enumerate_permutations(4, [&](const Permutation& p) {
    four.push_back(p);
    return true;
  });
  const auto a = map_all(std::span<const Permutation>(four), g, Execution::kSerial);
  const auto b = map_all(std::span<const Permutation>(four), g, Execution::kParallel);
  CHECK(a == b);
  CHECK(std::count_if(a.begin(), a.end(), [](const auto& o) { return o.has_value(); }) == 3);
}

TEST_CASE("parallel kernels really use several threads") {
  if (omp_get_max_threads() < 2) return;
  std::vector<int> xs(4096);
  std::vector<int> owner(xs.size(), -1);
  check_all_parallel(std::span<const int>(xs), [&](const int& x) {
    owner[&x - xs.data()] = omp_get_thread_num();
    return true;
  });
  CHECK(std::any_of(owner.begin(), owner.end(), [](int t) { return t > 0; }));
}
