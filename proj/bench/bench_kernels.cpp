// Serial reference vs OpenMP kernels on the exhaustive checks that dominate
// `springer verify`.

#include <benchmark/benchmark.h>

#include "springer/bijections.hpp"
#include "springer/families.hpp"
#include "springer/kernels.hpp"

namespace {

using springer::kernels::Execution;

const std::vector<springer::Permutation>& perms8() {
  static const auto kPerms = springer::collect(springer::enumerate_permutations, 8);
  return kPerms;
}

const std::vector<springer::ThreeWIP>& wips7() {
  static const auto kWips = springer::collect(springer::enumerate_wip3, 7);
  return kWips;
}

void BM_FzRoundtrip(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto& items = perms8();
  for (auto _ : state) {
    auto t = springer::kernels::check_all(
        std::span<const springer::Permutation>(items),
        [](const springer::Permutation& p) { return springer::fz_inverse(springer::fz(p)) == p; },
        exec);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(items.size()));
}

void BM_FzRcCommutes(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto& items = perms8();
  for (auto _ : state) {
    auto t = springer::kernels::check_all(
        std::span<const springer::Permutation>(items),
        [](const springer::Permutation& p) {
          return springer::fz(springer::reverse_complement(p)) ==
                 springer::history_rc(springer::fz(p));
        },
        exec);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(items.size()));
}

void BM_PhiImages(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto& items = wips7();
  for (auto _ : state) {
    auto images = springer::kernels::map_all(
        std::span<const springer::ThreeWIP>(items),
        [](const springer::ThreeWIP& w) { return springer::phi(w); }, exec);
    benchmark::DoNotOptimize(images);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(items.size()));
}

void BM_EnumerateWip3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        springer::count_by_enumeration(springer::Family::kWip3, state.range(0)));
  }
}

}  // namespace

// Argument 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_FzRoundtrip)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FzRcCommutes)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiImages)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateWip3)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
