#pragma once

// Data-parallel loops over enumerated domains. Each kernel has a serial
// reference and an OpenMP variant; both return identical results, and the
// unit tests hold them to that.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

namespace springer::kernels {

enum class Execution { kSerial, kParallel };

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  // Index of the first failing item, or npos.
  std::size_t first_failure = std::numeric_limits<std::size_t>::max();

  bool ok() const noexcept { return failed == 0; }
  bool operator==(const Tally&) const = default;
};

namespace detail {

// A predicate that throws counts as a failure; exceptions never leave an
// OpenMP region.
template <class T, class Pred>
bool holds(const Pred& pred, const T& item) noexcept {
  try {
    return static_cast<bool>(pred(item));
  } catch (...) {
    return false;
  }
}

}  // namespace detail

template <class T, class Pred>
Tally check_all_serial(std::span<const T> items, const Pred& pred) {
  Tally t;
  t.checked = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!detail::holds(pred, items[i])) {
      if (t.failed == 0) t.first_failure = i;
      ++t.failed;
    }
  }
  return t;
}

template <class T, class Pred>
Tally check_all_parallel(std::span<const T> items, const Pred& pred) {
  const auto n = static_cast<std::ptrdiff_t>(items.size());
  std::size_t failed = 0;
  std::size_t first = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failed) reduction(min : first)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!detail::holds(pred, items[i])) {
      ++failed;
      if (static_cast<std::size_t>(i) < first) first = static_cast<std::size_t>(i);
    }
  }
  return Tally{items.size(), failed, first};
}

template <class T, class Pred>
Tally check_all(std::span<const T> items, const Pred& pred, Execution exec) {
  return exec == Execution::kParallel ? check_all_parallel(items, pred)
                                      : check_all_serial(items, pred);
}

template <class T, class F>
using MapResult = std::optional<std::invoke_result_t<const F&, const T&>>;

/// Applies f to every item; a throwing call yields nullopt at its index.
template <class T, class F>
std::vector<MapResult<T, F>> map_all_serial(std::span<const T> items, const F& f) {
  std::vector<MapResult<T, F>> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out[i] = f(items[i]);
    } catch (...) {
    }
  }
  return out;
}

template <class T, class F>
std::vector<MapResult<T, F>> map_all_parallel(std::span<const T> items, const F& f) {
  std::vector<MapResult<T, F>> out(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = f(items[i]);
    } catch (...) {
    }
  }
  return out;
}

template <class T, class F>
std::vector<MapResult<T, F>> map_all(std::span<const T> items, const F& f, Execution exec) {
  return exec == Execution::kParallel ? map_all_parallel(items, f) : map_all_serial(items, f);
}

}  // namespace springer::kernels
