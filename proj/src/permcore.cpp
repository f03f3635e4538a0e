#include "springer/permcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "springer/error.hpp"

namespace springer {

namespace {

void require_rearrangement(std::span<const int> magnitudes, ErrorCode code) {
  const auto n = magnitudes.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const int v = magnitudes[pos];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(code, "value " + std::to_string(v) + " outside 1.." + std::to_string(n),
                  pos + 1);
    }
    if (seen[v]) {
      throw Error(code, "value " + std::to_string(v) + " repeated", pos + 1);
    }
    seen[v] = true;
  }
}

std::vector<std::size_t> positions_of(std::span<const int> values) {
  std::vector<std::size_t> pos(values.size() + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) pos[values[i]] = i + 1;
  return pos;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  require_rearrangement(values_, ErrorCode::kInvalidPermutation);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  return Permutation(std::move(v));
}

SignedPermutation::SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<int> mags(values_.size());
  std::transform(values_.begin(), values_.end(), mags.begin(),
                 [](int v) { return std::abs(v); });
  require_rearrangement(mags, ErrorCode::kInvalidSignedPermutation);
}

Permutation SignedPermutation::magnitudes() const {
  std::vector<int> mags(values_.size());
  std::transform(values_.begin(), values_.end(), mags.begin(),
                 [](int v) { return std::abs(v); });
  return Permutation(std::move(mags));
}

Permutation invert(const Permutation& p) {
  const auto v = p.values();
  std::vector<int> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[v[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(q));
}

Permutation reverse_complement(const Permutation& p) {
  const auto v = p.values();
  const int n = static_cast<int>(v.size());
  std::vector<int> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = n + 1 - v[v.size() - 1 - i];
  return Permutation(std::move(r));
}

bool is_down_up(std::span<const int> word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    // i is 0-based, so even i is an odd 1-based position: a descent follows.
    const bool ok = (i % 2 == 0) ? word[i] > word[i + 1] : word[i] < word[i + 1];
    if (!ok) return false;
  }
  return true;
}

bool is_alternating(const Permutation& p) { return is_down_up(p.values()); }

bool is_snake(const SignedPermutation& sp) {
  const auto v = sp.values();
  if (!v.empty() && v.front() < 0) return false;
  return is_down_up(v);
}

bool is_rc_invariant(const Permutation& p) {
  const auto v = p.values();
  const int n = static_cast<int>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] + v[v.size() - 1 - i] != n + 1) return false;
  }
  return true;
}

std::vector<std::size_t> left_peaks(const Permutation& p) {
  const auto v = p.values();
  std::vector<std::size_t> out;
  // The +infinity sentinel on the right rules out the last position.
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const int left = i == 0 ? 0 : v[i - 1];
    if (left < v[i] && v[i] > v[i + 1]) out.push_back(i + 1);
  }
  return out;
}

std::vector<std::size_t> right_valleys(const Permutation& p) {
  const auto v = p.values();
  std::vector<std::size_t> out;
  // The 0 sentinel on the left rules out the first position.
  for (std::size_t i = 1; i < v.size(); ++i) {
    const bool rises = i + 1 == v.size() || v[i] < v[i + 1];
    if (v[i - 1] > v[i] && rises) out.push_back(i + 1);
  }
  return out;
}

std::vector<int> cycle_peaks(const Permutation& p) {
  const auto v = p.values();
  const auto inv = positions_of(v);
  std::vector<int> out;
  for (int k = 2; k <= static_cast<int>(v.size()); ++k) {
    if (static_cast<int>(inv[k]) < k && v[k - 1] < k) out.push_back(k);
  }
  return out;
}

CycleForm cycle_form(const Permutation& p) {
  const auto v = p.values();
  CycleForm form;
  std::vector<bool> seen(v.size() + 1, false);
  for (int start = 1; start <= static_cast<int>(v.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = v[x - 1]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

CycleForm standard_cycle_form(const Permutation& p) {
  CycleForm form = cycle_form(p);
  for (auto& cycle : form.cycles) {
    std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
  }
  std::sort(form.cycles.begin(), form.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  form.standard = true;
  return form;
}

Permutation from_cycles(const CycleForm& form) {
  std::size_t n = 0;
  for (const auto& c : form.cycles) n += c.size();
  std::vector<int> v(n, 0);
  for (const auto& c : form.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 1 || static_cast<std::size_t>(x) > n) {
        throw Error(ErrorCode::kInvalidPermutation, "cycle value out of range");
      }
      v[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(v));
}

Permutation foata(const Permutation& p) {
  std::vector<int> word;
  word.reserve(p.size());
  for (const auto& cycle : standard_cycle_form(p).cycles) {
    word.insert(word.end(), cycle.begin(), cycle.end());
  }
  return Permutation(std::move(word));
}

Permutation foata_inverse(const Permutation& p) {
  const auto v = p.values();
  CycleForm form;
  int running_max = 0;
  for (int x : v) {
    if (x > running_max) {
      running_max = x;
      form.cycles.emplace_back();
    }
    form.cycles.back().push_back(x);
  }
  return from_cycles(form);
}

namespace {

std::size_t position_of_value(const Permutation& p, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > p.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "value " + std::to_string(i) + " outside 1.." + std::to_string(p.size()));
  }
  const auto v = p.values();
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), i) - v.begin()) + 1;
}

}  // namespace

int count_pat_31_2_at(const Permutation& p, int i) {
  const std::size_t j = position_of_value(p, i);
  int count = 0;
  // k = 1 would compare against the 0 sentinel and can never count.
  for (std::size_t k = 2; k < j; ++k) {
    if (p.value_at(k) < i && i < p.value_at(k - 1)) ++count;
  }
  return count;
}

int count_pat_2_31_at(const Permutation& p, int i) {
  const std::size_t j = position_of_value(p, i);
  int count = 0;
  for (std::size_t k = j + 1; k + 1 <= p.size(); ++k) {
    if (p.value_at(k + 1) < i && i < p.value_at(k)) ++count;
  }
  return count;
}

}  // namespace springer
