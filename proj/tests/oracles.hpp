#pragma once

// Brute-force reference implementations for the tests. Nothing here calls
// into the library: families come from filtering full product spaces, and
// statistics are evaluated straight from their definitions on padded words.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline constexpr int kInf = 1 << 30;

inline std::string join(const Word& w, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::vector<Word> all_perms(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool down_up(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (i % 2 == 1 && !(w[i - 1] > w[i])) return false;
    if (i % 2 == 0 && !(w[i - 1] < w[i])) return false;
  }
  return true;
}

// p padded as [0, p_1, ..., p_n, +inf].
inline Word padded(const Word& p) {
  Word q{0};
  q.insert(q.end(), p.begin(), p.end());
  q.push_back(kInf);
  return q;
}

inline std::vector<std::string> snakes(int n) {
  std::vector<std::string> out;
  for (const auto& p : all_perms(n)) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Word w = p;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) w[i] = -w[i];
      }
      if (n > 0 && w[0] < 0) continue;
      if (down_up(w)) out.push_back(join(w, " "));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> wip3(int n) {
  std::vector<std::string> out;
  const auto perms = all_perms(n);
  for (const auto& s : perms) {
    for (const auto& p : perms) {
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) {
        ok = std::max(s[i - 1], p[i - 1]) <= std::max(s[i], p[i]);
      }
      if (ok) out.push_back(join(s, " ") + " / " + join(p, " "));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> rcalt(int n) {
  std::vector<std::string> out;
  const int len = 2 * n;
  for (const auto& p : all_perms(len)) {
    bool rc = true;
    for (int i = 0; i < len; ++i) rc = rc && p[i] + p[len - 1 - i] == len + 1;
    if (rc && down_up(p)) out.push_back(join(p, " "));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> alternating(int n) {
  std::vector<std::string> out;
  for (const auto& p : all_perms(n)) {
    if (down_up(p)) out.push_back(join(p, " "));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All words over `letters` that stay above the axis (and close, if asked),
// each with every weight vector inside the per-step bounds.
inline std::vector<std::string> weighted_paths(int n, const std::string& letters, bool closed) {
  std::vector<std::string> out;
  const int k = static_cast<int>(letters.size());
  std::int64_t words = 1;
  for (int i = 0; i < n; ++i) words *= k;
  for (std::int64_t code = 0; code < words; ++code) {
    std::string steps;
    std::int64_t c = code;
    for (int i = 0; i < n; ++i) {
      steps.push_back(letters[c % k]);
      c /= k;
    }
    Word h(n);
    int height = 0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      h[i] = height;
      height += steps[i] == 'U' ? 1 : steps[i] == 'D' ? -1 : 0;
      ok = ok && height >= 0;
    }
    if (!ok || (closed && height != 0)) continue;
    Word bound(n);
    for (int i = 0; i < n; ++i) {
      bound[i] = (steps[i] == 'U' || steps[i] == 'H') ? h[i] : h[i] - 1;
      ok = ok && bound[i] >= 0;
    }
    if (!ok) continue;
    Word w(n, 0);
    while (true) {
      out.push_back(steps + ";" + join(w, ","));
      int i = 0;
      while (i < n && w[i] == bound[i]) w[i++] = 0;
      if (i == n) break;
      ++w[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> lbp(int n) { return weighted_paths(n, "DU", false); }
inline std::vector<std::string> laguerre(int n) { return weighted_paths(n, "DHTU", true); }

inline std::vector<int> cycle_peaks(const Word& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out;
  for (int k = 2; k <= n; ++k) {
    int pre = 0;
    for (int j = 1; j <= n; ++j) {
      if (p[j - 1] == k) pre = j;
    }
    if (pre < k && p[k - 1] < k) out.push_back(k);
  }
  return out;
}

// Foata-Zeilberger image straight from the step table on the padded word.
inline std::string fz(const Word& p) {
  const int n = static_cast<int>(p.size());
  const auto q = padded(p);
  std::string steps;
  Word w;
  for (int i = 1; i <= n; ++i) {
    int j = 1;
    while (q[j] != i) ++j;
    const int a = q[j - 1];
    const int b = q[j + 1];
    steps.push_back(a > i && i < b ? 'U' : a < i && i > b ? 'D' : a < i && i < b ? 'H' : 'T');
    int count = 0;
    for (int k = 1; k < j; ++k) count += (q[k] < i && i < q[k - 1]) ? 1 : 0;
    w.push_back(count);
  }
  return steps + ";" + join(w, ",");
}

}  // namespace oracle
