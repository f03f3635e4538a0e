#include "springer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "springer/bijections.hpp"
#include "springer/error.hpp"
#include "springer/families.hpp"
#include "springer/text.hpp"

namespace springer {

namespace {

using kernels::Execution;
using kernels::Tally;

struct Domain {
  std::size_t n = 0;
  std::vector<Permutation> perms;
  std::vector<Permutation> alternating;
  std::vector<SignedPermutation> snakes;
  std::vector<ThreeWIP> wips;
  std::vector<Permutation> rcalts;
  std::vector<LabeledBallotPath> lbps;
  std::vector<LaguerreHistory> histories;
};

Domain build_domain(std::size_t n) {
  Domain d;
  d.n = n;
  d.perms = collect(enumerate_permutations, n);
  d.alternating = collect(enumerate_alternating, n);
  d.snakes = collect(enumerate_snakes, n);
  d.wips = collect(enumerate_wip3, n);
  d.rcalts = collect(enumerate_rcalt, n);
  d.lbps = collect(enumerate_lbp, n);
  d.histories = collect(enumerate_laguerre, n);
  return d;
}

template <class T, class Pred>
Tally check(const std::vector<T>& items, Execution exec, const Pred& pred) {
  return kernels::check_all(std::span<const T>(items), pred, exec);
}

Tally single(bool ok) { return Tally{1, ok ? 0u : 1u, ok ? Tally{}.first_failure : 0}; }

Tally merge(Tally a, const Tally& b) {
  if (a.failed == 0 && b.failed > 0) a.first_failure = a.checked + b.first_failure;
  a.checked += b.checked;
  a.failed += b.failed;
  return a;
}

// f maps the domain injectively onto the codomain, compared as canonical text.
template <class T, class U, class F>
Tally bijective_onto(const std::vector<T>& domain, const std::vector<U>& codomain, Execution exec,
                     const F& f) {
  const auto images =
      kernels::map_all(std::span<const T>(domain), [&](const T& x) { return to_text(f(x)); }, exec);
  std::vector<std::string> texts;
  texts.reserve(images.size());
  Tally t;
  t.checked = domain.size();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) {
      if (t.failed == 0) t.first_failure = i;
      ++t.failed;
    } else {
      texts.push_back(*images[i]);
    }
  }
  std::sort(texts.begin(), texts.end());
  std::vector<std::string> expected;
  expected.reserve(codomain.size());
  for (const auto& y : codomain) expected.push_back(to_text(y));
  if (texts != expected) {
    if (t.failed == 0) t.first_failure = 0;
    ++t.failed;
  }
  return t;
}

template <class T>
std::unordered_set<std::string> text_set(const std::vector<T>& items) {
  std::unordered_set<std::string> s;
  s.reserve(items.size() * 2);
  for (const auto& x : items) s.insert(to_text(x));
  return s;
}

std::vector<int> swapped(std::span<const int> v, std::size_t i, std::size_t j) {
  std::vector<int> w(v.begin(), v.end());
  std::swap(w[i], w[j]);
  return w;
}

// Every transposition of `p` is accepted by `valid` exactly when it is a member.
template <class P, class Valid>
bool transpositions_agree(const P& p, const std::unordered_set<std::string>& members,
                          const Valid& valid) {
  const auto v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const P q(swapped(v, i, j));
      if (valid(q) != members.contains(to_text(q))) return false;
    }
  }
  return true;
}

// Every single-weight increment is accepted exactly when it is a member.
template <class Weighted, class Validate>
bool increments_agree(const Weighted& x, const std::unordered_set<std::string>& members,
                      const Validate& validate) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<int> w(x.weights().begin(), x.weights().end());
    ++w[i];
    std::string text = x.steps().str() + ";";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0) text += ",";
      text += std::to_string(w[k]);
    }
    bool accepted = true;
    try {
      (void)validate(x.steps(), std::move(w));
    } catch (const Error&) {
      accepted = false;
    }
    if (accepted != members.contains(text)) return false;
  }
  return true;
}

struct Property {
  std::string name;
  std::function<Tally(const Domain&, Execution)> run;
  // Cheap properties that ignore the domain run up to this bound regardless.
  std::size_t min_reach = 0;
  std::function<std::string(const Domain&)> note;
};

void add(std::vector<Property>& props, std::string name,
         std::function<Tally(const Domain&, Execution)> run, std::size_t min_reach = 0,
         std::function<std::string(const Domain&)> note = {}) {
  props.push_back({std::move(name), std::move(run), min_reach, std::move(note)});
}

const std::vector<Property>& properties() {
  static const std::vector<Property> kProps = [] {
    std::vector<Property> p;
    add(p, "alternating_count_euler", [](const Domain& d, Execution) {
                   return single(BigInt(d.alternating.size()) == euler_sequence(d.n).back());
                 });
    add(p, "bijection_fz", [](const Domain& d, Execution e) {
                   return bijective_onto(d.perms, d.histories, e,
                                         [](const Permutation& x) { return fz(x); });
                 });
    add(p, "bijection_phi", [](const Domain& d, Execution e) {
                   return bijective_onto(d.wips, d.snakes, e,
                                         [](const ThreeWIP& x) { return phi(x); });
                 });
    add(p, "bijection_psi", [](const Domain& d, Execution e) {
                   return bijective_onto(d.snakes, d.rcalts, e,
                                         [](const SignedPermutation& x) { return psi(x); });
                 });
    add(p, "bijection_rcalt_to_lbp", [](const Domain& d, Execution e) {
                   return bijective_onto(d.rcalts, d.lbps, e,
                                         [](const Permutation& x) { return rcalt_to_lbp(x); });
                 });
    add(p, "bijection_snake_to_lbp", [](const Domain& d, Execution e) {
                   return bijective_onto(
                       d.snakes, d.lbps, e,
                       [](const SignedPermutation& x) { return snake_to_lbp(x); });
                 });
    add(p, "counts_four_way",
                 [](const Domain& d, Execution) {
                   const auto s = springer_egf(d.n).values.back();
                   const bool ok = BigInt(d.snakes.size()) == s && BigInt(d.wips.size()) == s &&
                                   BigInt(d.rcalts.size()) == s && BigInt(d.lbps.size()) == s &&
                                   count_lbp_dp(d.n) == s;
                   return single(ok);
                 },
                 0, [](const Domain& d) { return std::to_string(d.snakes.size()); });
    add(p, "cycle_peaks_to_left_peaks", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     const auto f = foata(x);
                     std::vector<int> values;
                     for (auto pos : left_peaks(f)) values.push_back(f.value_at(pos));
                     std::sort(values.begin(), values.end());
                     return values == cycle_peaks(x);
                   });
                 });
    add(p, "extend_rc_fixed", [](const Domain& d, Execution e) {
                   return check(d.lbps, e, [](const LabeledBallotPath& x) {
                     const auto h = extend_to_rc_fixed(x);
                     return h.steps().final_height() == 0 && history_rc(h) == h &&
                            halve_rc_fixed(h) == x;
                   });
                 });
    add(p, "fast_mode_matches_verify", [](const Domain& d, Execution e) {
                   auto t = check(d.wips, e, [](const ThreeWIP& x) {
                     const auto s = phi(x, Check::kFast);
                     return s == phi(x) && phi_inverse(s, Check::kFast) == phi_inverse(s);
                   });
                   return merge(t, check(d.snakes, e, [](const SignedPermutation& x) {
                                  return snake_to_lbp(x, Check::kFast) == snake_to_lbp(x) &&
                                         psi(x, Check::kFast) == psi(x);
                                }));
                 });
    add(p, "foata_roundtrip", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     return foata_inverse(foata(x)) == x && foata(foata_inverse(x)) == x;
                   });
                 });
    add(p, "history_rc_involution", [](const Domain& d, Execution e) {
                   return check(d.histories, e, [](const LaguerreHistory& x) {
                     return history_rc(history_rc(x)) == x;
                   });
                 });
    add(p, "inconsistent_bars_never", [](const Domain& d, Execution e) {
                   return check(d.snakes, e, [](const SignedPermutation& x) {
                     try {
                       (void)phi_inverse(x);
                     } catch (const Error& err) {
                       return err.code() != ErrorCode::kInconsistentBars;
                     }
                     return true;
                   });
                 });
    add(p, "invert_involution", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     const auto q = invert(x);
                     for (std::size_t i = 1; i <= x.size(); ++i) {
                       if (q.value_at(x.value_at(i)) != static_cast<int>(i)) return false;
                     }
                     return invert(q) == x;
                   });
                 });
    add(p, "lbp_dp_matches_egf",
                 [](const Domain& d, Execution) {
                   return single(count_lbp_dp(d.n) == springer_egf(d.n).values.back());
                 },
                 12);
    add(p, "lbp_dp_matches_enumeration", [](const Domain& d, Execution) {
                   return single(count_lbp_dp(d.n) == BigInt(d.lbps.size()));
                 });
    add(p, "pattern_sum_bound", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     const auto h = fz(x);
                     for (int i = 1; i <= static_cast<int>(x.size()); ++i) {
                       const auto s = h.steps()[i - 1];
                       const int expected = weight_bound(s, h.steps().heights()[i - 1]);
                       if (count_pat_31_2_at(x, i) + count_pat_2_31_at(x, i) != expected) {
                         return false;
                       }
                     }
                     return true;
                   });
                 });
    add(p, "rcalt_midpoint", [](const Domain& d, Execution e) {
                   const int n = static_cast<int>(d.n);
                   return check(d.rcalts, e, [n](const Permutation& x) {
                     if (n == 0) return true;
                     const int a = x.value_at(n);
                     const int b = x.value_at(n + 1);
                     // Mirrored entries sum to 2n + 1, so the middle pair straddles
                     // n + 1/2; p[n+1] = n (odd n) and p[n] = n (even n) do occur.
                     return n % 2 == 1 ? (a > n && n >= b) : (a <= n && n < b);
                   });
                 });
    add(p, "fz_rc_commutes", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     return fz(reverse_complement(x)) == history_rc(fz(x));
                   });
                 });
    add(p, "mutation_fuzz", [](const Domain& d, Execution e) {
                   const auto snakes = text_set(d.snakes);
                   const auto wips = text_set(d.wips);
                   const auto rcalts = text_set(d.rcalts);
                   const auto alts = text_set(d.alternating);
                   const auto lbps = text_set(d.lbps);
                   const auto hists = text_set(d.histories);
                   auto t = check(d.snakes, e, [&](const SignedPermutation& x) {
                     if (!transpositions_agree(x, snakes, [](const SignedPermutation& q) {
                           return is_snake(q);
                         })) {
                       return false;
                     }
                     for (std::size_t i = 0; i < x.size(); ++i) {
                       std::vector<int> w(x.values().begin(), x.values().end());
                       w[i] = -w[i];
                       const SignedPermutation q(w);
                       if (is_snake(q) != snakes.contains(to_text(q))) return false;
                     }
                     return true;
                   });
                   t = merge(t, check(d.wips, e, [&](const ThreeWIP& x) {
                               const auto s = x.sigma().values();
                               const auto p = x.pi().values();
                               for (std::size_t i = 0; i < s.size(); ++i) {
                                 for (std::size_t j = i + 1; j < s.size(); ++j) {
                                   for (int side = 0; side < 2; ++side) {
                                     const Permutation a(side == 0 ? swapped(s, i, j)
                                                                   : std::vector<int>(s.begin(), s.end()));
                                     const Permutation b(side == 1 ? swapped(p, i, j)
                                                                   : std::vector<int>(p.begin(), p.end()));
                                     const auto text = to_text(a) + " / " + to_text(b);
                                     if (is_wip3(a, b) != wips.contains(text)) return false;
                                   }
                                 }
                               }
                               return true;
                             }));
                   t = merge(t, check(d.rcalts, e, [&](const Permutation& x) {
                               return transpositions_agree(
                                   x, rcalts, [](const Permutation& q) { return is_rcalt(q); });
                             }));
                   t = merge(t, check(d.alternating, e, [&](const Permutation& x) {
                               return transpositions_agree(
                                   x, alts, [](const Permutation& q) { return is_alternating(q); });
                             }));
                   t = merge(t, check(d.lbps, e, [&](const LabeledBallotPath& x) {
                               return increments_agree(x, lbps, [](const StepWord& s, auto w) {
                                 return validate_labeled_ballot(s, std::move(w));
                               });
                             }));
                   t = merge(t, check(d.histories, e, [&](const LaguerreHistory& x) {
                               return increments_agree(x, hists, [](const StepWord& s, auto w) {
                                 return validate_laguerre(s, std::move(w));
                               });
                             }));
                   return t;
                 });
    add(p, "pattern_rc_duality", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     const auto r = reverse_complement(x);
                     const int n = static_cast<int>(x.size());
                     for (int i = 1; i <= n; ++i) {
                       if (count_pat_31_2_at(r, n + 1 - i) != count_pat_2_31_at(x, i)) return false;
                     }
                     return true;
                   });
                 });
    add(p, "peak_valley_interleave", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     const auto peaks = left_peaks(x);
                     const auto valleys = right_valleys(x);
                     for (std::size_t k = 0; k < peaks.size(); ++k) {
                       const auto lo = peaks[k];
                       const auto hi = k + 1 < peaks.size() ? peaks[k + 1] : x.size() + 1;
                       const bool owns = std::any_of(valleys.begin(), valleys.end(),
                                                     [&](auto v) { return lo < v && v < hi; });
                       if (!owns) return false;
                     }
                     // No valley before the first peak.
                     return valleys.empty() || (!peaks.empty() && peaks.front() < valleys.front());
                   });
                 });
    add(p, "rc_involution", [](const Domain& d, Execution e) {
                   return check(d.perms, e, [](const Permutation& x) {
                     return reverse_complement(reverse_complement(x)) == x;
                   });
                 });
    add(p, "rcalt_fz_dyck_fixed", [](const Domain& d, Execution e) {
                   return check(d.rcalts, e, [](const Permutation& x) {
                     const auto h = fz(x);
                     const auto steps = h.steps().steps();
                     return std::none_of(steps.begin(), steps.end(), is_horizontal) &&
                            history_rc(h) == h;
                   });
                 });
    add(p, "roundtrip_fz", [](const Domain& d, Execution e) {
                   auto t = check(d.perms, e,
                                  [](const Permutation& x) { return fz_inverse(fz(x)) == x; });
                   return merge(t, check(d.histories, e, [](const LaguerreHistory& x) {
                                  return fz(fz_inverse(x)) == x;
                                }));
                 });
    add(p, "roundtrip_phi", [](const Domain& d, Execution e) {
                   auto t = check(d.wips, e,
                                  [](const ThreeWIP& x) { return phi_inverse(phi(x)) == x; });
                   return merge(t, check(d.snakes, e, [](const SignedPermutation& x) {
                                  return phi(phi_inverse(x)) == x;
                                }));
                 });
    add(p, "roundtrip_psi", [](const Domain& d, Execution e) {
                   auto t = check(d.snakes, e, [](const SignedPermutation& x) {
                     return psi_inverse(psi(x)) == x;
                   });
                   return merge(t, check(d.rcalts, e, [](const Permutation& x) {
                                  return psi(psi_inverse(x)) == x;
                                }));
                 });
    add(p, "roundtrip_rcalt_lbp", [](const Domain& d, Execution e) {
                   auto t = check(d.rcalts, e, [](const Permutation& x) {
                     return lbp_to_rcalt(rcalt_to_lbp(x)) == x;
                   });
                   return merge(t, check(d.lbps, e, [](const LabeledBallotPath& x) {
                                  return rcalt_to_lbp(lbp_to_rcalt(x)) == x;
                                }));
                 });
    add(p, "snake_sign_pattern", [](const Domain& d, Execution e) {
                   return check(d.snakes, e, [](const SignedPermutation& x) {
                     const auto valleys = right_valleys(x.magnitudes());
                     for (std::size_t pos = 1; pos <= x.size(); ++pos) {
                       if (std::binary_search(valleys.begin(), valleys.end(), pos)) continue;
                       const bool negative = x.value_at(pos) < 0;
                       if (negative != (pos % 2 == 0)) return false;
                     }
                     return true;
                   });
                 });
    add(p, "wbar_involution", [](const Domain& d, Execution e) {
                   return check(d.lbps, e,
                                [](const LabeledBallotPath& x) { return wbar(wbar(x)) == x; });
                 });
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return p;
  }();
  return kProps;
}

PropertyResult run_property(const Property& prop, const std::vector<Domain>& domains,
                            std::size_t n_max, Execution exec) {
  const auto start = std::chrono::steady_clock::now();
  PropertyResult r;
  r.name = prop.name;
  const std::size_t reach = std::max(n_max, prop.min_reach);
  r.range = "0.." + std::to_string(reach);
  std::vector<std::string> notes;
  std::optional<std::size_t> first_bad_n;
  for (std::size_t n = 0; n <= reach; ++n) {
    Tally t;
    if (n < domains.size()) {
      t = prop.run(domains[n], exec);
      if (prop.note) notes.push_back(prop.note(domains[n]));
    } else {
      Domain bare;
      bare.n = n;
      t = prop.run(bare, exec);
    }
    if (t.failed > 0 && !first_bad_n) first_bad_n = n;
    r.checked += t.checked;
    r.failed += t.failed;
  }
  r.passed = r.failed == 0;
  if (!notes.empty()) {
    r.detail = "counts ";
    for (std::size_t i = 0; i < notes.size(); ++i) r.detail += (i ? "," : "") + notes[i];
  }
  if (first_bad_n) {
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += "first failure at n=" + std::to_string(*first_bad_n);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Domain> build_domains(std::size_t n_max) {
  std::vector<Domain> domains;
  for (std::size_t n = 0; n <= n_max; ++n) domains.push_back(build_domain(n));
  return domains;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : properties()) names.push_back(p.name);
  return names;
}

std::vector<PropertyResult> verify_all(std::size_t n_max, Execution exec) {
  const auto domains = build_domains(n_max);
  std::vector<PropertyResult> out;
  for (const auto& p : properties()) out.push_back(run_property(p, domains, n_max, exec));
  return out;
}

PropertyResult verify_one(const std::string& name, std::size_t n_max, Execution exec) {
  for (const auto& p : properties()) {
    if (p.name == name) return run_property(p, build_domains(n_max), n_max, exec);
  }
  throw std::out_of_range("unknown property " + name);
}

}  // namespace springer
