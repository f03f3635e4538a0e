#include "springer/text.hpp"

#include <charconv>
#include <vector>

#include "springer/error.hpp"

namespace springer {

namespace {

template <class Range>
std::string join(const Range& values, char sep) {
  std::string out;
  bool first = true;
  for (int v : values) {
    if (!first) out.push_back(sep);
    out += std::to_string(v);
    first = false;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  // from_chars accepts a leading '-' but not '+', which matches the format.
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParse, "bad integer '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_ints(std::string_view text, char sep) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  if (sep == ' ') {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
      if (j > i) out.push_back(parse_int(text.substr(i, j - i)));
      i = j;
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    out.push_back(parse_int(text.substr(start, end == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::pair<StepWord, std::vector<int>> parse_weighted(std::string_view text) {
  text = trim(text);
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "expected exactly one ';' between steps and weights");
  }
  return {StepWord::parse(text.substr(0, semi)), parse_ints(text.substr(semi + 1), ',')};
}

template <class Weighted>
std::string weighted_text(const Weighted& x) {
  return x.steps().str() + ";" + join(x.weights(), ',');
}

}  // namespace

std::string to_text(const Permutation& p) { return join(p.values(), ' '); }
std::string to_text(const SignedPermutation& sp) { return join(sp.values(), ' '); }

std::string to_text(const ThreeWIP& wip) {
  return to_text(wip.sigma()) + " / " + to_text(wip.pi());
}

std::string to_text(const LabeledBallotPath& lbp) { return weighted_text(lbp); }
std::string to_text(const LaguerreHistory& hw) { return weighted_text(hw); }

std::string to_text(const MarkedPermutation& mp) {
  std::string out;
  for (std::size_t pos = 1; pos <= mp.perm.size(); ++pos) {
    if (pos > 1) out.push_back(' ');
    const int v = mp.perm.value_at(pos);
    out += std::to_string(v);
    if (mp.is_marked(v)) out.push_back('^');
  }
  return out;
}

std::string to_text(const CycleForm& form) { return to_text(form, MarkedPermutation{}); }

std::string to_text(const CycleForm& form, const MarkedPermutation& marks) {
  std::string out;
  for (const auto& cycle : form.cycles) {
    out.push_back('(');
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(cycle[i]);
      if (marks.is_marked(cycle[i])) out.push_back('^');
    }
    out.push_back(')');
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_ints(text, ' '));
}

SignedPermutation parse_signed_permutation(std::string_view text) {
  return SignedPermutation(parse_ints(text, ' '));
}

ThreeWIP parse_wip3(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos ||
      text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "expected exactly one '/' between sigma and pi");
  }
  return ThreeWIP(parse_permutation(text.substr(0, slash)),
                  parse_permutation(text.substr(slash + 1)));
}

LabeledBallotPath parse_labeled_ballot_path(std::string_view text) {
  auto [steps, weights] = parse_weighted(text);
  return validate_labeled_ballot(std::move(steps), std::move(weights));
}

LaguerreHistory parse_laguerre_history(std::string_view text) {
  auto [steps, weights] = parse_weighted(text);
  return validate_laguerre(std::move(steps), std::move(weights));
}

}  // namespace springer
