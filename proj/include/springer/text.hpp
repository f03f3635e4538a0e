#pragma once

// Bit-exact text formats shared by the CLI and the canonical enumeration
// order.
//
//   permutation          5 7 1 2 6 3 8 9 4
//   signed permutation   2 -1 5 4 7 -6 -3
//   3-WIP                1 5 2 / 2 1 3
//   labeled ballot path  UUUDDUU;0,0,1,2,0,0,0
//   Laguerre history     UHTDUUHDD;0,1,0,0,0,0,2,1,0
//
// The two debug formats (marked permutations `5 7^ 1`, cycle forms
// `(5)(7^,1,2)`) are output-only.

#include <string>
#include <string_view>

#include "springer/families.hpp"
#include "springer/paths.hpp"
#include "springer/permcore.hpp"

namespace springer {

std::string to_text(const Permutation& p);
std::string to_text(const SignedPermutation& sp);
std::string to_text(const ThreeWIP& wip);
std::string to_text(const LabeledBallotPath& lbp);
std::string to_text(const LaguerreHistory& hw);
std::string to_text(const MarkedPermutation& mp);
std::string to_text(const CycleForm& form);
/// Cycle form with hats on the marked values.
std::string to_text(const CycleForm& form, const MarkedPermutation& marks);

// Parsers throw Error(kParse) on malformed text and the type's own
// validation error on well-formed text that violates an invariant.
Permutation parse_permutation(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view text);
ThreeWIP parse_wip3(std::string_view text);
LabeledBallotPath parse_labeled_ballot_path(std::string_view text);
LaguerreHistory parse_laguerre_history(std::string_view text);

}  // namespace springer
