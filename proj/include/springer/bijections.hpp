#pragma once

// Bijections between the Springer families:
//
//   phi           3-WIPs -> snakes (via a marked permutation and Foata's
//                 transformation)
//   psi           snakes -> rc-invariant alternating permutations of length 2n
//   fz            permutations -> restricted Laguerre histories
//                 (Foata-Zeilberger)
//   rcalt_to_lbp  rc-invariant alternating permutations -> labeled ballot
//                 paths (fz, then keep the first half)
//   snake_to_lbp  rcalt_to_lbp after psi
//
// Each has an inverse. Composite maps take a Check argument: kVerify
// re-validates intermediate objects and throws InvariantBroken on drift,
// kFast skips those checks. Outputs are identical in both modes.

#include "springer/families.hpp"
#include "springer/paths.hpp"
#include "springer/permcore.hpp"

namespace springer {

enum class Check { kVerify, kFast };

/// tau(sigma_i) = pi_i; a cycle peak k of tau is marked iff
/// sigma_l = k = pi_{l+1} for some l.
MarkedPermutation phi_step1(const ThreeWIP& wip);

/// Rebuilds the 3-WIP by sorting the columns (i, tau_i, max(i, tau_i)) on
/// their last entry. A marked cycle peak k puts the column with i = k ahead
/// of the column with tau_i = k. Errors: MarkNotCyclePeak.
ThreeWIP phi_step1_inverse(const MarkedPermutation& mp);

struct PhiTrace {
  MarkedPermutation tau;        // step 1, marks on cycle peaks
  MarkedPermutation tau_tilde;  // foata(tau), marks on left peaks
  SignedPermutation snake;
};

PhiTrace phi_trace(const ThreeWIP& wip, Check check = Check::kVerify);
SignedPermutation phi(const ThreeWIP& wip, Check check = Check::kVerify);
/// Errors: NotASnake, InconsistentBars.
ThreeWIP phi_inverse(const SignedPermutation& snake, Check check = Check::kVerify);

/// Errors: NotASnake.
Permutation psi(const SignedPermutation& snake, Check check = Check::kVerify);
/// Errors: OddLength, NotRcInvariant, NotAlternating.
SignedPermutation psi_inverse(const Permutation& p, Check check = Check::kVerify);

LaguerreHistory fz(const Permutation& p);
/// Diamond insertion. Errors: PlaceholderExhausted(i).
Permutation fz_inverse(const LaguerreHistory& hw);

/// Errors: OddLength, NotAlternating, NotRcInvariant.
LabeledBallotPath rcalt_to_lbp(const Permutation& p, Check check = Check::kVerify);
Permutation lbp_to_rcalt(const LabeledBallotPath& lbp, Check check = Check::kVerify);

/// Errors: NotASnake.
LabeledBallotPath snake_to_lbp(const SignedPermutation& snake, Check check = Check::kVerify);
SignedPermutation lbp_to_snake(const LabeledBallotPath& lbp, Check check = Check::kVerify);

}  // namespace springer
