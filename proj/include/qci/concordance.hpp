#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qci/invariant.hpp"
#include "qci/weight_multiset.hpp"

namespace qci {

// Support inclusion: every value of `left` occurs in `right`, multiplicity
// ignored.  Reflexive and transitive.  Throws on modulus mismatch.
bool m_subset(const WeightMultiset& left, const WeightMultiset& right);

// One-directional obstruction verdict.  obstructed = true proves that the
// upper object is NOT ribbon concordant to the lower one; obstructed = false
// proves nothing.  The witness is re-checkable: it fails m_subset against the
// lower input (for thm12, against every member of the lower family).
struct Verdict {
  bool obstructed = false;
  std::string theorem;  // "thm11" or "thm12"
  std::string upper;    // descriptor of F1 (the would-be concordant-from)
  std::string lower;    // descriptor of F0
  std::string context;  // invariant used, e.g. "theta_3 over Z_3"
  std::optional<WeightMultiset> witness;
  std::optional<int> witness_member;  // index k of the violating family member
  std::optional<int> missing_value;   // least witness support value absent below
};

Verdict theorem11_check(const WeightMultiset& upper, const WeightMultiset& lower,
                        std::string upper_name = "F1", std::string lower_name = "F0",
                        std::string context = "");

Verdict theorem12_check(const OmegaFamily& upper, const OmegaFamily& lower,
                        std::string upper_name = "F1", std::string lower_name = "F0",
                        std::string context = "");

// Obstruction between the 2-twist-spun (2,q) and (2,q') torus knots, both
// directions, each using the reference invariant with the matching modulus.
// Requires distinct odd primes.
std::pair<Verdict, Verdict> corollary21_report(int q, int qprime);

// Same surface against its orientation reverse, both directions; obstructed
// exactly when the support is not closed under negation (q = 3 mod 4).
std::pair<Verdict, Verdict> corollary21_mirror_report(int q);

// Obstruction for sigma^r T(2,l) over sigma^s S(m,n) with the order-6
// conjugation quandle and its Z_4 cocycle.  Requires r,s = 0 (mod 4),
// l,m,n = 3 (mod 6), and l,m,n <= 21.
Verdict corollary43_report(int l, int m, int n, int r, int s);

}  // namespace qci
