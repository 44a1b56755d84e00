#pragma once

#include <vector>

#include "qci/cocycle.hpp"
#include "qci/diagram.hpp"
#include "qci/weight_multiset.hpp"

namespace qci {

// Boltzmann weight of one crossing: sign * phi(under, over), reduced mod n.
int crossing_weight(const ClosedDiagram& diagram, std::size_t crossing_index,
                    const Coloring& coloring, const Cocycle2& phi);

// Total weight of a coloring: the sum of all crossing weights mod n.
int coloring_weight(const ClosedDiagram& diagram, const Coloring& coloring, const Cocycle2& phi);

// The state-sum invariant: the multiset of total weights over all colorings.
// The braid closure must be a knot and phi must live on the given quandle.
WeightMultiset phi_invariant(const BraidWord& braid, const FiniteQuandle& quandle,
                             const Cocycle2& phi, int jobs = 1);

// The invariant family of the twisted torus surface built over a classical
// knot: one multiset per integer class, and scaling by k and by k+n gives the
// same multiset over Z_n, so the family is indexed by k in {0,...,n-1}.  In
// the full family every member recurs without bound; the flag records that.
struct OmegaFamily {
  int modulus;
  WeightMultiset base;                 // = phi_invariant of the underlying knot
  std::vector<WeightMultiset> members; // members[k] = scale_multiset(k, base)
  bool members_recur_infinitely = true;
};

// Requires r to be a non-negative multiple of quandle_type(quandle) (r = 0
// included); other r have no closed form and are rejected.
OmegaFamily omega_family(const BraidWord& braid, const FiniteQuandle& quandle,
                         const Cocycle2& phi, int r, int jobs = 1);

// Reference data: the 3-cocycle invariant multiset of the 2-twist-spun (2,q)
// torus knot with the matching modulus-q cocycle.  Each value -2k^2 mod q
// (k = 0..q-1) occurs with multiplicity q.  Requires odd prime q.
WeightMultiset twist_spun_reference(int q);

// Companion reference: with a modulus-p cocycle, p != q, the same surface
// has only the all-zero multiset ({0 x p}).
WeightMultiset twist_spun_reference_mismatched(int p, int q);

// Support set of twist_spun_reference(q), sorted.
std::vector<int> residue_support(int q);

}  // namespace qci
