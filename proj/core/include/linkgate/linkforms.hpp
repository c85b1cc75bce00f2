#pragma once

#include <vector>

#include "linkgate/intmatrix.hpp"
#include "linkgate/laurent.hpp"

namespace linkgate {

// Q/Z-valued symmetric linking form on a finite abelian group given by
// invariant factors (all > 1 when produced by from_presentation; direct
// sums may interleave). Gram entries are representatives in [0,1).
struct FiniteLinkingForm {
  std::vector<Int> factors;
  std::vector<std::vector<Rat>> gram;

  Int order() const;
  Rat pairing(const std::vector<Int>& x, const std::vector<Int>& y) const;
  FiniteLinkingForm negated() const;
  FiniteLinkingForm direct_sum(const FiniteLinkingForm& o) const;
};

// Subgroup of +Z/d_i, stored as the sorted list of all its elements.
struct Subgroup {
  std::vector<std::vector<Int>> elements;
  bool operator==(const Subgroup& o) const = default;
  Int order() const { return Int(elements.size()); }
};

Subgroup subgroup_closure(const std::vector<Int>& factors,
                          const std::vector<std::vector<Int>>& generators);

// Form on coker(A) with gram A^-1 mod Z in SNF-adapted coordinates.
// Requires det A != 0 and A symmetric.
FiniteLinkingForm from_presentation(const IntMatrix& A);

// {m | b(p, m) = 0 for all p in P}.
Subgroup orthogonal(const FiniteLinkingForm& f, const Subgroup& p);

// All P with P = orthogonal(P), via Hermite-normal-form sublattice
// enumeration pruned to |P|^2 = |G|; empty when |G| is not a square.
// Default order budget 4096.
std::vector<Subgroup> metabolizers(const FiniteLinkingForm& f,
                                   const Int& max_order = 4096);

// Independent oracle: exhaustive scan over all subgroups (element-closure
// enumeration); intended for cross-checking metabolizers().
std::vector<Subgroup> metabolizers_brute(const FiniteLinkingForm& f);

// All homomorphisms G -> Z/q^k vanishing on P, as images of the standard
// generators e_i.
std::vector<std::vector<Int>> characters_vanishing(
    const std::vector<Int>& factors, const Subgroup& p, const Int& q, int k);

// F1 ~ F2 iff F1 + (-F2) admits a metabolizer (nonsingular finite forms).
bool witt_equivalent(const FiniteLinkingForm& f1, const FiniteLinkingForm& f2,
                     const Int& max_order = 4096);

// Entry of a gram matrix over the localized 1-variable Laurent ring.
struct PolyFraction {
  LaurentPoly num;
  LaurentPoly den;
};

// Checks a supplied neutrality certificate for a Laurent-ring-valued
// pairing: the gram must be conjugate-symmetric, every pair of submodule
// generators must pair to 0 (N within N-perp), and the generators must
// span half the rank of the domain over the fraction field. No searching.
bool verify_neutral_certificate(
    const std::vector<std::vector<PolyFraction>>& gram,
    const std::vector<std::vector<LaurentPoly>>& submodule_gens);

}  // namespace linkgate
