#pragma once

#include <vector>

#include "linkgate/numeric.hpp"
#include "linkgate/presentation.hpp"

namespace linkgate {

// Homomorphism from a presented group onto a subgroup of the finite
// abelian group with the given invariant factors.
struct CoveringData {
  GroupPresentation base;
  std::vector<Int> target_factors;        // e.g. {p^i, p^j}; 1 allowed
  std::vector<std::vector<Int>> hom;      // generator -> element of A
  Int index() const;                      // order of the image subgroup
};

// All homomorphisms H1 -> Z/p^i + Z/p^j sending the two meridians to
// (1,0) and (0,1); requires H1 of the glued presentation to be Z^3.
// Exactly p^(i+j) results (free choice on the third basis vector).
std::vector<CoveringData> admissible_homs(const WirtingerResult& w,
                                          const Int& p, int i, int j);

// Same enumeration for an arbitrary presentation with chosen generators
// required to hit (1,0) and (0,1); exposed for tests.
std::vector<CoveringData> admissible_homs(const GroupPresentation& glued,
                                          int meridian_gen1,
                                          int meridian_gen2, const Int& p,
                                          int i, int j);

// Presentation of ker(hom) with a breadth-first Schreier transversal;
// tree-edge Schreier generators are pruned, so the generator count is
// t(n-1)+1 and the relator count t*m.
GroupPresentation reidemeister_schreier(const CoveringData& c);

// Invariant factors of H1 of the cover (0 denotes Z).
std::vector<Int> cover_h1(const CoveringData& c);

}  // namespace linkgate
