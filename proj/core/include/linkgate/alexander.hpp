#pragma once

#include "linkgate/budget.hpp"
#include "linkgate/laurent.hpp"
#include "linkgate/polymatrix.hpp"
#include "linkgate/presentation.hpp"

namespace linkgate {

// Fox (Alexander) matrix over the Laurent ring: one row per relator, one
// column per generator; entry (i,j) = d(relator i)/d(generator j).
struct FoxMatrix {
  PolyMatrix matrix;
  MeridianMap mmap;
};

// Abelianized free derivative: dx/dx = 1, d(uv)/dx = du/dx + ab(u) dv/dx,
// d(x^-1)/dx = -ab(x)^-1.
LaurentPoly fox_derivative(const Word& w, int gen, const MeridianMap& m);

FoxMatrix fox_matrix(const GroupPresentation& p, const MeridianMap& m);

// d = (n-1) - rank_over_K(J) for a Wirtinger presentation of a connected
// link with n generators.
int h1_rank(const FoxMatrix& j);

// Delta_k of coker J: gcd of all (n-k) x (n-k) minors.
LaurentPoly elementary_gcd(const FoxMatrix& j, int k, Budget* budget = nullptr);

// Torsion Alexander polynomial: gcd of all r x r minors, r = rank(J);
// unit-normalized. Delta_0 of the zero module is 1.
LaurentPoly torsion_alexander(const FoxMatrix& j, Budget* budget = nullptr);

// Blanchfield reciprocity check: Delta =. involve(Delta).
bool symmetry_holds(const LaurentPoly& delta);

}  // namespace linkgate
