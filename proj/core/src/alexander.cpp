#include "linkgate/alexander.hpp"

#include <cstdlib>

#include "linkgate/errors.hpp"

namespace linkgate {

LaurentPoly fox_derivative(const Word& w, int gen, const MeridianMap& m) {
  int nv = m.num_components;
  LaurentPoly out(nv);
  LaurentPoly::Exps prefix(nv, 0);  // abelianization of the prefix read so far
  for (int l : w) {
    int g = std::abs(l) - 1;
    int comp = m.component_of_generator[g];
    if (l > 0) {
      if (g == gen) out.add_term(prefix, 1);
      ++prefix[comp];
    } else {
      --prefix[comp];
      if (g == gen) out.add_term(prefix, -1);
    }
  }
  return out;
}

FoxMatrix fox_matrix(const GroupPresentation& p, const MeridianMap& m) {
  FoxMatrix f;
  f.mmap = m;
  f.matrix = PolyMatrix(static_cast<int>(p.relators.size()),
                        static_cast<int>(p.generators.size()),
                        m.num_components);
  for (int i = 0; i < f.matrix.rows; ++i)
    for (int j = 0; j < f.matrix.cols; ++j)
      f.matrix.at(i, j) = fox_derivative(p.relators[i], j, m);
  return f;
}

int h1_rank(const FoxMatrix& j) {
  return (j.matrix.cols - 1) - rank_over_fraction_field(j.matrix);
}

LaurentPoly elementary_gcd(const FoxMatrix& j, int k, Budget* budget) {
  if (k < 0 || k > j.matrix.cols)
    throw PreconditionError("elementary_gcd: k out of range");
  return minors_gcd(j.matrix, j.matrix.cols - k, budget);
}

LaurentPoly torsion_alexander(const FoxMatrix& j, Budget* budget) {
  int r = rank_over_fraction_field(j.matrix);
  LaurentPoly g = minors_gcd(j.matrix, r, budget);
  if (g.is_zero()) return g;
  return normalize(g).poly;
}

bool symmetry_holds(const LaurentPoly& delta) {
  return doteq(delta, involve(delta));
}

}  // namespace linkgate
