#pragma once

#include <string>

#include "linkgate/alexander.hpp"
#include "linkgate/budget.hpp"
#include "linkgate/laurent.hpp"
#include "linkgate/link_codec.hpp"

namespace linkgate {

enum class NormStatus { Yes, No, Unknown };

struct NormVerdict {
  NormStatus status = NormStatus::Unknown;
  LaurentPoly witness;  // meaningful only for Yes from exact_norm_test
  std::string reason;
};

// True iff Delta =. f * involve(f) and |f(1,...,1)| = 1.
bool verify_norm_certificate(const LaurentPoly& delta, const LaurentPoly& f);

// Necessary consequences of the norm condition; any failure rules it out.
struct NecessaryReport {
  bool eval_one_unit = false;         // |Delta(1,...,1)| = 1
  bool eval_minus_one_square = false; // Delta(-1,...,-1) = +- square
  bool symmetric = false;             // Delta =. involve(Delta)
  bool pass() const {
    return eval_one_unit && eval_minus_one_square && symmetric;
  }
};

NecessaryReport necessary_conditions(const LaurentPoly& delta);

// Decides Delta =. f * involve(f) with |f(1,...,1)| = 1 via factorization;
// Unknown when the factorization budget is exceeded.
NormVerdict exact_norm_test(const LaurentPoly& delta, Budget* budget = nullptr);

// Decides existence of f0, f1 with |f_i(1,...,1)| = 1 and
// Delta0 f0 involve(f0) =. Delta1 f1 involve(f1).
NormVerdict pair_test(const LaurentPoly& d0, const LaurentPoly& d1,
                      Budget* budget = nullptr);

enum class HopfVerdict { Obstructed, PassesAbelian, Inconclusive };

// Composite abelian-invariant comparison against the Hopf link for a
// 2-component, lk = 1 link. OBSTRUCTED certifies the link is not
// height-3 Whitney-tower/grope concordant to the Hopf link.
struct HopfReport {
  bool rank_zero = false;
  LaurentPoly torsion_poly;
  NormVerdict norm;
  NecessaryReport necessary;
  HopfVerdict verdict = HopfVerdict::Inconclusive;
};

HopfReport hopf_test(const LinkDiagram& d, Budget* budget = nullptr);

// The same report computed from a torsion polynomial alone (fixture mode).
HopfReport hopf_test_poly(const LaurentPoly& delta, Budget* budget = nullptr);

}  // namespace linkgate
