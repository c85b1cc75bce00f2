#include "linkgate/obstruction.hpp"

#include <algorithm>
#include <optional>

#include "linkgate/errors.hpp"
#include "linkgate/factor.hpp"

namespace linkgate {
namespace {

Int eval_at(const LaurentPoly& p, const Int& point) {
  std::vector<Rat> at(p.num_vars(), Rat(point));
  Rat v = evaluate(p, at);
  return numerator(v) / denominator(v);  // exact at +-1 points
}

}  // namespace

bool verify_norm_certificate(const LaurentPoly& delta, const LaurentPoly& f) {
  if (f.is_zero()) return false;
  if (abs_int(eval_at(f, 1)) != 1) return false;
  return doteq(delta, f * involve(f));
}

NecessaryReport necessary_conditions(const LaurentPoly& delta) {
  if (delta.is_zero())
    throw PreconditionError("necessary_conditions: zero polynomial");
  NecessaryReport r;
  r.eval_one_unit = abs_int(eval_at(delta, 1)) == 1;
  r.eval_minus_one_square = perfect_square(abs_int(eval_at(delta, -1)));
  r.symmetric = symmetry_holds(delta);
  return r;
}

NormVerdict exact_norm_test(const LaurentPoly& delta, Budget* budget) {
  if (delta.is_zero())
    throw PreconditionError("exact_norm_test: zero polynomial");
  NormVerdict v;
  if (abs_int(eval_at(delta, 1)) != 1) {
    v.status = NormStatus::No;
    v.reason = "evaluation at (1,...,1) is not a unit";
    return v;
  }
  auto fac = factor(delta, budget);
  if (!fac) {
    v.status = NormStatus::Unknown;
    v.reason = "factorization unavailable within budget";
    return v;
  }
  if (!perfect_square(fac->content)) {
    v.status = NormStatus::No;
    v.reason = "integer content is not a perfect square";
    return v;
  }
  LaurentPoly witness =
      LaurentPoly::constant(delta.num_vars(), sqrt_int(fac->content));
  std::vector<bool> used(fac->factors.size(), false);
  for (std::size_t i = 0; i < fac->factors.size(); ++i) {
    if (used[i]) continue;
    const auto& [pi, mult] = fac->factors[i];
    LaurentPoly conj = normalize(involve(pi)).poly;
    if (conj == pi) {
      if (mult % 2 != 0) {
        v.status = NormStatus::No;
        v.reason = "self-conjugate factor " + pi.to_string() +
                   " has odd multiplicity";
        return v;
      }
      witness = witness * pi.pow(mult / 2);
      used[i] = true;
      continue;
    }
    std::size_t j = 0;
    for (; j < fac->factors.size(); ++j)
      if (!used[j] && fac->factors[j].first == conj) break;
    if (j == fac->factors.size() || fac->factors[j].second != mult) {
      v.status = NormStatus::No;
      v.reason = "factor " + pi.to_string() +
                 " is not matched by its conjugate at equal multiplicity";
      return v;
    }
    // Deterministic witness: keep the lexicographically first of the pair.
    witness = witness *
              (pi.to_string() < conj.to_string() ? pi : conj).pow(mult);
    used[i] = used[j] = true;
  }
  if (!verify_norm_certificate(delta, witness))
    throw PreconditionError("exact_norm_test: witness self-check failed");
  v.status = NormStatus::Yes;
  v.witness = witness;
  return v;
}

NormVerdict pair_test(const LaurentPoly& d0, const LaurentPoly& d1,
                      Budget* budget) {
  if (d0.is_zero() || d1.is_zero())
    throw PreconditionError("pair_test: zero polynomial");
  if (d0.num_vars() != d1.num_vars())
    throw PreconditionError("pair_test: variable counts differ");
  NormVerdict v;
  auto f0 = factor(d0, budget);
  auto f1 = factor(d1, budget);
  if (!f0 || !f1) {
    v.status = NormStatus::Unknown;
    v.reason = "factorization unavailable within budget";
    return v;
  }
  if (!perfect_square(f0->content * f1->content)) {
    v.status = NormStatus::No;
    v.reason = "content ratio is not a square";
    return v;
  }
  // Signed multiplicity of each irreducible in Delta0 / Delta1.
  std::vector<std::pair<LaurentPoly, int>> diff = f0->factors;
  for (const auto& [pi, m] : f1->factors) {
    bool hit = false;
    for (auto& [g, n] : diff)
      if (g == pi) {
        n -= m;
        hit = true;
        break;
      }
    if (!hit) diff.emplace_back(pi, -m);
  }
  auto mult_of = [&](const LaurentPoly& g) {
    for (const auto& [h, n] : diff)
      if (h == g) return n;
    return 0;
  };
  for (const auto& [pi, n] : diff) {
    if (n == 0) continue;
    if (abs_int(eval_at(pi, 1)) != 1) {
      v.status = NormStatus::No;
      v.reason = "residual factor " + pi.to_string() +
                 " does not evaluate to a unit at (1,...,1)";
      return v;
    }
    LaurentPoly conj = normalize(involve(pi)).poly;
    if (conj == pi) {
      if (n % 2 != 0) {
        v.status = NormStatus::No;
        v.reason = "residual self-conjugate factor " + pi.to_string() +
                   " has odd multiplicity";
        return v;
      }
    } else if (mult_of(conj) != n) {
      v.status = NormStatus::No;
      v.reason = "residual factor " + pi.to_string() +
                 " not conjugate-balanced";
      return v;
    }
  }
  v.status = NormStatus::Yes;
  return v;
}

HopfReport hopf_test_poly(const LaurentPoly& delta, Budget* budget) {
  HopfReport r;
  r.rank_zero = true;
  r.torsion_poly = delta;
  r.necessary = necessary_conditions(delta);
  r.norm = exact_norm_test(delta, budget);
  if (r.norm.status == NormStatus::No)
    r.verdict = HopfVerdict::Obstructed;
  else if (r.norm.status == NormStatus::Unknown)
    r.verdict = HopfVerdict::Inconclusive;
  else
    r.verdict = HopfVerdict::PassesAbelian;
  return r;
}

HopfReport hopf_test(const LinkDiagram& d, Budget* budget) {
  if (d.num_components != 2)
    throw PreconditionError("hopf_test: link must have 2 components");
  IntMatrix lk = linking_matrix(d);
  if (lk.at(0, 1) != 1)
    throw PreconditionError("hopf_test: linking number must be 1");

  WirtingerResult w = wirtinger(d);
  FoxMatrix j = fox_matrix(w.pres, w.mmap);
  HopfReport r;
  r.rank_zero = h1_rank(j) == 0;
  r.torsion_poly = torsion_alexander(j, budget);
  r.necessary = necessary_conditions(r.torsion_poly);
  r.norm = exact_norm_test(r.torsion_poly, budget);
  if (!r.rank_zero || r.norm.status == NormStatus::No)
    r.verdict = HopfVerdict::Obstructed;
  else if (r.norm.status == NormStatus::Unknown)
    r.verdict = HopfVerdict::Inconclusive;
  else
    r.verdict = HopfVerdict::PassesAbelian;
  return r;
}

}  // namespace linkgate
