// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "linkgate/alexander.hpp"
#include "linkgate/covers.hpp"
#include "linkgate/linkforms.hpp"
#include "linkgate/obstruction.hpp"
#include "linkgate/twisted.hpp"

using namespace linkgate;

namespace {

int failures = 0;

void report(int k, const std::string& name, bool ok) {
  std::cout << "criterion " << k << " (" << name << "): "
            << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) ++failures;
}

FoxMatrix fox_of(const char* name) {
  WirtingerResult w = wirtinger(builtin_link(name));
  return fox_matrix(w.pres, w.mmap);
}

bool c1_hopf_baseline() {
  FoxMatrix j = fox_of("hopf");
  return h1_rank(j) == 0 && doteq(torsion_alexander(j), parse_poly("1", 2));
}

bool c2_glued_group() {
  for (const char* name : {"hopf", "hopf4"}) {
    Abelianization ab = abelianize(glue_ML(wirtinger(builtin_link(name))));
    if (ab.invariant_factors != std::vector<Int>{0, 0, 0}) return false;
  }
  return true;
}

bool c3_knot_and_unlink() {
  FoxMatrix tre = fox_of("trefoil");
  if (!doteq(torsion_alexander(tre), parse_poly("t^2 - t + 1", 1))) return false;
  FoxMatrix un = fox_of("unlink2");
  return h1_rank(un) == 1;
}

bool c4_symmetry() {
  for (const char* name :
       {"hopf", "hopf4", "unlink2", "trefoil", "solomon", "unknot"}) {
    if (!symmetry_holds(torsion_alexander(fox_of(name)))) return false;
  }
  return true;
}

bool c5_diagram_invariance() {
  FoxMatrix a = fox_of("hopf");
  FoxMatrix b = fox_of("hopf4");
  return h1_rank(a) == h1_rank(b) &&
         doteq(torsion_alexander(a), torsion_alexander(b));
}

bool c6_norm_soundness() {
  // 50 deterministic polynomials: 25 norms f * involve(f) with |f(1,1)|=1,
  // 25 perturbed non-norm companions. exact_norm_test must never answer
  // Yes on a non-norm or No on a norm; Yes answers must carry a verified
  // certificate.
  std::mt19937_64 rng(0x5eed50);
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, 2);
  int built = 0;
  while (built < 25) {
    // f = 1 + sum of small mixed terms; forced |f(1,1)| = 1 by adding a
    // balancing constant.
    LaurentPoly f(2);
    f.add_term({1, 0}, coef(rng));
    f.add_term({0, 1}, coef(rng));
    f.add_term({1, 1}, coef(rng));
    Rat at_one = evaluate(f + parse_poly("1", 2), {Rat(1), Rat(1)});
    LaurentPoly bal =
        LaurentPoly::constant(2, 1 - (at_one.convert_to<Int>() - 1));
    f = f + bal;
    if (f.is_zero() || f.is_constant()) continue;
    LaurentPoly norm = f * involve(f);
    NormVerdict v = exact_norm_test(norm);
    if (v.status == NormStatus::No) return false;
    if (v.status == NormStatus::Yes &&
        !verify_norm_certificate(norm, v.witness))
      return false;

    // Companion non-norm: multiply by one asymmetric non-unit factor.
    LaurentPoly spoil;
    switch (pick(rng)) {
      case 0: spoil = parse_poly("t1*t2 + 1", 2); break;
      case 1: spoil = parse_poly("t1 + t2 + 1", 2); break;
      default: spoil = parse_poly("2*t1 - 1", 2); break;
    }
    NormVerdict w = exact_norm_test(norm * spoil);
    if (w.status == NormStatus::Yes) return false;
    ++built;
  }
  // Fixed references: the trefoil polynomial is not a norm, and
  // t - 3 + t^-1 already fails the necessary conditions.
  if (exact_norm_test(parse_poly("t^2 - t + 1", 1)).status != NormStatus::No)
    return false;
  if (necessary_conditions(parse_poly("t - 3 + t^-1", 1)).pass()) return false;
  return true;
}

bool c7_metabolizers() {
  std::mt19937_64 rng(0xa11ce);
  std::uniform_int_distribution<int> dim(1, 3), val(-4, 4);
  int done = 0;
  while (done < 30) {
    int n = dim(rng);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a.at(i, j) = a.at(j, i) = val(rng);
    if (det(a) == 0) continue;
    FiniteLinkingForm f = from_presentation(a);
    if (f.order() > 256) continue;
    if (metabolizers(f) != metabolizers_brute(f)) return false;
    ++done;
  }
  return true;
}

bool c8_nielsen_schreier_free() {
  // Index-t subgroups of the free group F_n are free of rank t(n-1)+1.
  // Cyclic covers onto Z/t for n <= 3, t <= 8.
  for (int n = 1; n <= 3; ++n) {
    for (int t = 2; t <= 8; ++t) {
      CoveringData c;
      for (int g = 0; g < n; ++g) {
        c.base.generators.push_back(std::string(1, char('a' + g)));
        c.hom.push_back({g == 0 ? Int(1) : Int(0)});
      }
      c.target_factors = {t};
      if (c.index() != t) return false;
      GroupPresentation k = reidemeister_schreier(c);
      if (static_cast<long long>(k.generators.size()) !=
          1LL * t * (n - 1) + 1)
        return false;
      if (!k.relators.empty()) return false;
      // The abelianization confirms freeness of the computed rank.
      Abelianization ab = abelianize(k);
      if (ab.invariant_factors !=
          std::vector<Int>(std::size_t(t * (n - 1) + 1), Int(0)))
        return false;
    }
  }
  return true;
}

bool c8_covers() {
  if (!c8_nielsen_schreier_free()) return false;
  for (const char* name : {"hopf", "hopf4"}) {
    WirtingerResult w = wirtinger(builtin_link(name));
    for (const auto& [p, i, j] :
         {std::tuple{2, 1, 1}, std::tuple{3, 1, 1}, std::tuple{2, 2, 1}}) {
      auto homs = admissible_homs(w, p, i, j);
      long long expect = 1;
      for (int e = 0; e < i + j; ++e) expect *= p;
      if (static_cast<long long>(homs.size()) != expect) return false;
      for (const CoveringData& c : homs) {
        if (c.index() > 8) continue;
        GroupPresentation k = reidemeister_schreier(c);
        long long t = c.index().convert_to<long long>();
        long long ng = static_cast<long long>(c.base.generators.size());
        long long nr = static_cast<long long>(c.base.relators.size());
        if (static_cast<long long>(k.generators.size()) != t * (ng - 1) + 1)
          return false;
        if (static_cast<long long>(k.relators.size()) != t * nr) return false;
      }
    }
  }
  // Cover homology of the Hopf splice: Z^3 at (p,i,j) = (2,1,1), (3,1,1).
  WirtingerResult w = wirtinger(builtin_link("hopf"));
  for (int p : {2, 3})
    for (const CoveringData& c : admissible_homs(w, p, 1, 1))
      if (cover_h1(c) != std::vector<Int>{0, 0, 0}) return false;
  return true;
}

bool c9_thm23() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomInstance inst = random_instance(seed);
    Thm23Result r =
        check_thm23(inst.C, inst.rho, inst.qprime, inst.cycles, inst.n);
    if (!r.holds()) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "hopf link: rank 0, trivial torsion polynomial",
         c1_hopf_baseline());
  report(2, "glued-manifold group abelianizes to Z^3", c2_glued_group());
  report(3, "trefoil polynomial and unlink rank", c3_knot_and_unlink());
  report(4, "torsion polynomial symmetry on the corpus", c4_symmetry());
  report(5, "diagram invariance: hopf vs hopf4", c5_diagram_invariance());
  report(6, "norm-test soundness on 50 polynomials", c6_norm_soundness());
  report(7, "metabolizer enumeration vs brute force, 30 forms",
         c7_metabolizers());
  report(8, "admissible covers: counts, subgroup presentations, homology",
         c8_covers());
  report(9, "homology inequality on 200 seeded instances", c9_thm23());
  std::cout << "criterion 10 (independent external reproduction): "
               "NOT RUN - requires third-party computations outside this "
               "repository\n";
  if (failures == 0) {
    std::cout << "all runnable criteria pass\n";
    return 0;
  }
  std::cout << failures << " criteria FAILED\n";
  return 1;
}
