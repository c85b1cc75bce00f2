#include <doctest.h>

#include "linkgate/covers.hpp"

using namespace linkgate;

namespace {
std::vector<Int> ab_of(const GroupPresentation& p) {
  return abelianize(p).invariant_factors;
}
}  // namespace

TEST_CASE("admissible hom counts are p^(i+j)") {
  WirtingerResult w = wirtinger(builtin_link("hopf"));
  CHECK(admissible_homs(w, 2, 1, 1).size() == 4);
  CHECK(admissible_homs(w, 3, 1, 1).size() == 9);
  CHECK(admissible_homs(w, 2, 2, 1).size() == 8);
  CHECK(admissible_homs(w, 2, 1, 2).size() == 8);
}

TEST_CASE("hom images respect the meridian constraints") {
  WirtingerResult w = wirtinger(builtin_link("hopf4"));
  for (const CoveringData& c : admissible_homs(w, 2, 1, 1)) {
    int m1 = w.per.meridians[0], m2 = w.per.meridians[1];
    CHECK(c.hom[m1] == std::vector<Int>{1, 0});
    CHECK(c.hom[m2] == std::vector<Int>{0, 1});
    CHECK(c.index() == 4);
  }
}

TEST_CASE("reidemeister-schreier satisfies nielsen-schreier counts") {
  // For every admissible cover of index t over a presentation with n
  // generators and m relators, the rewritten presentation has
  // t(n-1)+1 generators and t*m relators.
  for (const char* name : {"hopf", "hopf4"}) {
    WirtingerResult w = wirtinger(builtin_link(name));
    for (const auto& pij : {std::tuple{2, 1, 1}, std::tuple{3, 1, 1}}) {
      auto [p, i, j] = pij;
      auto homs = admissible_homs(w, p, i, j);
      REQUIRE(!homs.empty());
      for (const CoveringData& c : homs) {
        GroupPresentation k = reidemeister_schreier(c);
        long long t = c.index().convert_to<long long>();
        long long n = static_cast<long long>(c.base.generators.size());
        long long m = static_cast<long long>(c.base.relators.size());
        CHECK(static_cast<long long>(k.generators.size()) == t * (n - 1) + 1);
        CHECK(static_cast<long long>(k.relators.size()) == t * m);
      }
    }
  }
}

TEST_CASE("cover homology of the hopf splice is Z^3") {
  // The glued manifold for the Hopf link is the 3-torus; all finite
  // abelian covers are again 3-tori.
  WirtingerResult w = wirtinger(builtin_link("hopf"));
  for (const auto& pij : {std::pair{2, 1}, std::pair{3, 1}}) {
    for (const CoveringData& c : admissible_homs(w, pij.first, 1, pij.second)) {
      CHECK(cover_h1(c) == std::vector<Int>{0, 0, 0});
    }
  }
}

TEST_CASE("free-group sanity: index-2 subgroup of F2 is F3") {
  GroupPresentation f2;
  f2.generators = {"x", "y"};
  CoveringData c;
  c.base = f2;
  c.target_factors = {2};
  c.hom = {{1}, {0}};
  GroupPresentation k = reidemeister_schreier(c);
  CHECK(k.generators.size() == 3);
  CHECK(k.relators.empty());
  CHECK(ab_of(k) == std::vector<Int>{0, 0, 0});
}
