#include <doctest.h>

#include "linkgate/presentation.hpp"

using namespace linkgate;

namespace {
// Abelianized exponent sum of gen in w.
int exp_sum(const Word& w, int gen) {
  int s = 0;
  for (int l : w) {
    if (l == gen + 1) ++s;
    if (l == -(gen + 1)) --s;
  }
  return s;
}
}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
}

TEST_CASE("wirtinger of the hopf link") {
  WirtingerResult w = wirtinger(builtin_link("hopf"));
  CHECK(w.pres.generators.size() == 2);
  CHECK(w.pres.relators.size() == 2);
  CHECK(w.per.meridians.size() == 2);
  CHECK(w.mmap.num_components == 2);
  // Each relator abelianizes to zero.
  for (const Word& r : w.pres.relators)
    for (int g = 0; g < 2; ++g) CHECK(exp_sum(r, g) == 0);
  // The longitude of component 0 abelianizes to the meridian of
  // component 1 (lk = 1) with zero self-exponent (0-framing).
  const Word& l0 = w.per.longitudes[0];
  CHECK(exp_sum(l0, w.per.meridians[0]) == 0);
  CHECK(exp_sum(l0, w.per.meridians[1]) == 1);
}

TEST_CASE("wirtinger of the trefoil") {
  WirtingerResult w = wirtinger(builtin_link("trefoil"));
  CHECK(w.pres.generators.size() == 3);
  CHECK(w.pres.relators.size() == 3);
  // The 0-framed longitude has zero total exponent.
  const Word& l = w.per.longitudes[0];
  CHECK(exp_sum(l, 0) + exp_sum(l, 1) + exp_sum(l, 2) == 0);
}

TEST_CASE("unlink and unknot presentations") {
  WirtingerResult w = wirtinger(builtin_link("unlink2"));
  CHECK(w.pres.generators.size() == 2);
  CHECK(w.pres.relators.empty());
  CHECK(w.per.longitudes[0] == Word{});

  WirtingerResult u = wirtinger(builtin_link("unknot"));
  CHECK(u.pres.generators.size() == 1);
}

TEST_CASE("abelianization") {
  // <x, y | x^2, y^3> abelianizes to Z/6 (invariant factors of diag(2,3)
  // are {1, 6}; the unit is dropped).
  GroupPresentation p;
  p.generators = {"x", "y"};
  p.relators = {{1, 1}, {2, 2, 2}};
  Abelianization ab = abelianize(p);
  CHECK(ab.invariant_factors == std::vector<Int>{6});

  GroupPresentation free2;
  free2.generators = {"x", "y"};
  Abelianization ab2 = abelianize(free2);
  CHECK(ab2.invariant_factors == std::vector<Int>{0, 0});
}

TEST_CASE("glued manifold group abelianizes to Z^3") {
  for (const char* name : {"hopf", "hopf4"}) {
    WirtingerResult w = wirtinger(builtin_link(name));
    GroupPresentation g = glue_ML(w);
    Abelianization ab = abelianize(g);
    CHECK(ab.invariant_factors == std::vector<Int>{0, 0, 0});
  }
}

TEST_CASE("glue_ML preconditions") {
  CHECK_THROWS(glue_ML(wirtinger(builtin_link("trefoil"))));
  CHECK_THROWS(glue_ML(wirtinger(builtin_link("solomon"))));  // lk = 2
}
