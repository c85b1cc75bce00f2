#include <doctest.h>

#include <random>

#include "linkgate/linkforms.hpp"

using namespace linkgate;

namespace {
IntMatrix make(int n, std::vector<long long> v) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Int(v[std::size_t(i) * n + j]);
  return m;
}
}  // namespace

TEST_CASE("form from a 1x1 presentation") {
  FiniteLinkingForm f = from_presentation(make(1, {9}));
  CHECK(f.factors == std::vector<Int>{9});
  CHECK(f.order() == 9);
  // b(1,1) = 1/9 up to sign convention, so 9 * b(1,1) is an integer and
  // b(3,3) = 9/9 = 0 mod 1.
  Rat b11 = f.pairing({1}, {1});
  CHECK(b11 * 9 == Rat((b11 * 9).convert_to<Int>()));
  CHECK(f.pairing({3}, {3}) == Rat(0));
}

TEST_CASE("metabolizers of Z/9 with b(1,1)=1/9") {
  FiniteLinkingForm f = from_presentation(make(1, {9}));
  auto mets = metabolizers(f);
  REQUIRE(mets.size() == 1);
  CHECK(mets[0].order() == 3);
  CHECK(mets == metabolizers_brute(f));
}

TEST_CASE("no metabolizer on non-square order") {
  FiniteLinkingForm f = from_presentation(make(1, {3}));
  CHECK(metabolizers(f).empty());
  CHECK(metabolizers_brute(f).empty());
}

TEST_CASE("hyperbolic form has multiple metabolizers") {
  // Gram [[0, 1/3], [1/3, 0]] on (Z/3)^2: presentation [[0,3],[3,0]].
  FiniteLinkingForm f = from_presentation(make(2, {0, 3, 3, 0}));
  auto mets = metabolizers(f);
  auto brute = metabolizers_brute(f);
  CHECK(mets == brute);
  CHECK(mets.size() >= 2);
  for (const Subgroup& p : mets) {
    CHECK(p.order() == 3);
    CHECK(orthogonal(f, p) == p);
  }
}

TEST_CASE("metabolizers match brute force on random forms") {
  std::mt19937_64 rng(0xf0121);
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
    CHECK(metabolizers(f) == metabolizers_brute(f));
    ++done;
  }
}

TEST_CASE("orthogonal complement sizes") {
  FiniteLinkingForm f = from_presentation(make(1, {4}));
  Subgroup whole = subgroup_closure(f.factors, {{1}});
  Subgroup zero = subgroup_closure(f.factors, {});
  CHECK(orthogonal(f, zero).order() == 4);
  // |P| * |P^perp| = |G| for nonsingular forms.
  CHECK(orthogonal(f, whole).order() * whole.order() == f.order());
}

TEST_CASE("characters vanishing on a metabolizer") {
  FiniteLinkingForm f = from_presentation(make(1, {9}));
  Subgroup p = metabolizers(f)[0];
  // Characters Z/9 -> Z/9 killing 3Z/9: those are multiples of 3; there
  // are 3 of them (including the trivial one).
  CHECK(characters_vanishing(f.factors, p, 3, 2).size() == 3);
}

TEST_CASE("witt equivalence") {
  FiniteLinkingForm a = from_presentation(make(1, {9}));
  FiniteLinkingForm b = from_presentation(make(1, {9}));
  CHECK(witt_equivalent(a, b));
  FiniteLinkingForm c = from_presentation(make(1, {3}));
  CHECK_FALSE(witt_equivalent(a, c));
}

TEST_CASE("neutral certificate verification") {
  // Hyperbolic rank-2 gram over the 1-variable ring: [[0,1],[1,0]],
  // submodule generated by e1.
  auto one = parse_poly("1", 1);
  auto zero = LaurentPoly(1);
  std::vector<std::vector<PolyFraction>> gram = {
      {{zero, one}, {one, one}}, {{one, one}, {zero, one}}};
  std::vector<std::vector<LaurentPoly>> gens = {{one, zero}};
  CHECK(verify_neutral_certificate(gram, gens));

  // Wrong half-rank.
  CHECK_FALSE(verify_neutral_certificate(gram, {}));
  // Generator that does not pair to zero with itself.
  std::vector<std::vector<PolyFraction>> diag = {
      {{one, one}, {zero, one}}, {{zero, one}, {one, one}}};
  CHECK_FALSE(verify_neutral_certificate(diag, gens));
}
