#pragma once

#include <string>
#include <vector>

#include "linkgate/intmatrix.hpp"
#include "linkgate/link_codec.hpp"

namespace linkgate {

// Group word: letters are ±(generator index + 1), freely reduced.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Meridian/longitude words per link component; meridians are single
// Wirtinger generators, longitudes are 0-framed.
struct PeripheralData {
  std::vector<int> meridians;  // generator index per component
  std::vector<Word> longitudes;
};

// Hurewicz images: generator index -> standard basis tuple in Z^mu.
struct MeridianMap {
  std::vector<int> component_of_generator;
  int num_components = 0;

  std::vector<Int> exponent_tuple(const Word& w) const;
};

struct WirtingerResult {
  GroupPresentation pres;
  PeripheralData per;
  MeridianMap mmap;
};

// One generator per arc (PD edges merged along over-strands), one relator
// per crossing, meridian_i = arc of the smallest edge of component i.
WirtingerResult wirtinger(const LinkDiagram& d);

// 0-framed longitude of one component (also available via wirtinger()).
Word longitude(const LinkDiagram& d, int component);

// pi_1 of the closed manifold obtained by splicing the Hopf exterior onto
// the boundary of a 2-component, lk=1 link exterior: adds one stable
// generator `s` with s mu_2 s^-1 = lambda_1, s lambda_2 s^-1 = mu_1, plus
// [mu_1, lambda_1]. Abelianization is Z^3.
GroupPresentation glue_ML(const WirtingerResult& w);

struct Abelianization {
  std::vector<Int> invariant_factors;  // units dropped; 0 denotes Z
  std::vector<Int> diagonal;           // SNF diagonal padded to #generators
  IntMatrix U;                         // coker coords: gen g -> column g of U
};

Abelianization abelianize(const GroupPresentation& p);

}  // namespace linkgate
