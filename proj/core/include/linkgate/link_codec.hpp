#pragma once

#include <string>
#include <vector>

#include "linkgate/intmatrix.hpp"

namespace linkgate {

// Oriented PD crossing X[a,b,c,d]: arc labels counterclockwise starting at
// the incoming under-strand, so a -> c is the under-strand.
struct Crossing {
  int a, b, c, d;
  int slot(int k) const { return k == 0 ? a : k == 1 ? b : k == 2 ? c : d; }
};

// Validated, oriented link diagram. Edge labels are the positive integers
// appearing in the PD text; `loops` holds the labels of 0-crossing
// components (explicit O[c] tokens).
struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> loops;
  std::vector<int> sign;             // per crossing, +1 or -1
  std::vector<int> over_d_to_b;      // per crossing: over-strand runs d->b
  int num_components = 0;
  std::vector<int> edge_component;   // by edge label; -1 for unused labels
  std::vector<int> edge_succ;        // next edge along the orientation
  std::vector<int> component_first;  // smallest edge/loop label per component

  bool edge_is_loop(int label) const;
};

// Braid word; sigma_i is +i, its inverse -i.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// Grammar: whitespace-separated `X[a,b,c,d]` and `O[c]` tokens.
LinkDiagram parse_pd(const std::string& text);

LinkDiagram from_braid(const BraidWord& b);

// Grammar: `BR <strands>: <±i> <±i> ...`.
BraidWord parse_braid(const std::string& text);

std::string print_pd(const LinkDiagram& d);

// mu x mu, symmetric, zero diagonal; (i,j) is half the signed count of
// crossings between components i and j.
IntMatrix linking_matrix(const LinkDiagram& d);

// Sum of signs of self-crossings of one component (writhe contribution).
int self_writhe(const LinkDiagram& d, int component);

// Built-in corpus: hopf, hopf4, unlink2, trefoil, solomon, unknot.
LinkDiagram builtin_link(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace linkgate
