#include <doctest.h>

#include "linkgate/errors.hpp"
#include "linkgate/link_codec.hpp"

using namespace linkgate;

TEST_CASE("hopf pd code") {
  LinkDiagram d = parse_pd("X[1,3,2,4] X[3,1,4,2]");
  CHECK(d.crossings.size() == 2);
  CHECK(d.num_components == 2);
  CHECK(d.sign == std::vector<int>{1, 1});
  IntMatrix lk = linking_matrix(d);
  CHECK(lk.at(0, 1) == 1);
  CHECK(lk.at(1, 0) == 1);
  CHECK(lk.at(0, 0) == 0);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_pd(""), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,3,2,4]"), ParseError);  // labels not paired
  CHECK_THROWS_AS(parse_braid("BR x: 1"), ParseError);
  CHECK_THROWS_AS(parse_braid("BR 2: 5"), ParseError);  // letter out of range
}

TEST_CASE("print pd round-trip") {
  for (const std::string& name : builtin_names()) {
    LinkDiagram d = builtin_link(name);
    LinkDiagram d2 = parse_pd(print_pd(d));
    CHECK(d2.num_components == d.num_components);
    CHECK(d2.sign == d.sign);
    CHECK(linking_matrix(d2) == linking_matrix(d));
  }
}

TEST_CASE("braid closures") {
  // sigma_1^2 closes to the positive Hopf link.
  LinkDiagram hopf = from_braid(parse_braid("BR 2: 1 1"));
  CHECK(hopf.num_components == 2);
  CHECK(linking_matrix(hopf).at(0, 1) == 1);

  // sigma_1^-2 closes to the negative Hopf link.
  LinkDiagram neg = from_braid(parse_braid("BR 2: -1 -1"));
  CHECK(linking_matrix(neg).at(0, 1) == -1);

  // sigma_1^3 closes to the trefoil: one component, writhe 3.
  LinkDiagram tre = from_braid(parse_braid("BR 2: 1 1 1"));
  CHECK(tre.num_components == 1);
  CHECK(self_writhe(tre, 0) == 3);

  // An untouched strand closes to a 0-crossing loop.
  LinkDiagram d = from_braid(parse_braid("BR 3: 1 1"));
  CHECK(d.num_components == 3);
  CHECK(d.loops.size() == 1);
}

TEST_CASE("builtins") {
  CHECK(builtin_link("unlink2").num_components == 2);
  CHECK(builtin_link("unlink2").crossings.empty());
  CHECK(builtin_link("unknot").num_components == 1);
  CHECK(linking_matrix(builtin_link("solomon")).at(0, 1) == 2);
  CHECK(linking_matrix(builtin_link("hopf4")).at(0, 1) == 1);
  CHECK_THROWS_AS(builtin_link("nope"), ParseError);
}

TEST_CASE("edge successor walks each component") {
  LinkDiagram d = builtin_link("trefoil");
  // Following edge_succ from the component's first edge visits every edge
  // of that component and returns.
  int start = d.component_first[0];
  int cur = start, steps = 0;
  do {
    cur = d.edge_succ[cur];
    ++steps;
    REQUIRE(steps <= 100);
  } while (cur != start);
  CHECK(steps == 2 * int(d.crossings.size()));
}
