#include "linkgate/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "linkgate/errors.hpp"

namespace linkgate {

Word free_reduce(Word w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

std::vector<Int> MeridianMap::exponent_tuple(const Word& w) const {
  std::vector<Int> t(num_components, 0);
  for (int l : w) {
    int g = std::abs(l) - 1;
    t[component_of_generator[g]] += l > 0 ? 1 : -1;
  }
  return t;
}

namespace {

struct ArcTable {
  std::map<int, int> edge_to_arc;         // edge label -> generator index
  std::vector<int> arc_component;
};

// Union PD edges along over-strands; arcs (= Wirtinger generators) are
// numbered by their smallest edge label.
ArcTable build_arcs(const LinkDiagram& d) {
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < static_cast<int>(d.edge_component.size()); ++e)
    if (d.edge_component[e] >= 0) parent[e] = e;
  for (const auto& x : d.crossings) {
    int rb = find(x.b), rd = find(x.d);
    parent[std::max(rb, rd)] = std::min(rb, rd);
  }
  ArcTable t;
  for (auto& [e, p] : parent) {
    int r = find(e);
    if (!t.edge_to_arc.count(r)) {
      t.edge_to_arc[r] = static_cast<int>(t.arc_component.size());
      t.arc_component.push_back(d.edge_component[r]);
    }
  }
  for (auto& [e, p] : parent) t.edge_to_arc[e] = t.edge_to_arc[find(e)];
  return t;
}

}  // namespace

WirtingerResult wirtinger(const LinkDiagram& d) {
  ArcTable arcs = build_arcs(d);
  WirtingerResult r;
  r.mmap.num_components = d.num_components;
  r.mmap.component_of_generator = arcs.arc_component;
  for (std::size_t g = 0; g < arcs.arc_component.size(); ++g)
    r.pres.generators.push_back("x" + std::to_string(g + 1));

  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    const Crossing& x = d.crossings[c];
    int w = arcs.edge_to_arc.at(x.b) + 1;
    int xa = arcs.edge_to_arc.at(x.a) + 1;
    int xc = arcs.edge_to_arc.at(x.c) + 1;
    int e = d.sign[c];
    // x_c = w^e x_a w^-e
    Word rel = {e * w, xa, -e * w, -xc};
    r.pres.relators.push_back(free_reduce(rel));
  }

  for (int i = 0; i < d.num_components; ++i) {
    r.per.meridians.push_back(arcs.edge_to_arc.at(d.component_first[i]));
    r.per.longitudes.push_back(longitude(d, i));
  }
  return r;
}

Word longitude(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.num_components)
    throw PreconditionError("longitude: no such component");
  int first = d.component_first[component];
  if (d.edge_is_loop(first)) return {};

  ArcTable arcs = build_arcs(d);
  // Where each edge enters a crossing, and through which slot.
  std::map<int, std::pair<int, int>> entry;  // edge -> (crossing, slot)
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    const Crossing& x = d.crossings[c];
    entry[x.a] = {c, 0};
    if (d.over_d_to_b[c])
      entry[x.d] = {c, 3};
    else
      entry[x.b] = {c, 1};
  }
  Word w;
  int e = first;
  do {
    auto [c, slot] = entry.at(e);
    if (slot == 0) {
      int over = arcs.edge_to_arc.at(d.crossings[c].b) + 1;
      w.push_back(d.sign[c] * over);
    }
    e = d.edge_succ[e];
  } while (e != first);
  int sw = self_writhe(d, component);
  int mu = arcs.edge_to_arc.at(first) + 1;
  for (int k = 0; k < std::abs(sw); ++k) w.push_back(sw > 0 ? -mu : mu);
  return free_reduce(w);
}

GroupPresentation glue_ML(const WirtingerResult& w) {
  if (w.mmap.num_components != 2)
    throw PreconditionError("glue_ML: link must have 2 components");
  std::vector<Int> l1 = w.mmap.exponent_tuple(w.per.longitudes[0]);
  if (l1[1] != 1)
    throw PreconditionError("glue_ML: linking number must be 1");

  GroupPresentation p = w.pres;
  int s = static_cast<int>(p.generators.size()) + 1;
  p.generators.push_back("s");
  int m1 = w.per.meridians[0] + 1;
  int m2 = w.per.meridians[1] + 1;
  const Word& la1 = w.per.longitudes[0];
  const Word& la2 = w.per.longitudes[1];

  Word c1 = {m1};  // [mu_1, lambda_1]
  c1.insert(c1.end(), la1.begin(), la1.end());
  c1.push_back(-m1);
  Word la1_inv = inverse_word(la1);
  c1.insert(c1.end(), la1_inv.begin(), la1_inv.end());
  p.relators.push_back(free_reduce(c1));

  Word c2 = {s, m2, -s};  // s mu_2 s^-1 lambda_1^-1
  c2.insert(c2.end(), la1_inv.begin(), la1_inv.end());
  p.relators.push_back(free_reduce(c2));

  Word c3 = {s};  // s lambda_2 s^-1 mu_1^-1
  c3.insert(c3.end(), la2.begin(), la2.end());
  c3.push_back(-s);
  c3.push_back(-m1);
  p.relators.push_back(free_reduce(c3));
  return p;
}

Abelianization abelianize(const GroupPresentation& p) {
  int g = static_cast<int>(p.generators.size());
  int r = static_cast<int>(p.relators.size());
  IntMatrix m(g, std::max(r, 1));
  for (int j = 0; j < r; ++j)
    for (int l : p.relators[j]) m.at(std::abs(l) - 1, j) += l > 0 ? 1 : -1;

  SmithResult s = smith_normal_form(m);
  Abelianization out;
  out.U = s.U;
  out.diagonal.assign(g, 0);
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size() && i < out.diagonal.size(); ++i)
    out.diagonal[i] = diag[i];
  for (const Int& d : out.diagonal)
    if (d != 1) out.invariant_factors.push_back(d);
  // Nonzero factors first, zeros (free rank) last.
  std::stable_sort(out.invariant_factors.begin(),
                   out.invariant_factors.end(),
                   [](const Int& a, const Int& b) {
                     return (a != 0) && (b == 0 || a < b);
                   });
  return out;
}

}  // namespace linkgate
