#include "linkgate/link_codec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "linkgate/errors.hpp"

namespace linkgate {
namespace {

constexpr int kMaxLabel = 1 << 20;

struct Occurrence {
  int crossing;
  int slot;  // 0=a 1=b 2=c 3=d
};

// Resolves over-strand directions, orients edges, and splits the diagram
// into components. Throws ParseError on inconsistent data.
void analyze(LinkDiagram& d) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    for (int s = 0; s < 4; ++s) {
      int label = d.crossings[c].slot(s);
      if (label < 1 || label > kMaxLabel)
        throw ParseError("bad arc label at crossing " + std::to_string(c));
      occ[label].push_back({c, s});
    }
  for (int l : d.loops) {
    if (l < 1 || l > kMaxLabel) throw ParseError("bad loop label");
    if (occ.count(l) || std::count(d.loops.begin(), d.loops.end(), l) != 1)
      throw ParseError("loop label " + std::to_string(l) + " reused");
  }
  for (const auto& [label, v] : occ)
    if (v.size() != 2)
      throw ParseError("arc " + std::to_string(label) + " appears " +
                       std::to_string(v.size()) + " times, expected 2");

  // Role of a slot: +1 incoming, -1 outgoing, 0 unknown (over strand with
  // unresolved direction). over_d_to_b: -1 unknown, 1 yes, 0 no.
  d.over_d_to_b.assign(d.crossings.size(), -1);
  auto role = [&](const Occurrence& o) -> int {
    if (o.slot == 0) return 1;
    if (o.slot == 2) return -1;
    int dir = d.over_d_to_b[o.crossing];
    if (dir < 0) return 0;
    if (o.slot == 1) return dir ? -1 : 1;  // b is out when over runs d->b
    return dir ? 1 : -1;                   // d
  };

  std::vector<int> work;
  for (const auto& [label, v] : occ) work.push_back(label);
  auto set_dir = [&](int crossing, int dir, std::vector<int>& queue) {
    if (d.over_d_to_b[crossing] == dir) return;
    if (d.over_d_to_b[crossing] >= 0)
      throw ParseError("inconsistent orientation at crossing " +
                       std::to_string(crossing));
    d.over_d_to_b[crossing] = dir;
    queue.push_back(d.crossings[crossing].b);
    queue.push_back(d.crossings[crossing].d);
  };
  auto propagate = [&](std::vector<int> queue) {
    while (!queue.empty()) {
      int label = queue.back();
      queue.pop_back();
      const auto& v = occ[label];
      int r0 = role(v[0]), r1 = role(v[1]);
      if (r0 != 0 && r1 != 0) {
        if (r0 + r1 != 0)
          throw ParseError("inconsistent orientation at arc " +
                           std::to_string(label));
        continue;
      }
      if (r0 == 0 && r1 == 0) continue;
      const Occurrence& known = r0 != 0 ? v[0] : v[1];
      const Occurrence& open = r0 != 0 ? v[1] : v[0];
      int need = -role(known);  // the other end takes the opposite role
      // open.slot is 1 (b) or 3 (d); choose the direction giving `need`.
      int dir = open.slot == 1 ? (need == -1 ? 1 : 0) : (need == 1 ? 1 : 0);
      set_dir(open.crossing, dir, queue);
    }
  };
  propagate(work);
  // Components that never pass under leave their crossings undetermined;
  // orient those over-strands b -> d by convention.
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    if (d.over_d_to_b[c] < 0) {
      std::vector<int> queue;
      set_dir(c, 0, queue);
      propagate(queue);
    }

  d.sign.assign(d.crossings.size(), 0);
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    d.sign[c] = d.over_d_to_b[c] ? 1 : -1;

  // succ[label]: the edge continuing the strand after it enters a crossing.
  int max_label = 0;
  for (const auto& [label, v] : occ) max_label = std::max(max_label, label);
  for (int l : d.loops) max_label = std::max(max_label, l);
  d.edge_succ.assign(max_label + 1, -1);
  for (const auto& [label, v] : occ)
    for (const auto& o : v) {
      if (role(o) != 1) continue;
      const Crossing& x = d.crossings[o.crossing];
      int nxt = o.slot == 0 ? x.c : (o.slot == 1 ? x.d : x.b);
      if (d.edge_succ[label] != -1)
        throw ParseError("arc " + std::to_string(label) +
                         " has two successors");
      d.edge_succ[label] = nxt;
    }
  for (const auto& [label, v] : occ)
    if (d.edge_succ[label] == -1)
      throw ParseError("arc " + std::to_string(label) + " has no successor");
  for (int l : d.loops) d.edge_succ[l] = l;

  // Components: cycles of succ, ordered by smallest label.
  d.edge_component.assign(max_label + 1, -1);
  std::vector<int> firsts;
  std::vector<int> labels;
  for (const auto& [label, v] : occ) labels.push_back(label);
  for (int l : d.loops) labels.push_back(l);
  std::sort(labels.begin(), labels.end());
  for (int start : labels) {
    if (d.edge_component[start] != -1) continue;
    int id = static_cast<int>(firsts.size());
    firsts.push_back(start);
    int e = start;
    do {
      d.edge_component[e] = id;
      e = d.edge_succ[e];
    } while (e != start);
  }
  d.component_first = firsts;
  d.num_components = static_cast<int>(firsts.size());
  if (d.num_components == 0) throw ParseError("empty PD");
}

}  // namespace

bool LinkDiagram::edge_is_loop(int label) const {
  return std::find(loops.begin(), loops.end(), label) != loops.end();
}

LinkDiagram parse_pd(const std::string& text) {
  LinkDiagram d;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto parse_ints = [&](int where) {
    std::vector<int> out;
    if (i >= text.size() || text[i] != '[')
      throw ParseError("expected '[' at token " + std::to_string(where));
    ++i;
    for (;;) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start)
        throw ParseError("expected arc label at token " +
                         std::to_string(where));
      out.push_back(std::stoi(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        return out;
      }
      throw ParseError("expected ',' or ']' at token " +
                       std::to_string(where));
    }
  };
  int token = 0;
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    char kind = text[i];
    ++i;
    ++token;
    if (kind == 'X') {
      auto v = parse_ints(token);
      if (v.size() != 4) throw ParseError("crossing needs 4 arcs");
      d.crossings.push_back({v[0], v[1], v[2], v[3]});
    } else if (kind == 'O') {
      auto v = parse_ints(token);
      if (v.size() != 1) throw ParseError("O token needs 1 label");
      d.loops.push_back(v[0]);
    } else {
      throw ParseError(std::string("unexpected character '") + kind +
                       "' at token " + std::to_string(token));
    }
  }
  if (d.crossings.empty() && d.loops.empty()) throw ParseError("empty PD");
  analyze(d);
  return d;
}

LinkDiagram from_braid(const BraidWord& b) {
  if (b.strands < 1) throw ParseError("braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strands)
      throw ParseError("braid letter out of range: " + std::to_string(l));

  LinkDiagram d;
  std::vector<int> current(b.strands + 1);
  for (int p = 1; p <= b.strands; ++p) current[p] = p;
  int counter = b.strands;
  for (int l : b.letters) {
    int i = std::abs(l);
    int u = current[i], v = current[i + 1];
    int w = ++counter, x = ++counter;
    if (l > 0)
      d.crossings.push_back({v, x, w, u});  // strand i passes over
    else
      d.crossings.push_back({u, v, x, w});
    current[i] = w;
    current[i + 1] = x;
  }
  // Close the braid: fuse each strand's last edge with its first.
  std::map<int, int> fuse;
  for (int p = 1; p <= b.strands; ++p) fuse[current[p]] = p;
  std::vector<bool> touched(b.strands + 1, false);
  for (auto& x : d.crossings)
    for (int* f : {&x.a, &x.b, &x.c, &x.d}) {
      auto it = fuse.find(*f);
      if (it != fuse.end()) *f = it->second;
      if (*f <= b.strands) touched[*f] = true;
    }
  // Compact labels and emit untouched strands as 0-crossing components.
  std::map<int, int> remap;
  for (const auto& x : d.crossings)
    for (int f : {x.a, x.b, x.c, x.d}) remap.emplace(f, 0);
  int next = 0;
  for (auto& [old_label, fresh] : remap) fresh = ++next;
  for (auto& x : d.crossings)
    for (int* f : {&x.a, &x.b, &x.c, &x.d}) *f = remap[*f];
  for (int p = 1; p <= b.strands; ++p)
    if (!touched[p]) d.loops.push_back(++next);
  if (d.crossings.empty() && d.loops.empty()) throw ParseError("empty PD");
  analyze(d);
  return d;
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  in >> head;
  if (head != "BR") throw ParseError("braid text must start with 'BR'");
  std::string strands_tok;
  in >> strands_tok;
  if (strands_tok.empty() || strands_tok.back() != ':')
    throw ParseError("expected '<strands>:' after BR");
  BraidWord b;
  try {
    b.strands = std::stoi(strands_tok.substr(0, strands_tok.size() - 1));
  } catch (const std::exception&) {
    throw ParseError("bad strand count in braid text");
  }
  if (b.strands < 1) throw ParseError("braid needs at least one strand");
  std::string tok;
  while (in >> tok) {
    try {
      b.letters.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
  }
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strands)
      throw ParseError("braid letter out of range: " + std::to_string(l));
  return b;
}

std::string print_pd(const LinkDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : d.crossings) {
    if (!first) out << ' ';
    out << "X[" << x.a << ',' << x.b << ',' << x.c << ',' << x.d << ']';
    first = false;
  }
  for (int l : d.loops) {
    if (!first) out << ' ';
    out << "O[" << l << ']';
    first = false;
  }
  return out.str();
}

IntMatrix linking_matrix(const LinkDiagram& d) {
  IntMatrix m(d.num_components, d.num_components);
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    int i = d.edge_component[d.crossings[c].a];
    int j = d.edge_component[d.crossings[c].b];
    if (i == j) continue;
    m.at(i, j) += d.sign[c];
    m.at(j, i) += d.sign[c];
  }
  for (auto& v : m.a) v /= 2;
  return m;
}

int self_writhe(const LinkDiagram& d, int component) {
  int w = 0;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    if (d.edge_component[d.crossings[c].a] == component &&
        d.edge_component[d.crossings[c].b] == component)
      w += d.sign[c];
  return w;
}

LinkDiagram builtin_link(const std::string& name) {
  if (name == "hopf") return parse_pd("X[1,3,2,4] X[3,1,4,2]");
  if (name == "hopf4") return from_braid({2, {1, 1, 1, -1}});
  if (name == "unlink2") return parse_pd("O[1] O[2]");
  if (name == "trefoil") return from_braid({2, {1, 1, 1}});
  if (name == "solomon") return from_braid({2, {1, 1, 1, 1}});
  if (name == "unknot") return parse_pd("O[1]");
  throw ParseError("unknown builtin link: " + name);
}

std::vector<std::string> builtin_names() {
  return {"hopf", "hopf4", "unlink2", "trefoil", "solomon", "unknot"};
}

}  // namespace linkgate
