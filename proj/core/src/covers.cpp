#include "linkgate/covers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linkgate/errors.hpp"
#include "linkgate/intmatrix.hpp"

namespace linkgate {
namespace {

using Elem = std::vector<Int>;

Elem reduce_mod(Elem e, const std::vector<Int>& factors) {
  for (std::size_t k = 0; k < e.size(); ++k) {
    e[k] %= factors[k];
    if (e[k] < 0) e[k] += factors[k];
  }
  return e;
}

Elem add(const Elem& a, const Elem& b, const std::vector<Int>& factors) {
  Elem r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return reduce_mod(std::move(r), factors);
}

Elem neg(const Elem& a, const std::vector<Int>& factors) {
  Elem r = a;
  for (auto& x : r) x = -x;
  return reduce_mod(std::move(r), factors);
}

std::vector<Elem> all_elements(const std::vector<Int>& factors) {
  std::vector<Elem> out{Elem(factors.size(), 0)};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<Elem> next;
    for (const Elem& e : out)
      for (Int v = 0; v < factors[k]; ++v) {
        Elem f = e;
        f[k] = v;
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

Int pow_int(const Int& p, int e) {
  Int r = 1;
  for (int k = 0; k < e; ++k) r *= p;
  return r;
}

}  // namespace

Int CoveringData::index() const {
  std::set<Elem> image{Elem(target_factors.size(), 0)};
  for (;;) {
    std::set<Elem> next = image;
    for (const Elem& e : image)
      for (const Elem& g : hom) next.insert(add(e, g, target_factors));
    if (next.size() == image.size()) break;
    image = std::move(next);
  }
  return Int(image.size());
}

std::vector<CoveringData> admissible_homs(const GroupPresentation& glued,
                                          int meridian_gen1,
                                          int meridian_gen2, const Int& p,
                                          int i, int j) {
  Abelianization ab = abelianize(glued);
  std::vector<int> free_coords;
  for (std::size_t k = 0; k < ab.diagonal.size(); ++k)
    if (ab.diagonal[k] == 0) free_coords.push_back(static_cast<int>(k));
  if (free_coords.size() != 3 ||
      ab.invariant_factors != std::vector<Int>{0, 0, 0})
    throw PreconditionError("admissible_homs: abelianization is not Z^3");

  std::vector<Int> factors{pow_int(p, i), pow_int(p, j)};
  auto coords = [&](int gen) {
    Elem u(3);
    for (int k = 0; k < 3; ++k) u[k] = ab.U.at(free_coords[k], gen);
    return u;
  };
  Elem u1 = coords(meridian_gen1), u2 = coords(meridian_gen2);

  auto apply = [&](const std::vector<Elem>& basis_img, const Elem& u) {
    Elem r(2, 0);
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 2; ++c) r[c] += u[k] * basis_img[k][c];
    return reduce_mod(std::move(r), factors);
  };
  Elem e1 = reduce_mod({1, 0}, factors);
  Elem e2 = reduce_mod({0, 1}, factors);

  std::vector<CoveringData> out;
  std::vector<Elem> elems = all_elements(factors);
  for (const Elem& v1 : elems)
    for (const Elem& v2 : elems)
      for (const Elem& v3 : elems) {
        std::vector<Elem> basis_img{v1, v2, v3};
        if (apply(basis_img, u1) != e1 || apply(basis_img, u2) != e2)
          continue;
        CoveringData c;
        c.base = glued;
        c.target_factors = factors;
        for (int g = 0; g < static_cast<int>(glued.generators.size()); ++g)
          c.hom.push_back(apply(basis_img, coords(g)));
        out.push_back(std::move(c));
      }
  return out;
}

std::vector<CoveringData> admissible_homs(const WirtingerResult& w,
                                          const Int& p, int i, int j) {
  GroupPresentation glued = glue_ML(w);
  return admissible_homs(glued, w.per.meridians[0], w.per.meridians[1], p,
                         i, j);
}

GroupPresentation reidemeister_schreier(const CoveringData& c) {
  const auto& factors = c.target_factors;
  int n = static_cast<int>(c.base.generators.size());
  for (const Word& r : c.base.relators) {
    Elem img(factors.size(), 0);
    for (int l : r) {
      const Elem& g = c.hom[std::abs(l) - 1];
      img = add(img, l > 0 ? g : neg(g, factors), factors);
    }
    if (img != Elem(factors.size(), 0))
      throw PreconditionError(
          "reidemeister_schreier: hom not well defined on relators");
  }

  // Breadth-first coset enumeration over the image subgroup.
  std::map<Elem, int> coset_id;
  std::vector<Elem> cosets;
  std::set<std::pair<int, int>> tree;  // (coset, generator) tree edges
  Elem id0(factors.size(), 0);
  coset_id[id0] = 0;
  cosets.push_back(id0);
  for (std::size_t head = 0; head < cosets.size(); ++head) {
    Elem cur = cosets[head];
    for (int g = 0; g < n; ++g)
      for (int dir : {1, -1}) {
        Elem step = dir > 0 ? c.hom[g] : neg(c.hom[g], factors);
        Elem nxt = add(cur, step, factors);
        if (coset_id.count(nxt)) continue;
        coset_id[nxt] = static_cast<int>(cosets.size());
        cosets.push_back(nxt);
        // The positive-direction Schreier pair along this edge is trivial.
        tree.insert(dir > 0 ? std::make_pair(static_cast<int>(head), g)
                            : std::make_pair(coset_id[nxt], g));
      }
  }
  int t = static_cast<int>(cosets.size());

  GroupPresentation out;
  std::map<std::pair<int, int>, int> gen_of;  // (coset, generator) -> index
  for (int r = 0; r < t; ++r)
    for (int g = 0; g < n; ++g) {
      if (tree.count({r, g})) continue;
      gen_of[{r, g}] = static_cast<int>(out.generators.size());
      out.generators.push_back(c.base.generators[g] + "_" +
                               std::to_string(r));
    }

  for (int r0 = 0; r0 < t; ++r0)
    for (const Word& w : c.base.relators) {
      Word rewritten;
      Elem cur = cosets[r0];
      for (int l : w) {
        int g = std::abs(l) - 1;
        if (l > 0) {
          auto it = gen_of.find({coset_id[cur], g});
          if (it != gen_of.end()) rewritten.push_back(it->second + 1);
          cur = add(cur, c.hom[g], factors);
        } else {
          cur = add(cur, neg(c.hom[g], factors), factors);
          auto it = gen_of.find({coset_id[cur], g});
          if (it != gen_of.end()) rewritten.push_back(-(it->second + 1));
        }
      }
      out.relators.push_back(free_reduce(rewritten));
    }
  return out;
}

std::vector<Int> cover_h1(const CoveringData& c) {
  return abelianize(reidemeister_schreier(c)).invariant_factors;
}

}  // namespace linkgate
