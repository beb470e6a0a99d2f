#pragma once

#include <map>
#include <optional>

#include "blockfun/group.hpp"

namespace blockfun {

inline constexpr int kMaxAutOrder = 256;

/// Automorphism of a group, stored as the image array.
struct Automorphism {
  const Group* parent = nullptr;
  std::vector<int> img;

  int operator()(int x) const { return img[x]; }
};

inline bool operator==(const Automorphism& a, const Automorphism& b) {
  return a.img == b.img;
}
inline bool operator<(const Automorphism& a, const Automorphism& b) {
  return a.img < b.img;
}

inline Automorphism identity_automorphism(const Group& g) {
  Automorphism a{&g, std::vector<int>(g.order)};
  std::iota(a.img.begin(), a.img.end(), 0);
  return a;
}

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c{a.parent, std::vector<int>(a.img.size())};
  for (size_t x = 0; x < a.img.size(); ++x) c.img[x] = a.img[b.img[x]];
  return c;
}

inline Automorphism inverse(const Automorphism& a) {
  Automorphism c{a.parent, std::vector<int>(a.img.size())};
  for (size_t x = 0; x < a.img.size(); ++x) c.img[a.img[x]] = int(x);
  return c;
}

inline Automorphism conjugation_aut(const Group& g, int x) {
  Automorphism a{&g, std::vector<int>(g.order)};
  for (int y = 0; y < g.order; ++y) a.img[y] = g.conj(x, y);
  return a;
}

inline bool is_automorphism(const Group& g, const std::vector<int>& img) {
  if (int(img.size()) != g.order || img[0] != 0) return false;
  std::vector<char> hit(g.order, 0);
  for (int v : img) {
    if (v < 0 || v >= g.order || hit[v]) return false;
    hit[v] = 1;
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (img[g.mul(a, b)] != g.mul(img[a], img[b])) return false;
  return true;
}

namespace detail {

// BFS expressions of every element as (previous element) * (generator).
struct WordTree {
  std::vector<int> via_elem;  // -1 for identity
  std::vector<int> via_gen;   // generator index
  std::vector<int> bfs_order;
};

inline WordTree word_tree(const Group& g) {
  WordTree w;
  w.via_elem.assign(g.order, -1);
  w.via_gen.assign(g.order, -1);
  std::vector<char> seen(g.order, 0);
  seen[0] = 1;
  w.bfs_order.push_back(0);
  for (size_t i = 0; i < w.bfs_order.size(); ++i) {
    int x = w.bfs_order[i];
    for (size_t k = 0; k < g.generators.size(); ++k) {
      int y = g.mul(x, g.generators[k]);
      if (!seen[y]) {
        seen[y] = 1;
        w.via_elem[y] = x;
        w.via_gen[y] = int(k);
        w.bfs_order.push_back(y);
      }
    }
  }
  return w;
}

// Extends generator images along the word tree and verifies that the result
// is a bijective homomorphism. Checking img[x*s] == img[x]*img[s] for all x
// and generators s suffices, by induction on word length.
inline std::optional<std::vector<int>> extend_images(const Group& g,
                                                     const WordTree& w,
                                                     const std::vector<int>& gen_img) {
  std::vector<int> img(g.order, -1);
  img[0] = 0;
  for (int x : w.bfs_order) {
    if (x == 0) continue;
    img[x] = g.mul(img[w.via_elem[x]], gen_img[w.via_gen[x]]);
  }
  std::vector<char> hit(g.order, 0);
  for (int v : img) {
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  for (int x = 0; x < g.order; ++x)
    for (size_t k = 0; k < g.generators.size(); ++k)
      if (img[g.mul(x, g.generators[k])] != g.mul(img[x], gen_img[k]))
        return std::nullopt;
  return img;
}

}  // namespace detail

/// Extension of prescribed generator images to a full automorphism, if one
/// exists.
inline std::optional<Automorphism> automorphism_from_generator_images(
    const Group& g, const std::vector<int>& gen_img) {
  if (gen_img.size() != g.generators.size())
    throw std::invalid_argument("one image per designated generator expected");
  auto w = detail::word_tree(g);
  auto img = detail::extend_images(g, w, gen_img);
  if (!img) return std::nullopt;
  return Automorphism{&g, std::move(*img)};
}

/// All automorphisms, by exhaustive generator-image search with element-order
/// filtering. Sorted by image array.
inline std::vector<Automorphism> automorphism_group(const Group& g) {
  if (g.order > kMaxAutOrder)
    throw std::invalid_argument("automorphism_group: order cap exceeded");
  if (g.generators.size() > 3)
    throw std::invalid_argument("automorphism_group: more than 3 generators");
  if (g.order == 1) return {identity_automorphism(g)};

  auto w = detail::word_tree(g);
  size_t k = g.generators.size();
  std::vector<std::vector<int>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int ord = g.element_order[g.generators[i]];
    for (int x = 0; x < g.order; ++x)
      if (g.element_order[x] == ord) candidates[i].push_back(x);
  }

  std::vector<Automorphism> out;
  std::vector<int> gen_img(k);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == k) {
      auto img = detail::extend_images(g, w, gen_img);
      if (img) out.push_back(Automorphism{&g, std::move(*img)});
      return;
    }
    for (int c : candidates[pos]) {
      gen_img[pos] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Automorphism> inner_automorphisms(const Group& g) {
  std::set<std::vector<int>> seen;
  std::vector<Automorphism> out;
  for (int x = 0; x < g.order; ++x) {
    Automorphism a = conjugation_aut(g, x);
    if (seen.insert(a.img).second) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class OutIso { trivial, c2, s3, abelian };

/// Outer automorphism group: Inn-cosets of Aut with multiplication table and,
/// when abelian, an invariant-factor decomposition.
struct OutGroup {
  const Group* parent = nullptr;
  std::vector<Automorphism> coset_rep;        // lex-least member per coset
  std::vector<std::vector<int>> mult;         // coset multiplication
  std::vector<int> coset_order;
  bool is_abelian = true;
  OutIso iso = OutIso::trivial;
  std::vector<int> factor_orders;             // non-increasing, abelian only
  std::vector<int> factor_gens;               // coset ids
  std::vector<std::vector<int>> coords;       // coset id -> exponent tuple
  std::map<std::vector<int>, int> coset_of_img;

  int size() const { return int(coset_rep.size()); }

  int class_of(const Automorphism& a) const {
    auto it = coset_of_img.find(a.img);
    if (it == coset_of_img.end())
      throw std::invalid_argument("class_of: not an automorphism of this group");
    return it->second;
  }
};

inline int outer_class_of(const OutGroup& out, const Automorphism& a) {
  return out.class_of(a);
}

inline bool is_inner(const OutGroup& out, const Automorphism& a) {
  return out.class_of(a) == 0;
}

namespace detail {

// Greedy invariant-factor search: repeatedly pick the element of largest
// order (smallest coset id on ties) meeting the current span trivially.
inline void abelian_factors(OutGroup& o) {
  int n = o.size();
  std::vector<char> span(n, 0);
  span[0] = 1;
  int span_size = 1;
  while (span_size < n) {
    int best = -1;
    for (int c = 1; c < n; ++c) {
      if (best >= 0 && o.coset_order[c] <= o.coset_order[best]) continue;
      // <c> must meet the current span only in the identity
      int x = c;
      bool ok = true;
      while (x != 0) {
        if (span[x]) {
          ok = false;
          break;
        }
        x = o.mult[x][c];
      }
      if (ok && (best < 0 || o.coset_order[c] > o.coset_order[best])) best = c;
    }
    if (best < 0) throw std::logic_error("abelian Out: no invariant-factor basis");
    o.factor_gens.push_back(best);
    o.factor_orders.push_back(o.coset_order[best]);
    std::vector<int> old;
    for (int c = 0; c < n; ++c)
      if (span[c]) old.push_back(c);
    int p = 0;
    for (int i = 0; i < o.coset_order[best]; ++i) {
      for (int c : old)
        if (!span[o.mult[c][p]]) {
          span[o.mult[c][p]] = 1;
          ++span_size;
        }
      p = o.mult[p][best];
    }
  }
  // coordinates of every coset in the chosen basis
  o.coords.assign(n, {});
  std::vector<int> tup(o.factor_gens.size(), 0);
  std::vector<char> hit(n, 0);
  auto fill = [&](auto&& self, size_t pos, int acc) -> void {
    if (pos == o.factor_gens.size()) {
      if (hit[acc]) throw std::logic_error("abelian Out: basis is not direct");
      hit[acc] = 1;
      o.coords[acc] = tup;
      return;
    }
    int p = acc;
    for (int e = 0; e < o.factor_orders[pos]; ++e) {
      tup[pos] = e;
      self(self, pos + 1, p);
      p = o.mult[p][o.factor_gens[pos]];
    }
  };
  fill(fill, 0, 0);
}

}  // namespace detail

inline OutGroup out_group(const Group& g, const std::vector<Automorphism>& auts,
                          const std::vector<Automorphism>& inns) {
  OutGroup o;
  o.parent = &g;
  int coset_count = int(auts.size() / inns.size());
  std::vector<int> coset_id(auts.size(), -1);
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < auts.size(); ++i) index_of[auts[i].img] = int(i);

  // auts are sorted, so the first unassigned automorphism is the
  // lexicographically least member of its coset.
  for (size_t i = 0; i < auts.size(); ++i) {
    if (coset_id[i] >= 0) continue;
    int cid = int(o.coset_rep.size());
    o.coset_rep.push_back(auts[i]);
    for (const Automorphism& inn : inns) {
      Automorphism m = compose(auts[i], inn);
      auto it = index_of.find(m.img);
      if (it == index_of.end())
        throw std::logic_error("out_group: Inn does not act on Aut");
      coset_id[it->second] = cid;
    }
  }
  if (int(o.coset_rep.size()) != coset_count)
    throw std::logic_error("out_group: coset count mismatch");
  for (size_t i = 0; i < auts.size(); ++i) o.coset_of_img[auts[i].img] = coset_id[i];

  int n = o.size();
  o.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      o.mult[a][b] = o.coset_of_img.at(compose(o.coset_rep[a], o.coset_rep[b]).img);

  o.coset_order.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = o.mult[x][a];
      ++k;
    }
    o.coset_order[a] = k;
  }

  o.is_abelian = true;
  for (int a = 0; a < n && o.is_abelian; ++a)
    for (int b = 0; b < n; ++b)
      if (o.mult[a][b] != o.mult[b][a]) {
        o.is_abelian = false;
        break;
      }

  if (o.is_abelian) {
    o.iso = n == 1 ? OutIso::trivial : (n == 2 ? OutIso::c2 : OutIso::abelian);
    detail::abelian_factors(o);
  } else {
    int invol = 0;
    for (int a = 1; a < n; ++a)
      if (o.coset_order[a] == 2) ++invol;
    if (n == 6 && invol == 3)
      o.iso = OutIso::s3;
    else
      throw std::logic_error("out_group: unrecognized non-abelian Out");
  }
  return o;
}

inline OutGroup out_group(const Group& g) {
  return out_group(g, automorphism_group(g), inner_automorphisms(g));
}

}  // namespace blockfun
