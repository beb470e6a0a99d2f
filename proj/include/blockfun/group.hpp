#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockfun {

inline constexpr int kMaxGroupOrder = 512;

/// Finite group stored as a full Cayley table. Element 0 is the identity.
struct Group {
  int order = 0;
  std::vector<int> table;               // row-major: table[a*order+b] = a*b
  std::vector<int> generators;          // element indices
  std::vector<std::string> element_names;
  std::vector<int> inverse;
  std::vector<int> element_order;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int power(int a, long e) const {
    long m = element_order[a];
    e %= m;
    if (e < 0) e += m;
    int r = 0;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Builds a group from a raw table, filling in inverses and element orders.
  /// Checks the Latin-square property, identity at 0 and generator span.
  static Group from_table(std::vector<int> tab, std::vector<int> gens,
                          std::vector<std::string> names = {});

  /// Exhaustive associativity check, O(order^3). Used by tests.
  bool is_associative() const {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < order; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }
};

inline Group Group::from_table(std::vector<int> tab, std::vector<int> gens,
                               std::vector<std::string> names) {
  Group g;
  int n = 0;
  while (long(n) * n < long(tab.size())) ++n;
  if (long(n) * n != long(tab.size()) || n == 0)
    throw std::invalid_argument("group table is not square");
  if (n > kMaxGroupOrder) throw std::invalid_argument("group order exceeds 512");
  g.order = n;
  g.table = std::move(tab);
  g.generators = std::move(gens);
  g.element_names = std::move(names);

  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw std::invalid_argument("element 0 is not a two-sided identity");
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b), ba = g.mul(b, a);
      if (ab < 0 || ab >= n || ba < 0 || ba >= n)
        throw std::invalid_argument("table entry out of range");
      row[ab] = 1;
      col[ba] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != n ||
        std::count(col.begin(), col.end(), 1) != n)
      throw std::invalid_argument("table rows/columns are not permutations");
  }

  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) g.inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse[a] < 0) throw std::invalid_argument("element without inverse");

  g.element_order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
      if (k > n) throw std::invalid_argument("element order exceeds group order");
    }
    g.element_order[a] = k;
  }

  // generators must span
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> work{0};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int s : g.generators) {
      int y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        work.push_back(y);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n)
    throw std::invalid_argument("generators do not generate the group");
  return g;
}

inline int multiply(const Group& g, int a, int b) {
  if (a < 0 || a >= g.order || b < 0 || b >= g.order)
    throw std::out_of_range("multiply: element index out of range");
  return g.mul(a, b);
}

/// Subgroup of a parent group: sorted member list plus a membership mask.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<int> members;   // sorted ascending, members[0] == 0
  std::vector<char> mask;

  int order() const { return int(members.size()); }
  bool contains(int x) const { return mask[x]; }

  bool contains_all(const Subgroup& other) const {
    for (int x : other.members)
      if (!mask[x]) return false;
    return true;
  }

  static Subgroup from_members(const Group& g, std::vector<int> mem) {
    Subgroup s;
    s.parent = &g;
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    s.members = std::move(mem);
    s.mask.assign(g.order, 0);
    for (int x : s.members) s.mask[x] = 1;
    return s;
  }
};

// Deterministic ordering: by order, then by sorted member lists.
inline bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.members.size() != b.members.size())
    return a.members.size() < b.members.size();
  return a.members < b.members;
}
inline bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.members == b.members;
}

/// Closure of a seed set under multiplication. If the closure grows past
/// order/2 it must be the whole group, so we can stop early.
inline std::vector<int> closure(const Group& g, const std::vector<int>& seed,
                                bool early_exit_full = false) {
  std::vector<char> in(g.order, 0);
  std::vector<int> mem;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      mem.push_back(x);
    }
  };
  add(0);
  for (int x : seed) {
    if (x < 0 || x >= g.order) throw std::out_of_range("closure: bad element");
    add(x);
  }
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(mem[i], mem[j]));
      add(g.mul(mem[j], mem[i]));
    }
    if (early_exit_full && int(mem.size()) > g.order / 2) {
      mem.resize(g.order);
      std::iota(mem.begin(), mem.end(), 0);
      return mem;
    }
  }
  std::sort(mem.begin(), mem.end());
  return mem;
}

inline Subgroup subgroup_generated(const Group& g, const std::vector<int>& seed) {
  return Subgroup::from_members(g, closure(g, seed));
}

inline Subgroup trivial_subgroup(const Group& g) {
  return Subgroup::from_members(g, {0});
}

inline Subgroup full_subgroup(const Group& g) {
  std::vector<int> all(g.order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::from_members(g, all);
}

/// Every subgroup, exactly once, sorted by (order, member list).
/// Layered closure: seed with all cyclic subgroups, then join pairs to a
/// fixpoint.
inline std::vector<Subgroup> enumerate_subgroups(const Group& g) {
  if (g.order > kMaxGroupOrder)
    throw std::invalid_argument("enumerate_subgroups: order cap exceeded");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> found;
  auto add = [&](std::vector<int> mem) {
    if (seen.insert(mem).second) found.push_back(std::move(mem));
  };
  add({0});
  for (int x = 1; x < g.order; ++x) add(closure(g, {x}));
  for (size_t i = 0; i < found.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> seed = found[i];
      seed.insert(seed.end(), found[j].begin(), found[j].end());
      add(closure(g, seed, /*early_exit_full=*/true));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& mem : found) out.push_back(Subgroup::from_members(g, std::move(mem)));
  std::sort(out.begin(), out.end());
  return out;
}

inline Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int x) {
  std::vector<int> mem;
  mem.reserve(h.members.size());
  for (int m : h.members) mem.push_back(g.conj(x, m));
  return Subgroup::from_members(g, std::move(mem));
}

struct SubgroupClasses {
  std::vector<Subgroup> subgroups;          // sorted master list
  std::vector<int> class_of;                // subgroup id -> class id
  std::vector<std::vector<int>> classes;    // class id -> member subgroup ids
  std::vector<int> rep;                     // class id -> lex-least subgroup id

  int id_of(const Subgroup& s) const {
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), s);
    if (it == subgroups.end() || !(*it == s))
      throw std::logic_error("subgroup not in master list");
    return int(it - subgroups.begin());
  }
};

/// Partition of all subgroups into conjugacy classes. Representatives are the
/// lexicographically least members; classes are listed by representative.
inline SubgroupClasses conjugacy_classes_of_subgroups(
    const Group& g, std::vector<Subgroup> subgroups) {
  SubgroupClasses sc;
  sc.subgroups = std::move(subgroups);
  int n = int(sc.subgroups.size());
  sc.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sc.class_of[i] >= 0) continue;
    int cid = int(sc.classes.size());
    std::vector<int> orbit;
    std::vector<int> work{i};
    sc.class_of[i] = cid;
    orbit.push_back(i);
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (int x : g.generators) {
        Subgroup conj = conjugate_subgroup(g, sc.subgroups[cur], x);
        int j = sc.id_of(conj);
        if (sc.class_of[j] < 0) {
          sc.class_of[j] = cid;
          orbit.push_back(j);
          work.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    sc.classes.push_back(orbit);
    sc.rep.push_back(orbit.front());
  }
  return sc;
}

inline SubgroupClasses conjugacy_classes_of_subgroups(const Group& g) {
  return conjugacy_classes_of_subgroups(g, enumerate_subgroups(g));
}

inline Subgroup centralizer(const Group& g, const Subgroup& h) {
  std::vector<int> mem;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int m : h.members)
      if (g.mul(x, m) != g.mul(m, x)) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(x);
  }
  return Subgroup::from_members(g, std::move(mem));
}

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  std::vector<int> mem;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int m : h.members)
      if (!h.contains(g.conj(x, m))) {
        ok = false;
        break;
      }
    if (ok) mem.push_back(x);
  }
  return Subgroup::from_members(g, std::move(mem));
}

inline Subgroup center(const Group& g) { return centralizer(g, full_subgroup(g)); }

enum class IsoTag { trivial, cyclic, klein_four, dihedral, quaternion, semidihedral, other };

struct IsoType {
  IsoTag tag = IsoTag::other;
  int order = 0;
};

inline bool operator==(const IsoType& a, const IsoType& b) {
  return a.tag == b.tag && a.order == b.order;
}
inline bool operator<(const IsoType& a, const IsoType& b) {
  if (a.order != b.order) return a.order < b.order;
  return int(a.tag) < int(b.tag);
}

inline const char* iso_tag_name(IsoTag t) {
  switch (t) {
    case IsoTag::trivial: return "trivial";
    case IsoTag::cyclic: return "cyclic";
    case IsoTag::klein_four: return "klein_four";
    case IsoTag::dihedral: return "dihedral";
    case IsoTag::quaternion: return "quaternion";
    case IsoTag::semidihedral: return "semidihedral";
    case IsoTag::other: return "other";
  }
  return "other";
}

/// Classifies a 2-subgroup by order, exponent, abelianness and involution
/// count. Groups of order 2^m >= 8 with a cyclic subgroup of index 2 are
/// dihedral / quaternion / semidihedral when they have 2^{m-1}+1 / 1 /
/// 2^{m-2}+1 involutions.
inline IsoType iso_type(const Subgroup& h) {
  const Group& g = *h.parent;
  int n = h.order();
  if (n == 1) return {IsoTag::trivial, 1};
  if ((n & (n - 1)) != 0 || n > kMaxGroupOrder) return {IsoTag::other, n};

  int max_order = 0, involutions = 0;
  for (int m : h.members) {
    max_order = std::max(max_order, g.element_order[m]);
    if (g.element_order[m] == 2) ++involutions;
  }
  if (max_order == n) return {IsoTag::cyclic, n};

  bool abelian = true;
  for (int a : h.members) {
    for (int b : h.members)
      if (g.mul(a, b) != g.mul(b, a)) {
        abelian = false;
        break;
      }
    if (!abelian) break;
  }
  if (abelian) {
    if (n == 4) return {IsoTag::klein_four, 4};
    return {IsoTag::other, n};
  }
  if (max_order * 2 == n) {  // cyclic subgroup of index 2
    if (involutions == n / 2 + 1) return {IsoTag::dihedral, n};
    if (involutions == 1) return {IsoTag::quaternion, n};
    if (n >= 16 && involutions == n / 4 + 1) return {IsoTag::semidihedral, n};
  }
  return {IsoTag::other, n};
}

/// Extracted copy of a subgroup as a standalone Group, with the element map
/// back to parent indices. Element 0 stays first; the rest keep parent order.
struct ExtractedGroup {
  Group group;
  std::vector<int> to_parent;            // new index -> parent index
  std::vector<int> from_parent;          // parent index -> new index (-1 outside)
};

inline std::vector<int> minimal_generators(const Group& g);

inline ExtractedGroup extract_group(const Subgroup& h) {
  const Group& g = *h.parent;
  ExtractedGroup ex;
  ex.to_parent = h.members;  // sorted, members[0] == 0
  ex.from_parent.assign(g.order, -1);
  for (int i = 0; i < h.order(); ++i) ex.from_parent[ex.to_parent[i]] = i;
  int n = h.order();
  std::vector<int> tab(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(ex.to_parent[a], ex.to_parent[b]);
      int q = ex.from_parent[p];
      if (q < 0) throw std::invalid_argument("extract_group: set not closed");
      tab[size_t(a) * n + b] = q;
    }
  Group raw;  // just enough structure for closure()
  raw.order = n;
  raw.table = tab;
  ex.group = Group::from_table(std::move(tab), minimal_generators(raw));
  return ex;
}

/// Smallest generating tuple (size <= 3), scanning element indices in order.
inline std::vector<int> minimal_generators(const Group& g) {
  if (g.order == 1) return {};
  auto spans = [&](const std::vector<int>& gens) {
    return int(closure(g, gens).size()) == g.order;
  };
  for (int a = 1; a < g.order; ++a)
    if (spans({a})) return {a};
  for (int a = 1; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (spans({a, b})) return {a, b};
  for (int a = 1; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      for (int c = b + 1; c < g.order; ++c)
        if (spans({a, b, c})) return {a, b, c};
  throw std::invalid_argument("no generating set of size <= 3");
}

}  // namespace blockfun
