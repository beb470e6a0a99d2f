#pragma once

#include "blockfun/automorphisms.hpp"
#include "blockfun/group.hpp"

namespace blockfun {

enum class Family { dihedral, quaternion, semidihedral, cyclic, klein_four };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::dihedral: return "dihedral";
    case Family::quaternion: return "quaternion";
    case Family::semidihedral: return "semidihedral";
    case Family::cyclic: return "cyclic";
    case Family::klein_four: return "klein_four";
  }
  return "?";
}

/// Family of 2-groups of order 2^n.
struct FamilyId {
  Family tag;
  int n;

  void validate() const {
    switch (tag) {
      case Family::dihedral:
        if (n < 3) throw std::invalid_argument("dihedral requires n >= 3");
        break;
      case Family::quaternion:
        if (n < 3) throw std::invalid_argument("quaternion requires n >= 3");
        break;
      case Family::semidihedral:
        if (n < 4) throw std::invalid_argument("semidihedral requires n >= 4");
        break;
      case Family::cyclic:
        if (n < 0) throw std::invalid_argument("cyclic requires n >= 0");
        break;
      case Family::klein_four:
        if (n != 2) throw std::invalid_argument("klein_four requires n = 2");
        break;
    }
    if (n > 9) throw std::invalid_argument("family order exceeds 512");
  }

  int order() const { return 1 << n; }
};

inline bool operator==(const FamilyId& a, const FamilyId& b) {
  return a.tag == b.tag && a.n == b.n;
}

namespace detail {

// Normal forms s^i t^j with index 2i+j. Multiplication uses t s = s^r t and
// t^2 = s^e.
inline Group build_two_generated(int n, long r, int e) {
  int mod = 1 << (n - 1);
  int order = 2 * mod;
  auto idx = [&](long i, int j) {
    i %= mod;
    if (i < 0) i += mod;
    return int(2 * i + j);
  };
  std::vector<int> tab(size_t(order) * order);
  for (int a = 0; a < order; ++a) {
    long i = a / 2;
    int j = a % 2;
    for (int b = 0; b < order; ++b) {
      long k = b / 2;
      int l = b % 2;
      long ii = i + k * (j ? r : 1);
      int jj = j ^ l;
      if (j == 1 && l == 1) ii += e;
      tab[size_t(a) * order + b] = idx(ii, jj);
    }
  }
  std::vector<std::string> names(order);
  for (int a = 0; a < order; ++a) {
    int i = a / 2, j = a % 2;
    std::string s;
    if (i == 1) s = "s";
    else if (i > 1) s = "s^" + std::to_string(i);
    if (j) s += s.empty() ? "t" : " t";
    if (s.empty()) s = "e";
    names[a] = s;
  }
  return Group::from_table(std::move(tab), {2, 1}, std::move(names));
}

}  // namespace detail

/// Group of the family from its presentation, elements in normal form s^i t^j
/// with element index 2i+j (generators: s = 2, t = 1).
inline Group build(FamilyId f) {
  f.validate();
  switch (f.tag) {
    case Family::cyclic: {
      int order = f.order();
      std::vector<int> tab(size_t(order) * order);
      for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) tab[size_t(a) * order + b] = (a + b) % order;
      std::vector<std::string> names(order);
      for (int a = 0; a < order; ++a)
        names[a] = a == 0 ? "e" : (a == 1 ? "s" : "s^" + std::to_string(a));
      std::vector<int> gens = order > 1 ? std::vector<int>{1} : std::vector<int>{};
      return Group::from_table(std::move(tab), std::move(gens), std::move(names));
    }
    case Family::klein_four:
      return detail::build_two_generated(2, 1, 0);
    case Family::dihedral:
      return detail::build_two_generated(f.n, (1 << (f.n - 1)) - 1, 0);
    case Family::quaternion:
      return detail::build_two_generated(f.n, (1 << (f.n - 1)) - 1, 1 << (f.n - 2));
    case Family::semidihedral:
      return detail::build_two_generated(f.n, (1 << (f.n - 2)) - 1, 0);
  }
  throw std::invalid_argument("unknown family");
}

enum class TaxKind { whole_group, s_chain, t1_chain, t2_chain };

/// Conjugacy-class label: the whole group, the cyclic chain member S_m, or a
/// two-generated chain member T^1_m / T^2_m (W^i_m in the dihedral case).
struct TaxonomyLabel {
  TaxKind kind;
  int m = 0;

  std::string str() const {
    switch (kind) {
      case TaxKind::whole_group: return "G";
      case TaxKind::s_chain: return "S" + std::to_string(m);
      case TaxKind::t1_chain: return "T1_" + std::to_string(m);
      case TaxKind::t2_chain: return "T2_" + std::to_string(m);
    }
    return "?";
  }
};

inline bool operator==(const TaxonomyLabel& a, const TaxonomyLabel& b) {
  return a.kind == b.kind && a.m == b.m;
}

/// The canonical subgroup carrying a taxonomy label: S_m = <s^{2^{n-m-1}}>,
/// T^1_m = <s_{m-1}, t>, T^2_m = <s_{m-1}, s t>.
inline Subgroup canonical_labeled_subgroup(FamilyId f, const Group& g,
                                           TaxonomyLabel lab) {
  int n = f.n;
  auto s_power = [&](int m) {  // s_m = s^{2^{n-m-1}}, order 2^m
    if (m == 0) return 0;
    int i = 1 << (n - m - 1);
    return 2 * i;
  };
  switch (lab.kind) {
    case TaxKind::whole_group: return full_subgroup(g);
    case TaxKind::s_chain: return subgroup_generated(g, {s_power(lab.m)});
    case TaxKind::t1_chain: return subgroup_generated(g, {s_power(lab.m - 1), 1});
    case TaxKind::t2_chain: return subgroup_generated(g, {s_power(lab.m - 1), g.mul(2, 1)});
  }
  throw std::invalid_argument("bad taxonomy label");
}

namespace detail {

inline std::vector<TaxonomyLabel> expected_labels(FamilyId f) {
  std::vector<TaxonomyLabel> labs;
  int n = f.n;
  for (int m = 0; m < n; ++m) labs.push_back({TaxKind::s_chain, m});
  switch (f.tag) {
    case Family::dihedral:
    case Family::klein_four:
      for (int m = 1; m < n; ++m) {
        labs.push_back({TaxKind::t1_chain, m});
        labs.push_back({TaxKind::t2_chain, m});
      }
      break;
    case Family::quaternion:
      for (int m = 2; m < n; ++m) {
        labs.push_back({TaxKind::t1_chain, m});
        labs.push_back({TaxKind::t2_chain, m});
      }
      break;
    case Family::semidihedral:
      for (int m = 1; m < n; ++m) labs.push_back({TaxKind::t1_chain, m});
      for (int m = 2; m < n; ++m) labs.push_back({TaxKind::t2_chain, m});
      break;
    case Family::cyclic:
      break;
  }
  labs.push_back({TaxKind::whole_group, n});
  return labs;
}

inline IsoType expected_iso(FamilyId f, TaxonomyLabel lab) {
  int ord = 1 << lab.m;
  if (lab.kind == TaxKind::whole_group) {
    switch (f.tag) {
      case Family::dihedral: return {IsoTag::dihedral, f.order()};
      case Family::quaternion: return {IsoTag::quaternion, f.order()};
      case Family::semidihedral: return {IsoTag::semidihedral, f.order()};
      case Family::cyclic:
        return f.n == 0 ? IsoType{IsoTag::trivial, 1} : IsoType{IsoTag::cyclic, f.order()};
      case Family::klein_four: return {IsoTag::klein_four, 4};
    }
  }
  if (lab.kind == TaxKind::s_chain)
    return lab.m == 0 ? IsoType{IsoTag::trivial, 1} : IsoType{IsoTag::cyclic, ord};
  bool t2 = lab.kind == TaxKind::t2_chain;
  switch (f.tag) {
    case Family::dihedral:
    case Family::klein_four:
      if (lab.m == 1) return {IsoTag::cyclic, 2};
      if (lab.m == 2) return {IsoTag::klein_four, 4};
      return {IsoTag::dihedral, ord};
    case Family::quaternion:
      if (lab.m == 2) return {IsoTag::cyclic, 4};
      return {IsoTag::quaternion, ord};
    case Family::semidihedral:
      if (!t2) {
        if (lab.m == 1) return {IsoTag::cyclic, 2};
        if (lab.m == 2) return {IsoTag::klein_four, 4};
        return {IsoTag::dihedral, ord};
      }
      if (lab.m == 2) return {IsoTag::cyclic, 4};
      return {IsoTag::quaternion, ord};
    case Family::cyclic:
      break;
  }
  throw std::logic_error("no expected iso type");
}

}  // namespace detail

/// Assigns each conjugacy class of subgroups its taxonomy label and
/// cross-checks the label against iso_type. A class without a label, or a
/// label landing on a class of the wrong isomorphism type, is a hard error.
inline std::vector<TaxonomyLabel> taxonomy(FamilyId f, const Group& g,
                                           const SubgroupClasses& sc) {
  f.validate();
  std::vector<TaxonomyLabel> out(sc.classes.size(), {TaxKind::whole_group, -1});
  std::vector<char> assigned(sc.classes.size(), 0);
  for (TaxonomyLabel lab : detail::expected_labels(f)) {
    Subgroup s = canonical_labeled_subgroup(f, g, lab);
    int cid = sc.class_of[sc.id_of(s)];
    if (assigned[cid])
      throw std::logic_error("taxonomy: two labels on one class (" + lab.str() + ")");
    assigned[cid] = 1;
    out[cid] = lab;
    IsoType want = detail::expected_iso(f, lab);
    IsoType got = iso_type(sc.subgroups[sc.rep[cid]]);
    if (!(want == got))
      throw std::logic_error("taxonomy: iso-type mismatch at " + lab.str());
  }
  for (size_t c = 0; c < sc.classes.size(); ++c)
    if (!assigned[c]) throw std::logic_error("taxonomy: unlabeled class found");
  return out;
}

/// The distinguished outer automorphism: f_{1,1} (s -> s, t -> t s) for
/// dihedral and quaternion groups, inversion for cyclic groups.
inline Automorphism distinguished_epsilon(FamilyId f, const Group& g) {
  f.validate();
  if (f.tag == Family::cyclic) {
    if (f.n < 2) throw std::invalid_argument("epsilon needs a cyclic group of order >= 4");
    Automorphism a{&g, std::vector<int>(g.order)};
    for (int x = 0; x < g.order; ++x) a.img[x] = g.inv(x);
    return a;
  }
  if (f.tag == Family::dihedral || (f.tag == Family::quaternion && f.n >= 4)) {
    // s -> s, t -> t s
    auto a = automorphism_from_generator_images(g, {2, g.mul(1, 2)});
    if (!a) throw std::logic_error("epsilon: f_{1,1} failed to extend");
    return *a;
  }
  throw std::invalid_argument("family without a distinguished epsilon");
}

}  // namespace blockfun
