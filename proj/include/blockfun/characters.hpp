#pragma once

#include <memory>

#include "blockfun/families.hpp"

namespace blockfun {

enum class UPart { one, u0 };

inline const char* u_part_name(UPart u) { return u == UPart::one ? "1" : "u0"; }

/// Simple module over Out(L,u): a character of an abelian Out group given by
/// exponents in its invariant-factor basis, or one of the three S3 modules.
struct SimpleModuleLabel {
  enum Kind { abelian_character, s3_trivial, s3_sign, s3_std2 };
  Kind kind = abelian_character;
  std::vector<int> exponents;  // one per cyclic factor, reduced
  int dim = 1;

  std::string str() const {
    switch (kind) {
      case s3_trivial: return "F";
      case s3_sign: return "F-";
      case s3_std2: return "V2";
      case abelian_character: {
        std::string s = "chi(";
        for (size_t i = 0; i < exponents.size(); ++i)
          s += (i ? "," : "") + std::to_string(exponents[i]);
        return s + ")";
      }
    }
    return "?";
  }
};

inline bool operator==(const SimpleModuleLabel& a, const SimpleModuleLabel& b) {
  return a.kind == b.kind && a.exponents == b.exponents;
}
inline bool operator<(const SimpleModuleLabel& a, const SimpleModuleLabel& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.exponents < b.exponents;
}

struct DeltaPair {
  IsoType L;
  UPart u = UPart::one;
};

inline bool operator==(const DeltaPair& a, const DeltaPair& b) {
  return a.L == b.L && a.u == b.u;
}
inline bool operator<(const DeltaPair& a, const DeltaPair& b) {
  if (!(a.L == b.L)) return a.L < b.L;
  return int(a.u) < int(b.u);
}

/// Label (L, u, V) of a simple diagonal functor.
struct SimpleFunctorLabel {
  DeltaPair pair;
  SimpleModuleLabel module;

  std::string str() const {
    std::string s = "S(";
    s += iso_tag_name(pair.L.tag);
    s += ":" + std::to_string(pair.L.order);
    s += ",";
    s += u_part_name(pair.u);
    s += "," + module.str() + ")";
    return s;
  }
};

inline bool operator==(const SimpleFunctorLabel& a, const SimpleFunctorLabel& b) {
  return a.pair == b.pair && a.module == b.module;
}
inline bool operator<(const SimpleFunctorLabel& a, const SimpleFunctorLabel& b) {
  if (!(a.pair == b.pair)) return a.pair < b.pair;
  return a.module < b.module;
}

inline FamilyId family_for_iso(IsoType t) {
  int m = 0;
  while ((1 << m) < t.order) ++m;
  switch (t.tag) {
    case IsoTag::trivial: return {Family::cyclic, 0};
    case IsoTag::cyclic: return {Family::cyclic, m};
    case IsoTag::klein_four: return {Family::klein_four, 2};
    case IsoTag::dihedral: return {Family::dihedral, m};
    case IsoTag::quaternion: return {Family::quaternion, m};
    case IsoTag::semidihedral: return {Family::semidihedral, m};
    case IsoTag::other: break;
  }
  throw std::invalid_argument("no canonical family for iso type 'other'");
}

/// Canonical data attached to an isomorphism type L: the built group, its
/// automorphisms, Out(L), the distinguished epsilon class when defined, and
/// for V4 / Q8 the order-3 automorphism u0 and the pair-automorphism action.
struct PairData {
  IsoType type;
  FamilyId family{Family::cyclic, 0};
  Group group;
  std::vector<Automorphism> auts;
  std::vector<Automorphism> inns;
  OutGroup out;
  int epsilon_coset = -1;
  bool has_u0 = false;
  Automorphism u0;
  std::vector<Automorphism> u0_pair_auts;  // Aut(L,u0) restricted to L
};

inline int automorphism_order(const Automorphism& a) {
  Automorphism x = a;
  Automorphism id = identity_automorphism(*a.parent);
  int k = 1;
  while (!(x == id)) {
    x = compose(x, a);
    ++k;
  }
  return k;
}

inline PairData make_pair_data(IsoType type) {
  PairData p;
  p.type = type;
  p.family = family_for_iso(type);
  p.group = build(p.family);
  p.auts = automorphism_group(p.group);
  p.inns = inner_automorphisms(p.group);
  p.out = out_group(p.group, p.auts, p.inns);

  bool has_eps = (type.tag == IsoTag::dihedral) ||
                 (type.tag == IsoTag::quaternion && type.order >= 16) ||
                 (type.tag == IsoTag::cyclic && type.order >= 4);
  if (has_eps)
    p.epsilon_coset = p.out.class_of(distinguished_epsilon(p.family, p.group));

  p.has_u0 = type.tag == IsoTag::klein_four ||
             (type.tag == IsoTag::quaternion && type.order == 8);
  if (p.has_u0) {
    for (const Automorphism& a : p.auts)
      if (automorphism_order(a) == 3) {
        p.u0 = a;
        break;
      }
    if (p.u0.img.empty()) throw std::logic_error("no order-3 automorphism found");
    int cu = p.out.class_of(p.u0);
    for (const Automorphism& a : p.auts) {
      int ca = p.out.class_of(a);
      if (p.out.mult[ca][cu] == p.out.mult[cu][ca]) p.u0_pair_auts.push_back(a);
    }
  }
  return p;
}

/// Cache of canonical pair data, keyed by isomorphism type.
class PairCache {
 public:
  const PairData& get(IsoType t) {
    auto it = data_.find(t);
    if (it == data_.end())
      it = data_.emplace(t, std::make_unique<PairData>(make_pair_data(t))).first;
    return *it->second;
  }

 private:
  std::map<IsoType, std::unique_ptr<PairData>> data_;
};

/// Simple modules of Out(L, u). For u = 1 these are the characters of the
/// abelian Out(L) (exponent tuples) or the three S3 modules; for u = u0 the
/// pair group Out(L, u0) is trivial and F is the only module.
inline std::vector<SimpleModuleLabel> simple_modules(const PairData& p, UPart u) {
  if (u == UPart::u0) {
    if (!p.has_u0) throw std::invalid_argument("u0 only exists for V4 and Q8");
    return {SimpleModuleLabel{SimpleModuleLabel::abelian_character, {}, 1}};
  }
  if (p.out.iso == OutIso::s3)
    return {SimpleModuleLabel{SimpleModuleLabel::s3_trivial, {}, 1},
            SimpleModuleLabel{SimpleModuleLabel::s3_sign, {}, 1},
            SimpleModuleLabel{SimpleModuleLabel::s3_std2, {}, 2}};
  std::vector<SimpleModuleLabel> out;
  std::vector<int> tup(p.out.factor_orders.size(), 0);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == tup.size()) {
      out.push_back(SimpleModuleLabel{SimpleModuleLabel::abelian_character, tup, 1});
      return;
    }
    for (int e = 0; e < p.out.factor_orders[pos]; ++e) {
      tup[pos] = e;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline int s3_character_value(SimpleModuleLabel::Kind kind, int elem_order) {
  switch (kind) {
    case SimpleModuleLabel::s3_trivial: return 1;
    case SimpleModuleLabel::s3_sign: return elem_order == 2 ? -1 : 1;
    case SimpleModuleLabel::s3_std2:
      return elem_order == 1 ? 2 : (elem_order == 2 ? 0 : -1);
    default: throw std::logic_error("not an S3 module");
  }
}

inline void check_subgroup_of_out(const OutGroup& out, const std::vector<int>& h) {
  std::set<int> s(h.begin(), h.end());
  if (!s.count(0)) throw std::invalid_argument("subgroup of Out must contain 1");
  for (int a : h)
    for (int b : h)
      if (!s.count(out.mult[a][b]))
        throw std::invalid_argument("element set is not a subgroup of Out");
}

}  // namespace detail

/// Is the abelian character trivial on the given coset?
inline bool character_trivial_on(const PairData& p, const SimpleModuleLabel& module,
                                 int coset) {
  const auto& d = p.out.factor_orders;
  const auto& c = p.out.coords[coset];
  long m = 1;
  for (int di : d) m = std::max<long>(m, di);
  long acc = 0;
  for (size_t i = 0; i < d.size(); ++i)
    acc = (acc + (long(module.exponents[i]) * c[i]) % d[i] * (m / d[i])) % m;
  return acc % m == 0;
}

/// dim V^H as an exact integer: the averaged character sum over H.
inline int fixed_point_dim(const PairData& p, const SimpleModuleLabel& module,
                           const std::vector<int>& h) {
  detail::check_subgroup_of_out(p.out, h);
  if (module.kind != SimpleModuleLabel::abelian_character) {
    if (p.out.iso != OutIso::s3) throw std::invalid_argument("S3 module over non-S3 Out");
    int sum = 0;
    for (int coset : h)
      sum += detail::s3_character_value(module.kind, p.out.coset_order[coset]);
    if (sum % int(h.size()) != 0)
      throw std::logic_error("fixed_point_dim: non-integral character average");
    return sum / int(h.size());
  }
  if (module.exponents.size() != p.out.factor_orders.size())
    throw std::invalid_argument("character exponents do not match Out factors");
  for (int coset : h)
    if (!character_trivial_on(p, module, coset)) return 0;
  return 1;
}

/// Weight of the pair (L, u0) at a class with the given F-automorphisms,
/// transported to L: the number of (Aut_F x Aut(L,u0))-orbits on the set of
/// isomorphisms pi with pi u0 pi^{-1} in Aut_F. Each orbit carries the
/// one-dimensional PIM line, so it contributes 1.
inline int u0_orbit_weight(const PairData& p, const std::vector<Automorphism>& aut_f_on_L) {
  if (!p.has_u0) throw std::invalid_argument("u0 weight needs L = V4 or Q8");
  size_t inn = p.inns.size();
  size_t out_order = aut_f_on_L.size() / inn;
  if (out_order != 2 && out_order != 6)
    throw std::invalid_argument("u0_orbit_weight: Out_F image is not C2 or S3");

  std::set<std::vector<int>> aut_f_set;
  for (const auto& a : aut_f_on_L) aut_f_set.insert(a.img);

  // Isomorphisms L -> L are Aut(L); keep those conjugating u0 into Aut_F.
  std::vector<const Automorphism*> kept;
  for (const auto& pi : p.auts)
    if (aut_f_set.count(compose(compose(pi, p.u0), inverse(pi)).img))
      kept.push_back(&pi);

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < kept.size(); ++i) index[kept[i]->img] = int(i);
  std::vector<int> parent(kept.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (size_t i = 0; i < kept.size(); ++i) {
    for (const auto& alpha : aut_f_on_L) {
      auto it = index.find(compose(alpha, *kept[i]).img);
      if (it != index.end()) unite(int(i), it->second);
    }
    for (const auto& phi : p.u0_pair_auts) {
      auto it = index.find(compose(*kept[i], phi).img);
      if (it != index.end()) unite(int(i), it->second);
    }
  }
  int orbits = 0;
  for (size_t i = 0; i < kept.size(); ++i)
    if (find(int(i)) == int(i)) ++orbits;
  return orbits;
}

/// All simple-functor labels (L, u, V) with L isomorphic to a subgroup of the
/// family's group, in canonical order.
inline std::vector<SimpleFunctorLabel> enumerate_labels(FamilyId top, PairCache& cache) {
  top.validate();
  IsoType top_type{IsoTag::other, top.order()};
  switch (top.tag) {
    case Family::dihedral: top_type.tag = IsoTag::dihedral; break;
    case Family::quaternion: top_type.tag = IsoTag::quaternion; break;
    case Family::semidihedral: top_type.tag = IsoTag::semidihedral; break;
    case Family::cyclic: top_type.tag = top.n == 0 ? IsoTag::trivial : IsoTag::cyclic; break;
    case Family::klein_four: top_type.tag = IsoTag::klein_four; break;
  }
  const PairData& top_data = cache.get(top_type);

  std::set<IsoType> types;
  for (const Subgroup& s : enumerate_subgroups(top_data.group)) {
    IsoType t = iso_type(s);
    if (t.tag == IsoTag::other)
      throw std::logic_error("unexpected subgroup isomorphism type");
    types.insert(t);
  }

  std::vector<SimpleFunctorLabel> labels;
  for (IsoType t : types) {
    const PairData& p = cache.get(t);
    for (const SimpleModuleLabel& m : simple_modules(p, UPart::one))
      labels.push_back({DeltaPair{t, UPart::one}, m});
    if (p.has_u0)
      for (const SimpleModuleLabel& m : simple_modules(p, UPart::u0))
        labels.push_back({DeltaPair{t, UPart::u0}, m});
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

inline std::vector<SimpleFunctorLabel> enumerate_labels(FamilyId top) {
  PairCache cache;
  return enumerate_labels(top, cache);
}

}  // namespace blockfun
