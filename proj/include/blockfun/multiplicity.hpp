#pragma once

#include "blockfun/characters.hpp"
#include "blockfun/fusion.hpp"

namespace blockfun {

/// l(kGb): the number of simple modules of a block with this fusion system.
inline int num_simple_modules(FamilyId f, FusionLabel label) {
  f.validate();
  if (f.tag == Family::quaternion && f.n == 3)
    throw std::invalid_argument(
        "quaternion n=3 (Q8 defect) is deferred to prior work and not supported");
  if (label == FusionLabel::F10 && f.tag != Family::semidihedral)
    throw std::invalid_argument("fusion label F10 exists only for the semidihedral family");
  switch (f.tag) {
    case Family::dihedral:
    case Family::quaternion:
      return label == FusionLabel::F00 ? 1 : (label == FusionLabel::F01 ? 2 : 3);
    case Family::semidihedral:
      switch (label) {
        case FusionLabel::F00: return 1;
        case FusionLabel::F01: return 2;
        case FusionLabel::F10: return 2;
        case FusionLabel::F11: return 3;
      }
      break;
    default: break;
  }
  throw std::invalid_argument("no block data for this family");
}

/// Local block invariants l(kC_G(P)e_P) per F-class, for a fully centralized
/// representative. Everything is 1 except the center class: for quaternion it
/// carries l of the block itself, for semidihedral l of the fusion system
/// F_{0j} with the same second index.
struct LocalDatum {
  FamilyId family{Family::dihedral, 3};
  FusionLabel label = FusionLabel::F00;
  std::vector<int> per_class_l;
};

inline LocalDatum local_datum(const FusionSystem& fs) {
  LocalDatum ld;
  ld.family = fs.family;
  ld.label = fs.label;
  ld.per_class_l.assign(fs.f_classes.size(), 1);
  if (fs.family.tag == Family::quaternion || fs.family.tag == Family::semidihedral) {
    int center_id = fs.data->classes.id_of(center(fs.group()));
    int c = fs.f_class_of[center_id];
    if (fs.family.tag == Family::quaternion) {
      ld.per_class_l[c] = num_simple_modules(fs.family, fs.label);
    } else {
      bool j1 = fs.label == FusionLabel::F01 || fs.label == FusionLabel::F11;
      ld.per_class_l[c] =
          num_simple_modules(fs.family, j1 ? FusionLabel::F01 : FusionLabel::F00);
    }
  }
  return ld;
}

/// Isomorphism from a canonical group onto a subgroup of the parent, found by
/// generator-image search; candidates scanned in index order, so the result
/// is the lexicographically least one.
inline std::optional<std::vector<int>> find_isomorphism(const Group& lgroup,
                                                        const Subgroup& target) {
  if (lgroup.order != target.order()) return std::nullopt;
  const Group& g = *target.parent;
  if (lgroup.order == 1) return std::vector<int>{0};
  auto w = detail::word_tree(lgroup);
  size_t k = lgroup.generators.size();
  std::vector<std::vector<int>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int ord = lgroup.element_order[lgroup.generators[i]];
    for (int x : target.members)
      if (g.element_order[x] == ord) candidates[i].push_back(x);
  }
  std::vector<int> gen_img(k);
  std::vector<int> img(lgroup.order, -1);
  auto attempt = [&]() -> bool {
    img.assign(lgroup.order, -1);
    img[0] = 0;
    for (int x : w.bfs_order) {
      if (x == 0) continue;
      img[x] = g.mul(img[w.via_elem[x]], gen_img[w.via_gen[x]]);
    }
    std::vector<char> hit(g.order, 0);
    for (int v : img) {
      if (!target.contains(v) || hit[v]) return false;
      hit[v] = 1;
    }
    for (int x = 0; x < lgroup.order; ++x)
      for (size_t i = 0; i < k; ++i)
        if (img[lgroup.mul(x, lgroup.generators[i])] != g.mul(img[x], gen_img[i]))
          return false;
    return true;
  };
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, size_t pos) -> bool {
    if (pos == k) {
      if (attempt()) {
        found = img;
        return true;
      }
      return false;
    }
    for (int c : candidates[pos]) {
      gen_img[pos] = c;
      if (self(self, pos + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

inline std::vector<std::vector<int>> all_isomorphisms(const Group& lgroup,
                                                      const Subgroup& target) {
  std::vector<std::vector<int>> out;
  if (lgroup.order != target.order()) return out;
  if (lgroup.order == 1) return {{0}};
  auto base = find_isomorphism(lgroup, target);
  if (!base) return out;
  for (const Automorphism& a : automorphism_group(lgroup)) {
    std::vector<int> img(lgroup.order);
    for (int x = 0; x < lgroup.order; ++x) img[x] = (*base)[a.img[x]];
    out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Aut_F of a class representative transported to the canonical group:
/// pi^{-1} Aut_F(P) pi for the least isomorphism pi.
inline std::vector<Automorphism> transported_aut_f(const FusionSystem& fs, int f_class,
                                                   const PairData& L) {
  const Subgroup& rep = fs.subgroup(fs.f_rep[f_class]);
  auto pi = find_isomorphism(L.group, rep);
  if (!pi) throw std::logic_error("no isomorphism onto class representative");
  std::vector<int> pi_inv(fs.group().order, -1);
  for (int x = 0; x < L.group.order; ++x) pi_inv[(*pi)[x]] = x;
  std::vector<Automorphism> out;
  out.reserve(fs.aut_f[f_class].size());
  for (const PartialMap& a : fs.aut_f[f_class]) {
    Automorphism b{&L.group, std::vector<int>(L.group.order)};
    for (int x = 0; x < L.group.order; ++x) b.img[x] = pi_inv[a[(*pi)[x]]];
    out.push_back(std::move(b));
  }
  return out;
}

/// Image of the transported Aut_F in Out(L), as sorted coset ids. The closure
/// guarantees this is a subgroup; a failure here signals transport breakage.
inline std::vector<int> transported_out_f(const FusionSystem& fs, int f_class,
                                          const PairData& L) {
  std::set<int> cosets;
  for (const Automorphism& b : transported_aut_f(fs, f_class, L))
    cosets.insert(L.out.class_of(b));
  std::vector<int> h(cosets.begin(), cosets.end());
  for (int a : h)
    for (int b : h)
      if (!cosets.count(L.out.mult[a][b]))
        throw std::logic_error("transported Out_F image is not a subgroup");
  return h;
}

struct TransportCache {
  std::map<std::pair<int, IsoType>, std::vector<int>> out_f_image;
  std::map<std::pair<int, IsoType>, int> u0_weight;
};

/// Multiplicity of the simple functor S_{L,u,V} in the block functor of this
/// fusion system: sum over F-classes [P] with P = L of l(P) times the weight
/// of the class (fixed points of V under the transported Out_F for u = 1, the
/// orbit count for u = u0). For L = 1 the multiplicity is l(kGb) itself.
inline long multiplicity(const FusionSystem& fs, const LocalDatum& ld,
                         const SimpleFunctorLabel& lab, PairCache& cache,
                         TransportCache* tcache = nullptr) {
  if (lab.pair.L.tag == IsoTag::trivial)
    return num_simple_modules(fs.family, fs.label);

  const PairData& L = cache.get(lab.pair.L);
  bool seen_class = false;
  long total = 0;
  for (size_t c = 0; c < fs.f_classes.size(); ++c) {
    if (!(iso_type(fs.subgroup(fs.f_rep[c])) == lab.pair.L)) continue;
    seen_class = true;
    int w = 0;
    if (lab.pair.u == UPart::one) {
      std::vector<int> h;
      auto key = std::make_pair(int(c), lab.pair.L);
      if (tcache && tcache->out_f_image.count(key)) {
        h = tcache->out_f_image.at(key);
      } else {
        h = transported_out_f(fs, int(c), L);
        if (tcache) tcache->out_f_image[key] = h;
      }
      w = fixed_point_dim(L, lab.module, h);
    } else {
      auto key = std::make_pair(int(c), lab.pair.L);
      if (tcache && tcache->u0_weight.count(key)) {
        w = tcache->u0_weight.at(key);
      } else {
        w = u0_orbit_weight(L, transported_aut_f(fs, int(c), L));
        if (tcache) tcache->u0_weight[key] = w;
      }
    }
    total += long(ld.per_class_l[c]) * w;
  }
  if (!seen_class)
    throw std::invalid_argument("label incompatible with the fusion system's group: " +
                                lab.str());
  return total;
}

/// Full decomposition table: multiplicities of every enumerated label, with
/// zero entries omitted.
struct DecompositionTable {
  FamilyId family{Family::dihedral, 3};
  FusionLabel label = FusionLabel::F00;
  std::map<SimpleFunctorLabel, long> entries;
};

inline std::vector<SimpleFunctorLabel> enumerate_labels(const FusionSystem& fs,
                                                        PairCache& cache) {
  std::set<IsoType> types;
  for (size_t c = 0; c < fs.data->classes.classes.size(); ++c) {
    IsoType t = iso_type(fs.data->classes.subgroups[fs.data->classes.rep[c]]);
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

inline DecompositionTable decompose(const FusionSystem& fs, PairCache& cache) {
  DecompositionTable table;
  table.family = fs.family;
  table.label = fs.label;
  LocalDatum ld = local_datum(fs);
  TransportCache tcache;
  for (const SimpleFunctorLabel& lab : enumerate_labels(fs, cache)) {
    long m = multiplicity(fs, ld, lab, cache, &tcache);
    if (m != 0) table.entries[lab] = m;
  }
  return table;
}

inline DecompositionTable decompose(const FusionSystem& fs) {
  PairCache cache;
  return decompose(fs, cache);
}

inline bool functorially_equivalent(const DecompositionTable& a,
                                    const DecompositionTable& b) {
  return a.entries == b.entries;
}

/// First label (in canonical order) whose multiplicities differ, if any.
inline std::optional<std::pair<SimpleFunctorLabel, std::pair<long, long>>>
first_difference(const DecompositionTable& a, const DecompositionTable& b) {
  std::set<SimpleFunctorLabel> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  for (const SimpleFunctorLabel& k : keys) {
    auto ia = a.entries.find(k);
    auto ib = b.entries.find(k);
    long va = ia == a.entries.end() ? 0 : ia->second;
    long vb = ib == b.entries.end() ? 0 : ib->second;
    if (va != vb) return std::make_pair(k, std::make_pair(va, vb));
  }
  return std::nullopt;
}

}  // namespace blockfun
