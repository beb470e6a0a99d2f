#pragma once

#include <memory>

#include "blockfun/families.hpp"

namespace blockfun {

enum class FusionLabel { F00, F01, F10, F11 };

inline const char* fusion_label_name(FusionLabel l) {
  switch (l) {
    case FusionLabel::F00: return "F00";
    case FusionLabel::F01: return "F01";
    case FusionLabel::F10: return "F10";
    case FusionLabel::F11: return "F11";
  }
  return "?";
}

inline std::vector<FusionLabel> fusion_labels_for(Family f) {
  if (f == Family::semidihedral)
    return {FusionLabel::F00, FusionLabel::F01, FusionLabel::F10, FusionLabel::F11};
  return {FusionLabel::F00, FusionLabel::F01, FusionLabel::F11};
}

/// Group with its subgroup lattice, conjugacy classes and taxonomy; computed
/// once per (family, n) and shared between fusion systems.
struct GroupData {
  FamilyId family;
  Group group;
  SubgroupClasses classes;
  std::vector<TaxonomyLabel> tax;  // per conjugacy class

  int class_with_label(TaxonomyLabel lab) const {
    for (size_t c = 0; c < tax.size(); ++c)
      if (tax[c] == lab) return int(c);
    throw std::logic_error("no conjugacy class labeled " + lab.str());
  }
};

inline std::shared_ptr<const GroupData> make_group_data(FamilyId f) {
  auto d = std::make_shared<GroupData>();
  d->family = f;
  d->group = build(f);
  d->classes = conjugacy_classes_of_subgroups(d->group);
  d->tax = taxonomy(f, d->group, d->classes);
  return d;
}

// Partial maps on the parent group: image array with -1 off the domain.
using PartialMap = std::vector<int>;

inline PartialMap partial_identity(const Group& g, const Subgroup& s) {
  PartialMap m(g.order, -1);
  for (int x : s.members) m[x] = x;
  return m;
}

inline PartialMap partial_compose(const PartialMap& a, const PartialMap& b) {
  PartialMap r(b.size(), -1);
  for (size_t x = 0; x < b.size(); ++x)
    if (b[x] >= 0) {
      int y = a[b[x]];
      if (y < 0) throw std::logic_error("partial map composition off domain");
      r[x] = y;
    }
  return r;
}

inline PartialMap partial_inverse(const PartialMap& a) {
  PartialMap r(a.size(), -1);
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] >= 0) r[a[x]] = int(x);
  return r;
}

struct EssentialSeed {
  int conj_class;        // conjugacy class of the essential subgroup
  bool enhanced;         // S3 on top of Inn instead of Aut_D only
  PartialMap order3;     // seed automorphism of the class representative
};

/// Saturated fusion system on a family group, represented by its essential
/// seeds and the closure they generate: the partition of all subgroups into
/// F-isomorphism classes, a transport isomorphism onto each class
/// representative, and Aut_F of every representative.
struct FusionSystem {
  FamilyId family{Family::dihedral, 3};
  FusionLabel label = FusionLabel::F00;
  std::shared_ptr<const GroupData> data;
  std::vector<EssentialSeed> essentials;

  std::vector<int> f_class_of;                    // subgroup id -> F-class id
  std::vector<std::vector<int>> f_classes;        // F-class -> subgroup ids
  std::vector<int> f_rep;                         // F-class -> least subgroup id
  std::vector<PartialMap> to_rep;                 // subgroup id -> iso onto rep
  std::vector<std::vector<PartialMap>> aut_f;     // F-class -> Aut_F(rep), sorted

  const Group& group() const { return data->group; }
  const Subgroup& subgroup(int id) const { return data->classes.subgroups[id]; }
};

inline constexpr int kClosureBound = 200000;

/// Recomputes the closure fields from the essential seeds: the groupoid
/// generated by restrictions of inner automorphisms of D and of the seeded
/// essential automorphisms. Identical output when run on its own output.
inline FusionSystem alperin_closure(FusionSystem fs) {
  const GroupData& d = *fs.data;
  const Group& g = d.group;
  int nsub = int(d.classes.subgroups.size());

  struct Edge {
    int from, to;
    PartialMap map;
  };
  std::vector<Edge> edges;
  for (int p = 0; p < nsub; ++p) {
    const Subgroup& sp = d.classes.subgroups[p];
    for (int gen : g.generators) {
      PartialMap m(g.order, -1);
      std::vector<int> image;
      image.reserve(sp.members.size());
      for (int x : sp.members) {
        m[x] = g.conj(gen, x);
        image.push_back(m[x]);
      }
      int q = d.classes.id_of(Subgroup::from_members(g, std::move(image)));
      edges.push_back({p, q, std::move(m)});
    }
  }
  for (const EssentialSeed& e : fs.essentials) {
    if (!e.enhanced) continue;
    int rep_id = d.classes.rep[e.conj_class];
    const Subgroup& r = d.classes.subgroups[rep_id];
    for (int p = 0; p < nsub; ++p) {
      const Subgroup& sp = d.classes.subgroups[p];
      if (!r.contains_all(sp)) continue;
      PartialMap m(g.order, -1);
      std::vector<int> image;
      image.reserve(sp.members.size());
      for (int x : sp.members) {
        m[x] = e.order3[x];
        image.push_back(m[x]);
      }
      int q = d.classes.id_of(Subgroup::from_members(g, std::move(image)));
      edges.push_back({p, q, std::move(m)});
    }
  }

  // components under the generating edges
  std::vector<int> parent(nsub);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    int a = find(e.from), b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  fs.f_class_of.assign(nsub, -1);
  fs.f_classes.clear();
  fs.f_rep.clear();
  for (int p = 0; p < nsub; ++p) {
    int r = find(p);
    if (fs.f_class_of[r] < 0) {
      fs.f_class_of[r] = int(fs.f_classes.size());
      fs.f_classes.push_back({});
      fs.f_rep.push_back(r);
    }
    fs.f_class_of[p] = fs.f_class_of[r];
    fs.f_classes[fs.f_class_of[p]].push_back(p);
  }

  // spanning forest: transport isomorphism from every subgroup onto its rep
  std::vector<std::vector<std::pair<int, const Edge*>>> adj(nsub);  // (other, edge)
  for (const Edge& e : edges) {
    adj[e.from].push_back({e.to, &e});
    adj[e.to].push_back({e.from, &e});
  }
  fs.to_rep.assign(nsub, {});
  std::vector<char> visited(nsub, 0);
  for (int r : fs.f_rep) {
    fs.to_rep[r] = partial_identity(g, d.classes.subgroups[r]);
    visited[r] = 1;
    std::queue<int> bfs;
    bfs.push(r);
    while (!bfs.empty()) {
      int p = bfs.front();
      bfs.pop();
      for (auto [q, e] : adj[p]) {
        if (visited[q]) continue;
        visited[q] = 1;
        // edge map goes e->from to e->to; orient it q -> p
        PartialMap step = e->from == q ? e->map : partial_inverse(e->map);
        fs.to_rep[q] = partial_compose(fs.to_rep[p], step);
        bfs.push(q);
      }
    }
  }

  // vertex group at each representative, generated by the edge loops
  std::vector<std::set<PartialMap>> gens(fs.f_classes.size());
  for (int c = 0; c < int(fs.f_classes.size()); ++c)
    gens[c].insert(partial_identity(g, d.classes.subgroups[fs.f_rep[c]]));
  for (const Edge& e : edges) {
    int c = fs.f_class_of[e.from];
    PartialMap loop = partial_compose(fs.to_rep[e.to],
                                      partial_compose(e.map, partial_inverse(fs.to_rep[e.from])));
    gens[c].insert(std::move(loop));
  }
  fs.aut_f.assign(fs.f_classes.size(), {});
  for (int c = 0; c < int(fs.f_classes.size()); ++c) {
    std::set<PartialMap> group_set = gens[c];
    std::vector<PartialMap> work(group_set.begin(), group_set.end());
    for (size_t i = 0; i < work.size(); ++i) {
      for (const PartialMap& gmap : gens[c]) {
        PartialMap prod = partial_compose(work[i], gmap);
        if (group_set.insert(prod).second) work.push_back(std::move(prod));
      }
      if (int(work.size()) > kClosureBound)
        throw std::runtime_error("alperin_closure: iteration bound exceeded");
    }
    fs.aut_f[c].assign(group_set.begin(), group_set.end());
  }
  return fs;
}

namespace detail {

inline PartialMap order3_seed(const GroupData& d, int conj_class) {
  const Subgroup& rep = d.classes.subgroups[d.classes.rep[conj_class]];
  ExtractedGroup ex = extract_group(rep);
  for (const Automorphism& a : automorphism_group(ex.group)) {
    Automorphism x = compose(a, a);
    bool order3 = !(a == identity_automorphism(ex.group)) &&
                  compose(x, a) == identity_automorphism(ex.group);
    if (!order3) continue;
    PartialMap m(d.group.order, -1);
    for (int i = 0; i < ex.group.order; ++i) m[ex.to_parent[i]] = ex.to_parent[a.img[i]];
    return m;
  }
  throw std::logic_error("essential subgroup has no order-3 automorphism");
}

}  // namespace detail

/// Builds the fusion system F_label on the family group. For dihedral and
/// quaternion F01 the enhanced essential class is the T^2 side;
/// swap_enhanced picks the T^1 side instead (an isomorphic system).
inline FusionSystem build_fusion(FamilyId f, FusionLabel label,
                                 std::shared_ptr<const GroupData> data,
                                 bool swap_enhanced = false) {
  f.validate();
  if (f.tag == Family::cyclic || f.tag == Family::klein_four)
    throw std::invalid_argument("fusion systems are built on dihedral, quaternion and semidihedral groups");
  if (f.tag == Family::quaternion && f.n == 3)
    throw std::invalid_argument(
        "quaternion n=3 (Q8 defect) is deferred to prior work and not supported");
  if (label == FusionLabel::F10 && f.tag != Family::semidihedral)
    throw std::invalid_argument("fusion label F10 exists only for the semidihedral family");
  if (swap_enhanced &&
      (f.tag == Family::semidihedral || label != FusionLabel::F01))
    throw std::invalid_argument("swap_enhanced applies to dihedral/quaternion F01 only");
  if (!data || !(data->family == f)) throw std::invalid_argument("group data mismatch");

  FusionSystem fs;
  fs.family = f;
  fs.label = label;
  fs.data = std::move(data);

  bool first, second;  // enhancement of the T^1 / T^2 essential class
  switch (label) {
    case FusionLabel::F00: first = false; second = false; break;
    case FusionLabel::F01:
      if (f.tag == Family::semidihedral) {
        first = false;
        second = true;
      } else {
        first = swap_enhanced;
        second = !swap_enhanced;
      }
      break;
    case FusionLabel::F10: first = true; second = false; break;
    case FusionLabel::F11: first = true; second = true; break;
  }

  int essential_m1 = f.tag == Family::quaternion ? 3 : 2;  // V4 or Q8 level, T^1 side
  int essential_m2 = f.tag == Family::dihedral ? 2 : 3;    // T^2 side
  int c1 = fs.data->class_with_label({TaxKind::t1_chain, essential_m1});
  int c2 = fs.data->class_with_label({TaxKind::t2_chain, essential_m2});
  fs.essentials.push_back({c1, first, first ? detail::order3_seed(*fs.data, c1) : PartialMap{}});
  fs.essentials.push_back({c2, second, second ? detail::order3_seed(*fs.data, c2) : PartialMap{}});
  return alperin_closure(std::move(fs));
}

inline FusionSystem build_fusion(FamilyId f, FusionLabel label, bool swap_enhanced = false) {
  f.validate();
  return build_fusion(f, label, make_group_data(f), swap_enhanced);
}

/// Aut_F(P) for an arbitrary subgroup, transported from the class
/// representative along the closure morphism.
inline std::vector<PartialMap> aut_f_at(const FusionSystem& fs, int subgroup_id) {
  int c = fs.f_class_of[subgroup_id];
  const PartialMap& t = fs.to_rep[subgroup_id];
  PartialMap tinv = partial_inverse(t);
  std::vector<PartialMap> out;
  out.reserve(fs.aut_f[c].size());
  for (const PartialMap& a : fs.aut_f[c])
    out.push_back(partial_compose(tinv, partial_compose(a, t)));
  std::sort(out.begin(), out.end());
  return out;
}

struct OutFInfo {
  int aut_order = 0;
  int inn_order = 0;
  int out_order = 0;
};

/// |Out_F(P)| data for a subgroup: Aut_F from the closure, Inn(P) from the
/// subgroup itself.
inline OutFInfo out_f(const FusionSystem& fs, int subgroup_id) {
  const Subgroup& p = fs.subgroup(subgroup_id);
  const Group& g = fs.group();
  int central = 0;
  for (int x : p.members) {
    bool com = true;
    for (int y : p.members)
      if (g.mul(x, y) != g.mul(y, x)) {
        com = false;
        break;
      }
    if (com) ++central;
  }
  OutFInfo info;
  info.inn_order = p.order() / central;
  info.aut_order = int(fs.aut_f[fs.f_class_of[subgroup_id]].size());
  if (info.aut_order % info.inn_order != 0)
    throw std::logic_error("Inn(P) does not divide Aut_F(P)");
  info.out_order = info.aut_order / info.inn_order;
  return info;
}

inline OutFInfo out_f(const FusionSystem& fs, const Subgroup& p) {
  return out_f(fs, fs.data->classes.id_of(p));
}

/// Fusion-system isomorphism at desk scale: same family and order, and the
/// same multiset of per-class invariants (iso type, class size, |Out_F|).
inline bool fusion_isomorphic(const FusionSystem& a, const FusionSystem& b) {
  if (a.group().order != b.group().order)
    throw std::invalid_argument("fusion_isomorphic: incomparable group orders");
  if (!(a.family == b.family)) return false;

  auto invariant = [](const FusionSystem& fs) {
    std::vector<std::tuple<int, int, size_t, int>> inv;
    for (size_t c = 0; c < fs.f_classes.size(); ++c) {
      IsoType t = iso_type(fs.subgroup(fs.f_rep[c]));
      inv.emplace_back(t.order, int(t.tag), fs.f_classes[c].size(),
                       out_f(fs, fs.f_rep[c]).out_order);
    }
    std::sort(inv.begin(), inv.end());
    return inv;
  };
  return invariant(a) == invariant(b);
}

}  // namespace blockfun
