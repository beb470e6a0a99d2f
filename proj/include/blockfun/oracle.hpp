#pragma once

#include <fstream>

#include "blockfun/serialize.hpp"

namespace blockfun {

inline constexpr int kMaxBruteOrder = 64;

namespace detail {

// Backtracking over raw element images with forward propagation along the
// Cayley table. Uses no designated generators, so it is independent of the
// generator-image search.
struct BruteAutSearch {
  const Group& g;
  int n;
  std::vector<int> img, pre;
  std::vector<int> trail;
  long count = 0;

  explicit BruteAutSearch(const Group& group)
      : g(group), n(group.order), img(group.order, -1), pre(group.order, -1) {}

  bool assign(int x, int y) {
    if (img[x] != -1) return img[x] == y;
    if (pre[y] != -1) return false;
    if (g.element_order[x] != g.element_order[y]) return false;
    img[x] = y;
    pre[y] = x;
    trail.push_back(x);
    return true;
  }

  bool propagate(size_t from) {
    for (size_t t = from; t < trail.size(); ++t) {
      int x = trail[t];
      for (int a = 0; a < n; ++a) {
        if (img[a] == -1) continue;
        if (!assign(g.mul(a, x), g.mul(img[a], img[x]))) return false;
        if (!assign(g.mul(x, a), g.mul(img[x], img[a]))) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      pre[img[x]] = -1;
      img[x] = -1;
    }
  }

  void search() {
    int i = 0;
    while (i < n && img[i] != -1) ++i;
    if (i == n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      size_t mark = trail.size();
      if (assign(i, c) && propagate(mark)) search();
      undo(mark);
    }
  }
};

}  // namespace detail

/// Number of Cayley-table-preserving bijections, counted by exhaustive
/// backtracking. Referee for the generator-image method.
inline long brute_force_aut_count(const Group& g) {
  if (g.order > kMaxBruteOrder)
    throw std::invalid_argument("brute_force_aut_count: order cap exceeded");
  detail::BruteAutSearch s(g);
  size_t mark = s.trail.size();
  if (!s.assign(0, 0) || !s.propagate(mark)) return 0;
  s.search();
  return s.count;
}

/// Number of subgroups, by closures of <= 2 generators plus pairwise joins.
inline long brute_force_subgroup_count(const Group& g) {
  if (g.order > kMaxBruteOrder)
    throw std::invalid_argument("brute_force_subgroup_count: order cap exceeded");
  std::set<std::vector<int>> found;
  for (int x = 0; x < g.order; ++x) {
    found.insert(closure(g, {x}));
    for (int y = x + 1; y < g.order; ++y) found.insert(closure(g, {x, y}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        std::vector<int> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        if (found.insert(closure(g, seed)).second) grew = true;
      }
  }
  return long(found.size());
}

// ---------------------------------------------------------------------------
// Golden tables

struct GoldenRow {
  std::string id;
  Family family = Family::dihedral;
  std::vector<FusionLabel> labels;
  IsoTag L_tag = IsoTag::trivial;
  enum class MSpec { top, fixed, rel, range } mspec = MSpec::top;
  int m_fixed = 0;
  int m_rel = 0;                  // rel: m = n + m_rel
  int m_min = 0, m_max_rel = -1;  // range: m_min .. n + m_max_rel
  enum class VSel { all, eps, eps_twist, quad } vsel = VSel::all;
  std::map<FusionLabel, long> value;       // all / eps "in" value, per label
  long out_value = 0;                      // eps rows: value off the kernel
  std::map<FusionLabel, std::array<long, 4>> quad;  // (F, F-, V2, (u0,F))
};

struct GoldenTable {
  std::vector<GoldenRow> rows;
};

inline GoldenTable load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table file: " + path);
  json j = json::parse(in);
  GoldenTable t;
  for (const json& r : j.at("rows")) {
    GoldenRow row;
    row.id = r.at("id").get<std::string>();
    row.family = family_from_name(r.at("family").get<std::string>());
    for (FusionLabel l : fusion_labels_for(row.family))
      if (!r.contains("labels") ||
          std::count(r.at("labels").begin(), r.at("labels").end(),
                     std::string(fusion_label_name(l))))
        row.labels.push_back(l);
    row.L_tag = iso_tag_from_name(r.at("L").get<std::string>());
    const json& m = r.at("m");
    std::string kind = m.at("kind").get<std::string>();
    if (kind == "top") {
      row.mspec = GoldenRow::MSpec::top;
    } else if (kind == "fixed") {
      row.mspec = GoldenRow::MSpec::fixed;
      row.m_fixed = m.at("value").get<int>();
    } else if (kind == "rel") {
      row.mspec = GoldenRow::MSpec::rel;
      row.m_rel = m.at("value").get<int>();
    } else if (kind == "range") {
      row.mspec = GoldenRow::MSpec::range;
      row.m_min = m.at("min").get<int>();
      row.m_max_rel = m.at("max_rel").get<int>();
    } else {
      throw std::runtime_error("golden row " + row.id + ": bad m kind " + kind);
    }
    std::string v = r.at("V").get<std::string>();
    auto parse_per_label = [&](const json& e) {
      std::map<FusionLabel, long> out;
      if (e.is_number()) {
        for (FusionLabel l : row.labels) out[l] = e.get<long>();
      } else {
        for (FusionLabel l : row.labels)
          out[l] = e.at(fusion_label_name(l)).get<long>();
      }
      return out;
    };
    if (v == "all") {
      row.vsel = GoldenRow::VSel::all;
      row.value = parse_per_label(r.at("expect"));
    } else if (v == "eps" || v == "eps_twist") {
      row.vsel = v == "eps" ? GoldenRow::VSel::eps : GoldenRow::VSel::eps_twist;
      row.value = parse_per_label(r.at("expect").at("in"));
      row.out_value = r.at("expect").at("out").get<long>();
    } else if (v == "quad") {
      row.vsel = GoldenRow::VSel::quad;
      for (FusionLabel l : row.labels) {
        auto arr = r.at("expect").at(fusion_label_name(l)).get<std::vector<long>>();
        if (arr.size() != 4)
          throw std::runtime_error("golden row " + row.id + ": quad needs 4 values");
        row.quad[l] = {arr[0], arr[1], arr[2], arr[3]};
      }
    } else {
      throw std::runtime_error("golden row " + row.id + ": bad V selector " + v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Class in Out(C_{2^m}) of x -> x^{2^{m-1}-1}. This is the outer action on
/// the maximal cyclic subgroup of a semidihedral group, where conjugation
/// twists by 2^{n-2}-1 rather than inverting.
inline int semidihedral_twist_coset(const PairData& p) {
  if (p.type.tag != IsoTag::cyclic || p.type.order < 8)
    throw std::invalid_argument("twist class needs a cyclic group of order >= 8");
  int r = p.type.order / 2 - 1;
  Automorphism a{&p.group, std::vector<int>(p.group.order)};
  for (int x = 0; x < p.group.order; ++x) a.img[x] = int((long(x) * r) % p.group.order);
  return p.out.class_of(a);
}

struct GoldenMismatch {
  std::string row_id;
  SimpleFunctorLabel label;
  long expected = 0;
  long actual = 0;
};

struct GoldenCellReport {
  FamilyId family{Family::dihedral, 3};
  FusionLabel label = FusionLabel::F00;
  std::vector<GoldenMismatch> mismatches;
  std::vector<std::string> coverage_errors;  // enumerated labels no row covers
  bool ok() const { return mismatches.empty() && coverage_errors.empty(); }
};

/// Expected multiplicity map for one (family, n, fusion) cell, expanded from
/// the golden rows; `covered` collects every label some row speaks about.
inline std::map<SimpleFunctorLabel, long> expand_golden(
    const GoldenTable& golden, FamilyId f, FusionLabel label, PairCache& cache,
    std::set<SimpleFunctorLabel>* covered = nullptr,
    std::map<SimpleFunctorLabel, std::string>* row_of = nullptr) {
  std::map<SimpleFunctorLabel, long> expected;
  for (const GoldenRow& row : golden.rows) {
    if (row.family != f.tag) continue;
    if (!std::count(row.labels.begin(), row.labels.end(), label)) continue;
    std::vector<int> ms;
    switch (row.mspec) {
      case GoldenRow::MSpec::top: ms.push_back(f.n); break;
      case GoldenRow::MSpec::fixed: ms.push_back(row.m_fixed); break;
      case GoldenRow::MSpec::rel: ms.push_back(f.n + row.m_rel); break;
      case GoldenRow::MSpec::range:
        for (int m = row.m_min; m <= f.n + row.m_max_rel; ++m) ms.push_back(m);
        break;
    }
    for (int m : ms) {
      IsoType L{row.L_tag, 1 << m};
      const PairData& p = cache.get(L);
      auto put = [&](const SimpleFunctorLabel& lab, long val) {
        if (covered) covered->insert(lab);
        if (row_of) (*row_of)[lab] = row.id;
        if (val != 0) {
          if (expected.count(lab))
            throw std::runtime_error("golden rows overlap at " + lab.str());
          expected[lab] = val;
        }
      };
      switch (row.vsel) {
        case GoldenRow::VSel::all:
          for (const SimpleModuleLabel& mod : simple_modules(p, UPart::one))
            put({DeltaPair{L, UPart::one}, mod}, row.value.at(label));
          break;
        case GoldenRow::VSel::eps:
        case GoldenRow::VSel::eps_twist: {
          int eps = row.vsel == GoldenRow::VSel::eps ? p.epsilon_coset
                                                     : semidihedral_twist_coset(p);
          if (eps < 0)
            throw std::runtime_error("golden row " + row.id + ": no epsilon class");
          for (const SimpleModuleLabel& mod : simple_modules(p, UPart::one))
            put({DeltaPair{L, UPart::one}, mod},
                character_trivial_on(p, mod, eps) ? row.value.at(label) : row.out_value);
          break;
        }
        case GoldenRow::VSel::quad: {
          const auto& q = row.quad.at(label);
          auto mods = simple_modules(p, UPart::one);  // F, F-, V2
          if (mods.size() != 3)
            throw std::runtime_error("golden row " + row.id + ": quad needs an S3 Out");
          for (int i = 0; i < 3; ++i) put({DeltaPair{L, UPart::one}, mods[i]}, q[i]);
          put({DeltaPair{L, UPart::u0}, simple_modules(p, UPart::u0).front()}, q[3]);
          break;
        }
      }
    }
  }
  return expected;
}

/// Diff of the engine's decomposition against the golden expansion for one
/// cell. Mismatches and uncovered labels are report content, not exceptions.
inline GoldenCellReport verify_golden_cell(const GoldenTable& golden, FamilyId f,
                                           FusionLabel label,
                                           std::shared_ptr<const GroupData> data,
                                           PairCache& cache) {
  GoldenCellReport rep;
  rep.family = f;
  rep.label = label;
  std::set<SimpleFunctorLabel> covered;
  std::map<SimpleFunctorLabel, std::string> row_of;
  auto expected = expand_golden(golden, f, label, cache, &covered, &row_of);

  FusionSystem fs = build_fusion(f, label, std::move(data));
  DecompositionTable actual = decompose(fs, cache);

  for (const SimpleFunctorLabel& lab : enumerate_labels(fs, cache))
    if (!covered.count(lab))
      rep.coverage_errors.push_back("no golden row covers " + lab.str());

  std::set<SimpleFunctorLabel> keys;
  for (const auto& [k, v] : expected) keys.insert(k);
  for (const auto& [k, v] : actual.entries) keys.insert(k);
  for (const SimpleFunctorLabel& k : keys) {
    long e = expected.count(k) ? expected.at(k) : 0;
    long a = actual.entries.count(k) ? actual.entries.at(k) : 0;
    if (e != a) {
      auto it = row_of.find(k);
      rep.mismatches.push_back(
          {it == row_of.end() ? std::string("<uncovered>") : it->second, k, e, a});
    }
  }
  return rep;
}

inline GoldenCellReport verify_golden(const GoldenTable& golden, FamilyId f,
                                      FusionLabel label) {
  PairCache cache;
  return verify_golden_cell(golden, f, label, make_group_data(f), cache);
}

inline std::string default_golden_path() {
#ifdef BLOCKFUN_DATA_DIR
  return std::string(BLOCKFUN_DATA_DIR) + "/golden_tables.json";
#else
  return "data/golden_tables.json";
#endif
}

// ---------------------------------------------------------------------------
// Structural oracles (automorphism counts, Out structure, taxonomy)

/// |Aut| closed forms: 2^{2n-3} for dihedral and quaternion (n >= 4),
/// 2^{2n-4} for semidihedral, 24 for Q8.
inline long expected_aut_order(FamilyId f) {
  switch (f.tag) {
    case Family::dihedral: return 1L << (2 * f.n - 3);
    case Family::quaternion: return f.n == 3 ? 24 : 1L << (2 * f.n - 3);
    case Family::semidihedral: return 1L << (2 * f.n - 4);
    case Family::cyclic: return f.n == 0 ? 1 : 1L << (f.n - 1);
    case Family::klein_four: return 6;
  }
  throw std::invalid_argument("unknown family");
}

inline int expected_class_count(FamilyId f) {
  switch (f.tag) {
    case Family::dihedral: return 1 + f.n + 2 * (f.n - 1);
    case Family::quaternion: return 1 + f.n + 2 * (f.n - 2);
    case Family::semidihedral: return 1 + f.n + (f.n - 1) + (f.n - 2);
    default: throw std::invalid_argument("no class-count formula for this family");
  }
}

/// Structural checks for one family group: |Aut| (brute force under the cap,
/// generator-image always), Out abelianness/shape, and for semidihedral the
/// cyclic Out of order 2^{n-3} generated by the class of f_{0,5}.
inline std::vector<std::string> check_automorphism_structure(FamilyId f) {
  std::vector<std::string> errors;
  std::string tag = std::string(family_name(f.tag)) + ":" + std::to_string(f.n);
  Group g = build(f);
  auto auts = automorphism_group(g);
  if (long(auts.size()) != expected_aut_order(f))
    errors.push_back(tag + ": |Aut| = " + std::to_string(auts.size()) + ", expected " +
                     std::to_string(expected_aut_order(f)));
  if (g.order <= kMaxBruteOrder) {
    long brute = brute_force_aut_count(g);
    if (brute != long(auts.size()))
      errors.push_back(tag + ": brute-force |Aut| = " + std::to_string(brute) +
                       " disagrees with generator-image count " +
                       std::to_string(auts.size()));
  }
  if (f.tag == Family::quaternion && f.n == 3) return errors;  // Out(Q8) = S3, below

  OutGroup out = out_group(g, auts, inner_automorphisms(g));
  if (f.tag == Family::dihedral || f.tag == Family::quaternion ||
      f.tag == Family::semidihedral) {
    if (!out.is_abelian) errors.push_back(tag + ": Out is not abelian");
  }
  if (f.tag == Family::semidihedral) {
    long want = 1L << (f.n - 3);
    if (long(out.size()) != want)
      errors.push_back(tag + ": |Out| = " + std::to_string(out.size()) + ", expected " +
                       std::to_string(want));
    if (out.factor_orders.size() > 1) errors.push_back(tag + ": Out is not cyclic");
    // s -> s^5, t -> t
    int s5 = g.mul(g.mul(2, 2), g.mul(g.mul(2, 2), 2));
    auto f05 = automorphism_from_generator_images(g, {s5, 1});
    if (!f05) {
      errors.push_back(tag + ": f_{0,5} is not an automorphism");
    } else if (long(out.coset_order[out.class_of(*f05)]) != want) {
      errors.push_back(tag + ": class of f_{0,5} does not generate Out");
    }
  }
  return errors;
}

/// Taxonomy checks for one family group: class count, iso-type labels (via
/// taxonomy(), which hard-errors on mismatch), normalizer chains
/// N(T^i_m) = T^i_{m+1} for 2 <= m <= n-2, and the brute-force subgroup count
/// under the cap.
inline std::vector<std::string> check_taxonomy(FamilyId f) {
  std::vector<std::string> errors;
  std::string tag = std::string(family_name(f.tag)) + ":" + std::to_string(f.n);
  Group g = build(f);
  auto subs = enumerate_subgroups(g);
  auto sc = conjugacy_classes_of_subgroups(g, subs);
  try {
    taxonomy(f, g, sc);
  } catch (const std::exception& e) {
    errors.push_back(tag + ": " + e.what());
    return errors;
  }
  if (int(sc.classes.size()) != expected_class_count(f))
    errors.push_back(tag + ": " + std::to_string(sc.classes.size()) +
                     " subgroup classes, expected " +
                     std::to_string(expected_class_count(f)));
  for (int i = 1; i <= 2; ++i) {
    TaxKind kind = i == 1 ? TaxKind::t1_chain : TaxKind::t2_chain;
    for (int m = 2; m <= f.n - 2; ++m) {
      Subgroup tm = canonical_labeled_subgroup(f, g, {kind, m});
      Subgroup tm1 = canonical_labeled_subgroup(f, g, {kind, m + 1});
      if (!(normalizer(g, tm) == tm1))
        errors.push_back(tag + ": N(T" + std::to_string(i) + "_" + std::to_string(m) +
                         ") is not T" + std::to_string(i) + "_" + std::to_string(m + 1));
    }
  }
  if (g.order <= kMaxBruteOrder &&
      brute_force_subgroup_count(g) != long(subs.size()))
    errors.push_back(tag + ": brute-force subgroup count disagrees with layered closure");
  // |class| * |N(rep)| = |G|
  for (size_t c = 0; c < sc.classes.size(); ++c) {
    const Subgroup& rep = sc.subgroups[sc.rep[c]];
    if (long(sc.classes[c].size()) * normalizer(g, rep).order() != g.order) {
      errors.push_back(tag + ": orbit-normalizer balance fails at class " +
                       std::to_string(c));
      break;
    }
  }
  return errors;
}

}  // namespace blockfun
