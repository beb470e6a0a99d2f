#include <doctest.h>

#include "blockfun/fusion.hpp"
#include "blockfun/multiplicity.hpp"

using namespace blockfun;

namespace {

int class_count_of_type(const FusionSystem& fs, IsoType t) {
  int k = 0;
  for (size_t c = 0; c < fs.f_classes.size(); ++c)
    if (iso_type(fs.subgroup(fs.f_rep[c])) == t) ++k;
  return k;
}

}  // namespace

TEST_CASE("involution and C4 fusion class counts") {
  SUBCASE("dihedral: 3 / 2 / 1 classes of involutions") {
    for (int n : {3, 4, 5}) {
      auto data = make_group_data({Family::dihedral, n});
      CHECK(class_count_of_type(build_fusion({Family::dihedral, n}, FusionLabel::F00, data),
                                {IsoTag::cyclic, 2}) == 3);
      CHECK(class_count_of_type(build_fusion({Family::dihedral, n}, FusionLabel::F01, data),
                                {IsoTag::cyclic, 2}) == 2);
      CHECK(class_count_of_type(build_fusion({Family::dihedral, n}, FusionLabel::F11, data),
                                {IsoTag::cyclic, 2}) == 1);
    }
  }
  SUBCASE("quaternion: 3 / 2 / 1 classes of C4") {
    for (int n : {4, 5}) {
      auto data = make_group_data({Family::quaternion, n});
      CHECK(class_count_of_type(build_fusion({Family::quaternion, n}, FusionLabel::F00, data),
                                {IsoTag::cyclic, 4}) == 3);
      CHECK(class_count_of_type(build_fusion({Family::quaternion, n}, FusionLabel::F01, data),
                                {IsoTag::cyclic, 4}) == 2);
      CHECK(class_count_of_type(build_fusion({Family::quaternion, n}, FusionLabel::F11, data),
                                {IsoTag::cyclic, 4}) == 1);
    }
  }
  SUBCASE("semidihedral: involutions (2,2,1,1) and C4 (2,1,2,1)") {
    auto data = make_group_data({Family::semidihedral, 5});
    auto counts = [&](FusionLabel l) {
      FusionSystem fs = build_fusion({Family::semidihedral, 5}, l, data);
      return std::pair<int, int>{class_count_of_type(fs, {IsoTag::cyclic, 2}),
                                 class_count_of_type(fs, {IsoTag::cyclic, 4})};
    };
    CHECK(counts(FusionLabel::F00) == std::pair<int, int>{2, 2});
    CHECK(counts(FusionLabel::F01) == std::pair<int, int>{2, 1});
    CHECK(counts(FusionLabel::F10) == std::pair<int, int>{1, 2});
    CHECK(counts(FusionLabel::F11) == std::pair<int, int>{1, 1});
  }
}

TEST_CASE("Out_F values produced by the closure") {
  SUBCASE("Out_F(D) = 1 for every family and label") {
    for (FamilyId f : {FamilyId{Family::dihedral, 4}, FamilyId{Family::quaternion, 4},
                       FamilyId{Family::semidihedral, 4}}) {
      auto data = make_group_data(f);
      for (FusionLabel l : fusion_labels_for(f.tag)) {
        FusionSystem fs = build_fusion(f, l, data);
        int top = data->classes.id_of(full_subgroup(fs.group()));
        CHECK(out_f(fs, top).out_order == 1);
        CHECK(fs.f_classes[fs.f_class_of[top]].size() == 1);  // D alone in its class
      }
    }
  }
  SUBCASE("proper dihedral subgroups: Out_F = C2") {
    FamilyId f{Family::dihedral, 5};
    auto data = make_group_data(f);
    for (FusionLabel l : fusion_labels_for(f.tag)) {
      FusionSystem fs = build_fusion(f, l, data);
      for (size_t c = 0; c < fs.f_classes.size(); ++c) {
        IsoType t = iso_type(fs.subgroup(fs.f_rep[c]));
        if (t.tag == IsoTag::dihedral && t.order < 32)
          CHECK(out_f(fs, fs.f_rep[c]).out_order == 2);
      }
    }
  }
  SUBCASE("quaternion C4 classes: Out_F = Out(P)") {
    FamilyId f{Family::quaternion, 5};
    auto data = make_group_data(f);
    FusionSystem fs = build_fusion(f, FusionLabel::F01, data);
    for (size_t c = 0; c < fs.f_classes.size(); ++c)
      if (iso_type(fs.subgroup(fs.f_rep[c])) == IsoType{IsoTag::cyclic, 4})
        CHECK(out_f(fs, fs.f_rep[c]).out_order == 2);
  }
  SUBCASE("essential classes carry the seeded automorphism group") {
    FamilyId f{Family::dihedral, 4};
    auto data = make_group_data(f);
    int c1 = data->class_with_label({TaxKind::t1_chain, 2});
    int c2 = data->class_with_label({TaxKind::t2_chain, 2});
    FusionSystem f00 = build_fusion(f, FusionLabel::F00, data);
    FusionSystem f01 = build_fusion(f, FusionLabel::F01, data);
    FusionSystem f11 = build_fusion(f, FusionLabel::F11, data);
    auto out_at = [&](const FusionSystem& fs, int conj_class) {
      return out_f(fs, fs.data->classes.rep[conj_class]).out_order;
    };
    CHECK(out_at(f00, c1) == 2);
    CHECK(out_at(f00, c2) == 2);
    CHECK(out_at(f01, c1) == 2);
    CHECK(out_at(f01, c2) == 6);
    CHECK(out_at(f11, c1) == 6);
    CHECK(out_at(f11, c2) == 6);

    FamilyId q{Family::quaternion, 4};
    auto qdata = make_group_data(q);
    FusionSystem q01 = build_fusion(q, FusionLabel::F01, qdata);
    auto aut_f_size = [&](const FusionSystem& fs, TaxonomyLabel lab) {
      int rep = fs.data->classes.rep[fs.data->class_with_label(lab)];
      return fs.aut_f[fs.f_class_of[rep]].size();
    };
    CHECK(aut_f_size(q01, {TaxKind::t1_chain, 3}) == 8);   // Aut_D over Inn(Q8)
    CHECK(aut_f_size(q01, {TaxKind::t2_chain, 3}) == 24);  // full Aut(Q8)
  }
}

TEST_CASE("closure is idempotent and refines conjugacy and iso type") {
  for (FamilyId f : {FamilyId{Family::dihedral, 4}, FamilyId{Family::semidihedral, 4}}) {
    auto data = make_group_data(f);
    for (FusionLabel l : fusion_labels_for(f.tag)) {
      FusionSystem fs = build_fusion(f, l, data);
      FusionSystem again = alperin_closure(fs);
      CHECK(again.f_class_of == fs.f_class_of);
      CHECK(again.aut_f == fs.aut_f);
      CHECK(again.to_rep == fs.to_rep);

      for (size_t c = 0; c < fs.f_classes.size(); ++c) {
        IsoType t = iso_type(fs.subgroup(fs.f_rep[c]));
        for (int id : fs.f_classes[c]) CHECK(iso_type(fs.subgroup(id)) == t);
      }
      // F-fusion only merges whole conjugacy classes
      for (size_t cc = 0; cc < data->classes.classes.size(); ++cc) {
        int fc = fs.f_class_of[data->classes.classes[cc].front()];
        for (int id : data->classes.classes[cc]) CHECK(fs.f_class_of[id] == fc);
      }
    }
  }
}

TEST_CASE("aut_f_at transports onto non-representative members") {
  FamilyId f{Family::dihedral, 4};
  auto data = make_group_data(f);
  FusionSystem fs = build_fusion(f, FusionLabel::F11, data);
  const Group& g = fs.group();
  for (size_t c = 0; c < fs.f_classes.size(); ++c) {
    for (int id : fs.f_classes[c]) {
      const Subgroup& p = fs.subgroup(id);
      auto auts = aut_f_at(fs, id);
      CHECK(auts.size() == fs.aut_f[c].size());
      for (const PartialMap& a : auts) {
        // each transported map is an automorphism of P
        std::set<int> image;
        for (int x : p.members) {
          CHECK(p.contains(a[x]));
          image.insert(a[x]);
          for (int y : p.members) CHECK(a[g.mul(x, y)] == g.mul(a[x], a[y]));
        }
        CHECK(int(image.size()) == p.order());
      }
    }
  }
}

TEST_CASE("Aut_D(P) is contained in Aut_F(P)") {
  FamilyId f{Family::dihedral, 4};
  auto data = make_group_data(f);
  FusionSystem fs = build_fusion(f, FusionLabel::F00, data);
  const Group& g = fs.group();
  for (size_t c = 0; c < fs.f_classes.size(); ++c) {
    int rep_id = fs.f_rep[c];
    const Subgroup& p = fs.subgroup(rep_id);
    Subgroup n = normalizer(g, p);
    std::set<PartialMap> have(fs.aut_f[c].begin(), fs.aut_f[c].end());
    for (int x : n.members) {
      PartialMap m(g.order, -1);
      for (int y : p.members) m[y] = g.conj(x, y);
      CHECK(have.count(m) == 1);
    }
  }
}

TEST_CASE("fusion_isomorphic") {
  FamilyId f{Family::dihedral, 4};
  auto data = make_group_data(f);
  FusionSystem f00 = build_fusion(f, FusionLabel::F00, data);
  FusionSystem f01 = build_fusion(f, FusionLabel::F01, data);
  FusionSystem f01_swapped = build_fusion(f, FusionLabel::F01, data, true);
  FusionSystem f11 = build_fusion(f, FusionLabel::F11, data);

  CHECK(fusion_isomorphic(f00, f00));
  CHECK(fusion_isomorphic(f01, f01_swapped));
  CHECK_FALSE(fusion_isomorphic(f00, f11));
  CHECK_FALSE(fusion_isomorphic(f00, f01));

  FusionSystem q01 = build_fusion({Family::quaternion, 4}, FusionLabel::F01);
  CHECK_FALSE(fusion_isomorphic(f00, q01));  // same order, different family

  FusionSystem d8 = build_fusion({Family::dihedral, 3}, FusionLabel::F00);
  CHECK_THROWS_AS(fusion_isomorphic(f00, d8), std::invalid_argument);
}

TEST_CASE("invalid fusion systems are rejected") {
  CHECK_THROWS_WITH_AS(build_fusion({Family::quaternion, 3}, FusionLabel::F00),
                       doctest::Contains("deferred to prior work"),
                       std::invalid_argument);
  CHECK_THROWS_AS(build_fusion({Family::dihedral, 4}, FusionLabel::F10),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_fusion({Family::quaternion, 5}, FusionLabel::F10),
                  std::invalid_argument);
  auto data = make_group_data({Family::semidihedral, 4});
  CHECK_THROWS_AS(build_fusion({Family::semidihedral, 4}, FusionLabel::F01, data, true),
                  std::invalid_argument);
}
