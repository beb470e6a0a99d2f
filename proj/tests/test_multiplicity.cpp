#include <doctest.h>

#include "blockfun/multiplicity.hpp"
#include "blockfun/oracle.hpp"

using namespace blockfun;

namespace {

long entry(const DecompositionTable& t, IsoTag tag, int order, UPart u,
           SimpleModuleLabel::Kind kind, std::vector<int> exps = {}) {
  SimpleFunctorLabel lab{DeltaPair{IsoType{tag, order}, u},
                         SimpleModuleLabel{kind, std::move(exps), 1}};
  auto it = t.entries.find(lab);
  return it == t.entries.end() ? 0 : it->second;
}

std::array<long, 4> quad_of(const DecompositionTable& t, IsoTag tag, int order) {
  return {entry(t, tag, order, UPart::one, SimpleModuleLabel::s3_trivial),
          entry(t, tag, order, UPart::one, SimpleModuleLabel::s3_sign),
          entry(t, tag, order, UPart::one, SimpleModuleLabel::s3_std2),
          entry(t, tag, order, UPart::u0, SimpleModuleLabel::abelian_character)};
}

}  // namespace

TEST_CASE("number of simple modules per fusion system") {
  CHECK(num_simple_modules({Family::dihedral, 4}, FusionLabel::F00) == 1);
  CHECK(num_simple_modules({Family::dihedral, 4}, FusionLabel::F01) == 2);
  CHECK(num_simple_modules({Family::dihedral, 4}, FusionLabel::F11) == 3);
  CHECK(num_simple_modules({Family::quaternion, 5}, FusionLabel::F11) == 3);
  CHECK(num_simple_modules({Family::semidihedral, 4}, FusionLabel::F00) == 1);
  CHECK(num_simple_modules({Family::semidihedral, 4}, FusionLabel::F10) == 2);
  CHECK(num_simple_modules({Family::semidihedral, 4}, FusionLabel::F11) == 3);
  CHECK_THROWS_AS(num_simple_modules({Family::dihedral, 4}, FusionLabel::F10),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(num_simple_modules({Family::quaternion, 3}, FusionLabel::F00),
                       doctest::Contains("deferred to prior work"), std::invalid_argument);
}

TEST_CASE("local data: center classes of quaternion and semidihedral") {
  SUBCASE("dihedral: all ones") {
    FusionSystem fs = build_fusion({Family::dihedral, 4}, FusionLabel::F11);
    LocalDatum ld = local_datum(fs);
    for (int l : ld.per_class_l) CHECK(l == 1);
  }
  SUBCASE("quaternion center carries l(kGb)") {
    auto data = make_group_data({Family::quaternion, 4});
    for (FusionLabel l : fusion_labels_for(Family::quaternion)) {
      FusionSystem fs = build_fusion({Family::quaternion, 4}, l, data);
      LocalDatum ld = local_datum(fs);
      int zc = fs.f_class_of[data->classes.id_of(center(fs.group()))];
      CHECK(ld.per_class_l[zc] == num_simple_modules(fs.family, l));
    }
  }
  SUBCASE("semidihedral center carries l of F_{0j}") {
    auto data = make_group_data({Family::semidihedral, 4});
    auto center_l = [&](FusionLabel l) {
      FusionSystem fs = build_fusion({Family::semidihedral, 4}, l, data);
      LocalDatum ld = local_datum(fs);
      return ld.per_class_l[fs.f_class_of[data->classes.id_of(center(fs.group()))]];
    };
    CHECK(center_l(FusionLabel::F00) == 1);
    CHECK(center_l(FusionLabel::F01) == 2);
    CHECK(center_l(FusionLabel::F10) == 1);  // l of F00
    CHECK(center_l(FusionLabel::F11) == 2);  // l of F01
  }
}

TEST_CASE("multiplicities of single labels") {
  PairCache cache;
  SUBCASE("top group: 1 for every character of Out(D)") {
    for (FamilyId f : {FamilyId{Family::dihedral, 5}, FamilyId{Family::quaternion, 5},
                       FamilyId{Family::semidihedral, 5}}) {
      FusionSystem fs = build_fusion(f, FusionLabel::F01, make_group_data(f));
      DecompositionTable t = decompose(fs, cache);
      IsoTag top = f.tag == Family::dihedral
                       ? IsoTag::dihedral
                       : (f.tag == Family::quaternion ? IsoTag::quaternion
                                                      : IsoTag::semidihedral);
      const PairData& p = cache.get({top, f.order()});
      int found = 0;
      for (const auto& [lab, m] : t.entries)
        if (lab.pair.L.order == f.order()) {
          CHECK(m == 1);
          ++found;
        }
      CHECK(found == p.out.size());
    }
  }
  SUBCASE("proper dihedral subgroup: 2 or 0 by the kernel predicate") {
    FusionSystem fs = build_fusion({Family::dihedral, 4}, FusionLabel::F00);
    DecompositionTable t = decompose(fs, cache);
    CHECK(entry(t, IsoTag::dihedral, 8, UPart::one, SimpleModuleLabel::abelian_character,
                {0}) == 2);
    CHECK(entry(t, IsoTag::dihedral, 8, UPart::one, SimpleModuleLabel::abelian_character,
                {1}) == 0);
  }
  SUBCASE("incompatible label throws") {
    FusionSystem fs = build_fusion({Family::dihedral, 4}, FusionLabel::F00);
    LocalDatum ld = local_datum(fs);
    SimpleFunctorLabel bad{DeltaPair{IsoType{IsoTag::semidihedral, 16}, UPart::one},
                           SimpleModuleLabel{SimpleModuleLabel::abelian_character, {0}, 1}};
    CHECK_THROWS_AS(multiplicity(fs, ld, bad, cache), std::invalid_argument);
  }
}

TEST_CASE("decomposition tables match the reference values") {
  PairCache cache;
  SUBCASE("dihedral n=3, F00") {
    DecompositionTable t =
        decompose(build_fusion({Family::dihedral, 3}, FusionLabel::F00), cache);
    CHECK(entry(t, IsoTag::trivial, 1, UPart::one, SimpleModuleLabel::abelian_character) == 1);
    CHECK(entry(t, IsoTag::cyclic, 2, UPart::one, SimpleModuleLabel::abelian_character) == 3);
    CHECK(quad_of(t, IsoTag::klein_four, 4) == std::array<long, 4>{2, 0, 2, 0});
  }
  SUBCASE("quaternion n=4") {
    auto data = make_group_data({Family::quaternion, 4});
    DecompositionTable f00 =
        decompose(build_fusion({Family::quaternion, 4}, FusionLabel::F00, data), cache);
    DecompositionTable f01 =
        decompose(build_fusion({Family::quaternion, 4}, FusionLabel::F01, data), cache);
    DecompositionTable f11 =
        decompose(build_fusion({Family::quaternion, 4}, FusionLabel::F11, data), cache);
    CHECK(quad_of(f00, IsoTag::quaternion, 8) == std::array<long, 4>{2, 0, 2, 0});
    CHECK(quad_of(f01, IsoTag::quaternion, 8) == std::array<long, 4>{2, 0, 1, 1});
    CHECK(quad_of(f11, IsoTag::quaternion, 8) == std::array<long, 4>{2, 0, 0, 2});
    // C4 row: 3 / 2 / 1 for the trivial character, 0 for the sign
    CHECK(entry(f00, IsoTag::cyclic, 4, UPart::one, SimpleModuleLabel::abelian_character,
                {0}) == 3);
    CHECK(entry(f01, IsoTag::cyclic, 4, UPart::one, SimpleModuleLabel::abelian_character,
                {0}) == 2);
    CHECK(entry(f11, IsoTag::cyclic, 4, UPart::one, SimpleModuleLabel::abelian_character,
                {0}) == 1);
    CHECK(entry(f11, IsoTag::cyclic, 4, UPart::one, SimpleModuleLabel::abelian_character,
                {1}) == 0);
    // C2 = l(kGb)
    CHECK(entry(f00, IsoTag::cyclic, 2, UPart::one, SimpleModuleLabel::abelian_character) == 1);
    CHECK(entry(f01, IsoTag::cyclic, 2, UPart::one, SimpleModuleLabel::abelian_character) == 2);
    CHECK(entry(f11, IsoTag::cyclic, 2, UPart::one, SimpleModuleLabel::abelian_character) == 3);
  }
  SUBCASE("semidihedral n=4, F10") {
    DecompositionTable t =
        decompose(build_fusion({Family::semidihedral, 4}, FusionLabel::F10), cache);
    CHECK(quad_of(t, IsoTag::klein_four, 4) == std::array<long, 4>{1, 0, 0, 1});
    CHECK(quad_of(t, IsoTag::quaternion, 8) == std::array<long, 4>{1, 0, 1, 0});
    CHECK(entry(t, IsoTag::cyclic, 2, UPart::one, SimpleModuleLabel::abelian_character) == 1);
    CHECK(entry(t, IsoTag::trivial, 1, UPart::one, SimpleModuleLabel::abelian_character) == 2);
  }
  SUBCASE("m(S_{1,1,F}) equals the number of simple modules") {
    for (FamilyId f : {FamilyId{Family::dihedral, 4}, FamilyId{Family::quaternion, 5},
                       FamilyId{Family::semidihedral, 5}}) {
      auto data = make_group_data(f);
      for (FusionLabel l : fusion_labels_for(f.tag)) {
        DecompositionTable t = decompose(build_fusion(f, l, data), cache);
        CHECK(entry(t, IsoTag::trivial, 1, UPart::one,
                    SimpleModuleLabel::abelian_character) == num_simple_modules(f, l));
      }
    }
  }
}

TEST_CASE("functorial equivalence decisions") {
  PairCache cache;
  auto data = make_group_data({Family::dihedral, 4});
  DecompositionTable f00 =
      decompose(build_fusion({Family::dihedral, 4}, FusionLabel::F00, data), cache);
  DecompositionTable f01 =
      decompose(build_fusion({Family::dihedral, 4}, FusionLabel::F01, data), cache);
  DecompositionTable f01s =
      decompose(build_fusion({Family::dihedral, 4}, FusionLabel::F01, data, true), cache);
  DecompositionTable f11 =
      decompose(build_fusion({Family::dihedral, 4}, FusionLabel::F11, data), cache);

  CHECK(functorially_equivalent(f00, f00));
  CHECK(functorially_equivalent(f01, f01s));  // opposite enhanced class
  CHECK_FALSE(functorially_equivalent(f00, f11));
  auto diff = first_difference(f00, f11);
  REQUIRE(diff.has_value());
  CHECK(diff->first.pair.L.tag == IsoTag::trivial);  // 1 vs 3 at S_{1,1,F}
  CHECK(diff->second == std::pair<long, long>{1, 3});
}

TEST_CASE("equivalence matrix equals the fusion-isomorphism matrix") {
  PairCache cache;
  for (FamilyId f : {FamilyId{Family::dihedral, 4}, FamilyId{Family::quaternion, 4},
                     FamilyId{Family::semidihedral, 4}, FamilyId{Family::semidihedral, 5}}) {
    auto data = make_group_data(f);
    std::vector<FusionSystem> systems;
    std::vector<DecompositionTable> tables;
    for (FusionLabel l : fusion_labels_for(f.tag)) {
      systems.push_back(build_fusion(f, l, data));
      tables.push_back(decompose(systems.back(), cache));
    }
    for (size_t a = 0; a < systems.size(); ++a)
      for (size_t b = 0; b < systems.size(); ++b)
        CHECK(functorially_equivalent(tables[a], tables[b]) ==
              fusion_isomorphic(systems[a], systems[b]));
  }
}

TEST_CASE("golden table expansion matches the engine on a sample") {
  GoldenTable golden = load_golden(default_golden_path());
  PairCache cache;
  for (FamilyId f : {FamilyId{Family::dihedral, 3}, FamilyId{Family::quaternion, 4},
                     FamilyId{Family::semidihedral, 4}}) {
    auto data = make_group_data(f);
    for (FusionLabel l : fusion_labels_for(f.tag)) {
      GoldenCellReport rep = verify_golden_cell(golden, f, l, data, cache);
      for (const auto& mm : rep.mismatches)
        MESSAGE("mismatch ", mm.row_id, " at ", mm.label.str(), ": expected ",
                mm.expected, " got ", mm.actual);
      CHECK(rep.ok());
    }
  }
}
