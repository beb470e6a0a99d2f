#include <doctest.h>

#include "blockfun/families.hpp"
#include "blockfun/oracle.hpp"

using namespace blockfun;

TEST_CASE("automorphism counts match the closed forms") {
  CHECK(automorphism_group(build({Family::klein_four, 2})).size() == 6);
  CHECK(automorphism_group(build({Family::quaternion, 3})).size() == 24);
  CHECK(automorphism_group(build({Family::dihedral, 4})).size() == 32);  // 2^{2n-3}
  for (int n = 3; n <= 6; ++n)
    CHECK(long(automorphism_group(build({Family::dihedral, n})).size()) ==
          expected_aut_order({Family::dihedral, n}));
  for (int n = 4; n <= 6; ++n) {
    CHECK(long(automorphism_group(build({Family::quaternion, n})).size()) ==
          expected_aut_order({Family::quaternion, n}));
    CHECK(long(automorphism_group(build({Family::semidihedral, n})).size()) ==
          expected_aut_order({Family::semidihedral, n}));
  }
  for (int m = 1; m <= 6; ++m)
    CHECK(long(automorphism_group(build({Family::cyclic, m})).size()) ==
          (m == 1 ? 1 : 1L << (m - 1)));
}

TEST_CASE("brute-force bijection count agrees with generator-image search") {
  for (FamilyId f : {FamilyId{Family::dihedral, 3}, FamilyId{Family::dihedral, 5},
                     FamilyId{Family::quaternion, 3}, FamilyId{Family::quaternion, 5},
                     FamilyId{Family::semidihedral, 4}, FamilyId{Family::klein_four, 2},
                     FamilyId{Family::cyclic, 4}}) {
    Group g = build(f);
    CHECK(brute_force_aut_count(g) == long(automorphism_group(g).size()));
  }
  CHECK(brute_force_aut_count(build({Family::cyclic, 1})) == 1);
  CHECK_THROWS_AS(brute_force_aut_count(build({Family::dihedral, 7})),
                  std::invalid_argument);
}

TEST_CASE("inner automorphisms and coset identification") {
  Group g = build({Family::dihedral, 4});
  auto inns = inner_automorphisms(g);
  CHECK(inns.size() == 8);  // D16 / Z
  OutGroup out = out_group(g);
  CHECK(out.size() == 4);
  for (int x = 0; x < g.order; ++x) CHECK(is_inner(out, conjugation_aut(g, x)));

  Automorphism bogus{&g, std::vector<int>(g.order)};
  std::iota(bogus.img.begin(), bogus.img.end(), 0);
  std::swap(bogus.img[2], bogus.img[4]);
  CHECK_THROWS_AS(outer_class_of(out, bogus), std::invalid_argument);
}

TEST_CASE("Out structures of the three families") {
  SUBCASE("dihedral and quaternion: abelian 2-groups, invariant factors") {
    OutGroup d16 = out_group(build({Family::dihedral, 4}));
    CHECK(d16.is_abelian);
    CHECK(d16.factor_orders == std::vector<int>{2, 2});
    OutGroup d32 = out_group(build({Family::dihedral, 5}));
    CHECK(d32.factor_orders == std::vector<int>{4, 2});
    OutGroup q32 = out_group(build({Family::quaternion, 5}));
    CHECK(q32.is_abelian);
    CHECK(q32.factor_orders == std::vector<int>{4, 2});
  }
  SUBCASE("semidihedral: cyclic of order 2^{n-3} generated by f_{0,5}") {
    for (int n = 4; n <= 6; ++n)
      CHECK(check_automorphism_structure({Family::semidihedral, n}).empty());
    OutGroup sd32 = out_group(build({Family::semidihedral, 5}));
    CHECK(sd32.factor_orders == std::vector<int>{4});
  }
  SUBCASE("non-abelian cases are S3") {
    OutGroup q8 = out_group(build({Family::quaternion, 3}));
    CHECK(q8.iso == OutIso::s3);
    CHECK(q8.size() == 6);
    OutGroup v4 = out_group(build({Family::klein_four, 2}));
    CHECK(v4.iso == OutIso::s3);
    CHECK(v4.size() == 6);  // Inn(V4) = 1
  }
  SUBCASE("Aut of the family groups are 2-groups") {
    for (FamilyId f : {FamilyId{Family::dihedral, 5}, FamilyId{Family::quaternion, 5},
                       FamilyId{Family::semidihedral, 5}}) {
      long n = long(automorphism_group(build(f)).size());
      CHECK((n & (n - 1)) == 0);
    }
  }
}

TEST_CASE("generator-image method extends the structural check to order 256") {
  for (FamilyId f : {FamilyId{Family::dihedral, 8}, FamilyId{Family::quaternion, 8},
                     FamilyId{Family::semidihedral, 8}})
    CHECK(long(automorphism_group(build(f)).size()) == expected_aut_order(f));
  CHECK_THROWS_AS(automorphism_group(build({Family::dihedral, 9})),
                  std::invalid_argument);
}

TEST_CASE("dihedral f_{1,1} is outer, semidihedral f_{2^{n-2}-2,2^{n-2}-1} is inner") {
  {
    FamilyId f{Family::dihedral, 5};
    Group g = build(f);
    OutGroup out = out_group(g);
    CHECK_FALSE(is_inner(out, distinguished_epsilon(f, g)));
  }
  {
    FamilyId f{Family::semidihedral, 5};
    Group g = build(f);
    int a = (1 << (f.n - 2)) - 2, b = (1 << (f.n - 2)) - 1;
    // f_{a,b}: s -> s^b, t -> t s^a
    auto fab = automorphism_from_generator_images(g, {g.power(2, b), g.mul(1, g.power(2, a))});
    REQUIRE(fab.has_value());
    OutGroup out = out_group(g);
    CHECK(is_inner(out, *fab));
    CHECK(*fab == conjugation_aut(g, g.mul(2, 1)));  // conjugation by s t
  }
}

TEST_CASE("automorphism_from_generator_images rejects non-homomorphic images") {
  Group g = build({Family::dihedral, 3});
  // s -> t cannot extend (wrong order)
  CHECK_FALSE(automorphism_from_generator_images(g, {1, 2}).has_value());
  auto id = automorphism_from_generator_images(g, {2, 1});
  REQUIRE(id.has_value());
  CHECK(*id == identity_automorphism(g));
}
