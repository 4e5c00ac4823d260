#include <gtest/gtest.h>

#include "support.hpp"

using namespace omlkit;
using namespace testing_support;

namespace {

// 0 < a, a' < 1 with both middle elements incomparable.
FiniteOrtholattice four() { return validate(4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}, {3, 2, 1, 0}); }

}  // namespace

TEST(Lattice, ValidatesSmallBooleanAlgebra) {
  const auto L = four();
  EXPECT_EQ(L.size(), 4);
  EXPECT_TRUE(L.is_orthomodular());
  EXPECT_EQ(L.meet(1, 2), 0);
  EXPECT_EQ(L.join(1, 2), 3);
  EXPECT_EQ(L.atoms(), bit(1) | bit(2));
}

TEST(Lattice, RejectsNonReflexive) {
  EXPECT_EQ(kind_of([] { validate(2, {{0, 1}, {1, 1}}, {1, 0}); }), ErrorKind::NotAPartialOrder);
}

TEST(Lattice, RejectsNonAntisymmetric) {
  EXPECT_EQ(kind_of([] { validate(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {1, 0}); }), ErrorKind::NotAPartialOrder);
}

TEST(Lattice, RejectsNonTransitive) {
  EXPECT_EQ(kind_of([] { validate(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}, {2, 1, 0}); }),
            ErrorKind::NotAPartialOrder);
}

TEST(Lattice, RejectsOutOfRangePair) {
  EXPECT_EQ(kind_of([] { validate(2, {{0, 0}, {1, 1}, {0, 5}}, {1, 0}); }), ErrorKind::NotAPartialOrder);
}

TEST(Lattice, RejectsMissingBounds) {
  // Two incomparable elements only.
  EXPECT_EQ(kind_of([] { validate(2, {{0, 0}, {1, 1}}, {1, 0}); }), ErrorKind::NoBoundedLattice);
}

TEST(Lattice, RejectsMissingJoin) {
  // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
  const std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(kind_of([&] { from_covers(6, covers, {5, 4, 3, 2, 1, 0}); }), ErrorKind::NoBoundedLattice);
}

TEST(Lattice, RejectsBadOrthocomplement) {
  EXPECT_EQ(kind_of([] { validate(4, four().leq_pairs(), {3, 1, 2, 0}); }), ErrorKind::BadOrthocomplement);
  EXPECT_EQ(kind_of([] { validate(4, four().leq_pairs(), {3, 2, 0, 1}); }), ErrorKind::BadOrthocomplement);
  // 0 < 1 < 2 < 3 with 1' = 2: an involution that is not a complement.
  EXPECT_EQ(kind_of([] { from_covers(4, {{0, 1}, {1, 2}, {2, 3}}, {3, 2, 1, 0}); }), ErrorKind::BadOrthocomplement);
}

TEST(Lattice, RejectsOversize) {
  EXPECT_EQ(kind_of([] { validate(65, {}, {}); }), ErrorKind::SizeCap);
  EXPECT_EQ(kind_of([] { catalog("2^7"); }), ErrorKind::SizeCap);
}

TEST(Lattice, BenzeneIsOrtholatticeOnly) {
  const auto L = benzene();
  EXPECT_EQ(L.size(), 6);
  EXPECT_FALSE(L.is_orthomodular());
  EXPECT_EQ(L.flavor(), Flavor::Ortholattice);
  EXPECT_EQ(kind_of([&] { commutes(L, 1, 2); }), ErrorKind::FlavorError);
  EXPECT_EQ(kind_of([&] { blocks(L); }), ErrorKind::FlavorError);
}

TEST(Lattice, Example22Shape) {
  const auto L = example22();
  EXPECT_EQ(L.size(), 12);
  EXPECT_TRUE(L.is_orthomodular());
  EXPECT_EQ(popcount(L.atoms()), 5);
  const auto bl = blocks(L);
  ASSERT_EQ(bl.size(), 2u);
  for (Mask b : bl) EXPECT_EQ(popcount(b), 8);
  // c is the shared atom
  EXPECT_TRUE(has(bl[0] & bl[1], 3));
}

TEST(Lattice, CatalogSizes) {
  EXPECT_EQ(catalog("2^4").size(), 16);
  EXPECT_EQ(catalog("B2^2").size(), 4);
  EXPECT_EQ(catalog("MO3").size(), 8);
  EXPECT_EQ(catalog("MO2x2").size(), 12);
  EXPECT_EQ(catalog("hsum(2^3, MO2)").size(), 12);
  EXPECT_EQ(kind_of([] { catalog("MO"); }), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of([] { catalog("hsum(2^2,benzene)"); }), ErrorKind::UnknownName);
  for (const auto& name : catalog_oml_names()) EXPECT_TRUE(catalog(name).is_orthomodular()) << name;
}

TEST(Lattice, TablesMatchBruteForce) {
  for (int round = 0; round < 20; ++round) {
    const auto L = random_oml(rng());
    for (int a = 0; a < L.size(); ++a) {
      for (int b = 0; b < L.size(); ++b) {
        ASSERT_EQ(L.join(a, b), slow_join(L, a, b));
        ASSERT_EQ(L.meet(a, b), slow_meet(L, a, b));
      }
    }
  }
}

TEST(Lattice, CommutationMatchesGeneratedBoolean) {
  for (int round = 0; round < 25; ++round) {
    const auto L = random_oml(rng());
    for (int a = 0; a < L.size(); ++a) {
      for (int b = 0; b < L.size(); ++b) {
        const Mask g = generated_subalgebra(L, bit(a) | bit(b));
        ASSERT_EQ(commutes(L, a, b), distributive(L, g)) << L.name() << " " << a << " " << b;
        ASSERT_EQ(commutes(L, a, b), commutes(L, b, a));
      }
    }
  }
}

TEST(Lattice, GeneratedSubalgebraIsClosure) {
  auto& gen = rng();
  for (int round = 0; round < 40; ++round) {
    const auto L = random_oml(gen);
    std::uniform_int_distribution<Mask> pick(0, L.all());
    const Mask s = pick(gen) & L.all();
    const Mask t = s | (pick(gen) & L.all());
    const Mask gs = generated_subalgebra(L, s);
    EXPECT_TRUE(is_subset(s, gs));
    EXPECT_EQ(generated_subalgebra(L, gs), gs);
    EXPECT_TRUE(is_subset(gs, generated_subalgebra(L, t)));
    EXPECT_TRUE(closed(L, gs));
    EXPECT_TRUE(is_subalgebra(L, gs));
  }
}

TEST(Lattice, GeneratedSubalgebraIsLeast) {
  auto& gen = rng();
  for (const auto& name : {"2^3", "MO3", "example22", "hsum(2^3,2^3)"}) {
    const auto L = catalog(name);
    const auto all = brute_subalgebras(L, false);
    std::uniform_int_distribution<Mask> pick(0, L.all());
    for (int round = 0; round < 30; ++round) {
      const Mask s = pick(gen) & pick(gen);
      Mask meet = L.all();
      for (Mask t : all)
        if (is_subset(s, t)) meet &= t;
      EXPECT_EQ(generated_subalgebra(L, s), meet) << name;
    }
  }
}

TEST(Lattice, IsBooleanMatchesDistributivity) {
  for (const auto& name : catalog_oml_names()) {
    const auto L = catalog(name);
    if (L.size() > 14) continue;
    for (Mask s : brute_subalgebras(L, false)) EXPECT_EQ(is_boolean(L, s), distributive(L, s)) << name;
  }
}

TEST(Lattice, BlocksAreMaximalBooleanSubalgebras) {
  for (const auto& name : catalog_oml_names()) {
    const auto L = catalog(name);
    if (L.size() > 14) continue;
    const auto boolean = brute_subalgebras(L, true);
    std::vector<Mask> maximal;
    for (Mask s : boolean) {
      bool top = true;
      for (Mask t : boolean) top = top && (t == s || !is_subset(s, t));
      if (top) maximal.push_back(s);
    }
    EXPECT_EQ(blocks(L), maximal) << name;
  }
}

TEST(Lattice, MorphismClassification) {
  const auto B2 = boolean_algebra(2);
  const auto B3 = boolean_algebra(3);
  EXPECT_EQ(classify_map(B2, B2, {0, 2, 1, 3}), MorphismKind::Iso);
  // atoms 1, 2 of 2^2 go to {1}, {2,4} of 2^3
  EXPECT_EQ(classify_map(B2, B3, {0, 1, 6, 7}), MorphismKind::Embedding);
  EXPECT_EQ(classify_map(B3, B2, {0, 1, 2, 3, 2, 3, 3, 3}), std::nullopt);
  EXPECT_EQ(classify_map(B3, B2, {0, 0, 0, 0, 3, 3, 3, 3}), MorphismKind::Hom);
  EXPECT_FALSE(classify_map(B2, B2, {0, 1, 1, 3}).has_value());
  EXPECT_FALSE(classify_map(B2, B2, {0, 1, 2}).has_value());
  const Morphism swap{{0, 2, 1, 3}, MorphismKind::Iso};
  EXPECT_EQ(compose(swap, swap), identity_morphism(B2));
  EXPECT_TRUE(is_valid_morphism(B2, B2, swap));
  EXPECT_FALSE(is_valid_morphism(B2, B3, Morphism{{0, 1, 6, 7}, MorphismKind::Iso}));
}

TEST(Lattice, AutomorphismCountsMatchBruteForce) {
  for (const auto& name : {"2^2", "2^3", "MO2", "MO3", "MO4", "example22", "benzene"}) {
    const auto L = catalog(name);
    const auto found = automorphisms(L);
    const auto brute = brute_automorphisms(L);
    EXPECT_EQ(maps_of(found), std::set<std::vector<int>>(brute.begin(), brute.end())) << name;
  }
  EXPECT_EQ(automorphisms(catalog("MO3")).size(), 48u);
  EXPECT_EQ(automorphisms(catalog("2^4")).size(), 24u);
}

TEST(Lattice, FindIsomorphismSymmetricAndValid) {
  auto& gen = rng();
  for (int round = 0; round < 30; ++round) {
    const auto L = random_oml(gen);
    const auto M = random_oml(gen);
    const auto f = find_isomorphism(L, M);
    const auto g = find_isomorphism(M, L);
    EXPECT_EQ(f.has_value(), g.has_value());
    if (f) {
      EXPECT_EQ(classify_map(L, M, f->map), MorphismKind::Iso);
      EXPECT_EQ(classify_map(M, L, g->map), MorphismKind::Iso);
    }
    const auto R = relabeled(L, bound_fixing_perm(L.size(), gen));
    EXPECT_TRUE(find_isomorphism(L, R).has_value());
  }
  EXPECT_FALSE(find_isomorphism(catalog("MO3"), catalog("2^3")).has_value());
  // two 8-element blocks sharing one atom either way
  EXPECT_TRUE(find_isomorphism(catalog("MO2x2"), catalog("example22")).has_value());
}

TEST(Lattice, RestrictionOfBlockIsBoolean) {
  const auto L = example22();
  for (Mask b : blocks(L)) {
    const auto R = restrict_to(L, b);
    EXPECT_EQ(R.size(), 8);
    EXPECT_TRUE(is_boolean_lattice(R));
  }
  EXPECT_FALSE(is_boolean_lattice(L));
}
