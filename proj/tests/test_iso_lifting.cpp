#include <gtest/gtest.h>

#include "support.hpp"

using namespace omlkit;
using namespace testing_support;

namespace {

// Groups lattice automorphisms by the node map they induce on P.
std::map<std::vector<Node>, std::set<std::vector<int>>> by_induced_map(const SubalgebraPoset& P) {
  std::map<std::vector<Node>, std::set<std::vector<int>>> out;
  for (const auto& psi : brute_automorphisms(P.owner())) out[induced(P, P, psi)].insert(psi);
  return out;
}

}  // namespace

TEST(IsoLifting, BSubLiftsAreExactlyTheInducingAutomorphisms) {
  for (const auto& name : {"2^2", "2^3", "MO2", "MO3", "MO4", "example22", "hsum(2^2,2^3)"}) {
    const auto P = bsub(catalog(name));
    for (const auto& [phi, psis] : by_induced_map(P)) {
      EXPECT_EQ(maps_of(lift_bsub_iso(P, P, phi)), psis) << name;
    }
  }
}

TEST(IsoLifting, SubLiftsAreExactlyTheInducingAutomorphisms) {
  for (const auto& name : {"2^3", "MO2", "MO3", "example22"}) {
    const auto P = sub(catalog(name));
    for (const auto& [phi, psis] : by_induced_map(P)) {
      EXPECT_EQ(maps_of(lift_sub_iso(P, P, phi)), psis) << name;
    }
  }
}

TEST(IsoLifting, FourElementBlockCount) {
  for (int k = 1; k <= 5; ++k) {
    const auto P = bsub(mo(k));
    std::vector<Node> id(P.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(lift_bsub_iso(P, P, id).size(), std::size_t{1} << k) << k;
    EXPECT_EQ(lift_bsub_iso(P, P, id, LiftOptions{true}).size(), 1u);
  }
}

TEST(IsoLifting, TooManyFourElementBlocks) {
  const auto P = bsub(mo(7));
  std::vector<Node> id(P.size());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(kind_of([&] { lift_bsub_iso(P, P, id); }), ErrorKind::Unsupported);
  EXPECT_EQ(lift_bsub_iso(P, P, id, LiftOptions{true}).size(), 1u);
}

TEST(IsoLifting, LiftsBetweenRelabeledCopies) {
  auto& gen = rng();
  for (int round = 0; round < 20; ++round) {
    const auto L = random_oml(gen);
    const auto M = relabeled(L, bound_fixing_perm(L.size(), gen));
    const auto P = bsub(L);
    const auto Q = bsub(M);
    const auto phi = poset_isomorphic(P.order(), Q.order());
    ASSERT_TRUE(phi.has_value());
    const auto lifts = lift_bsub_iso(P, Q, *phi, LiftOptions{true});
    ASSERT_EQ(lifts.size(), 1u);
    EXPECT_EQ(classify_map(L, M, lifts[0].map), MorphismKind::Iso);
    EXPECT_EQ(induced(P, Q, lifts[0].map), *phi);
  }
}

TEST(IsoLifting, Errors) {
  const auto B = bsub(benzene());
  std::vector<Node> id(B.size());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(kind_of([&] { lift_bsub_iso(B, B, id); }), ErrorKind::FlavorError);

  const auto P = bsub(example22());
  std::vector<Node> flat(P.size(), 0);
  EXPECT_EQ(kind_of([&] { lift_bsub_iso(P, P, flat); }), ErrorKind::NotAnIso);
}

TEST(IsoLifting, BooleanNodesRecognizedByOrder) {
  auto& gen = rng();
  for (int round = 0; round < 10; ++round) {
    const auto L = random_oml(gen);
    if (L.size() > 16) continue;
    const auto P = sub(L);
    const auto flags = boolean_node_flags(P.order());
    for (Node x = 0; x < P.size(); ++x) EXPECT_EQ(flags[x], distributive(L, P.node(x))) << L.name();
  }
  const auto P = sub(example22());
  EXPECT_FALSE(recognize_boolean_node(P, *P.order().greatest()));
  EXPECT_TRUE(recognize_boolean_node(P, *P.order().least()));
}

TEST(IsoLifting, DeterminationOnCatalogPairs) {
  const auto names = catalog_oml_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      const auto report = verify_determination(catalog(names[i]), catalog(names[j]));
      EXPECT_TRUE(report.consistent) << names[i] << " vs " << names[j];
      const bool same = i == j || (names[i] == "MO2x2" && names[j] == "example22");
      EXPECT_EQ(report.posets_isomorphic, same) << names[i] << " vs " << names[j];
    }
  }
}

TEST(IsoLifting, DeterminationOutsideHypothesis) {
  const auto report = verify_determination(benzene(), benzene());
  EXPECT_FALSE(report.both_orthomodular);
  EXPECT_NE(report.summary().find("outside OML hypothesis"), std::string::npos);
  // benzene and MO2 share the BSub shape but are not isomorphic
  const auto cross = verify_determination(benzene(), mo(2));
  EXPECT_TRUE(cross.posets_isomorphic);
  EXPECT_FALSE(cross.lattices_isomorphic);
}
