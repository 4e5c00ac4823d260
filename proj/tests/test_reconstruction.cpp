#include <gtest/gtest.h>

#include "support.hpp"

using namespace omlkit;
using namespace testing_support;

TEST(Reconstruction, CatalogRoundTrip) {
  for (const auto& name : catalog_oml_names()) {
    const auto L = catalog(name);
    const auto R = reconstruct(bsub(L).order());
    EXPECT_EQ(R.size(), L.size()) << name;
    EXPECT_TRUE(R.is_orthomodular()) << name;
    EXPECT_TRUE(find_isomorphism(L, R).has_value()) << name;
  }
}

TEST(Reconstruction, RelabelingInvariance) {
  auto& gen = rng();
  for (int round = 0; round < 25; ++round) {
    const auto L = random_oml(gen);
    const auto P = bsub(L).order();
    std::vector<Node> perm(P.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    const auto R1 = reconstruct(P);
    const auto R2 = reconstruct(relabel(P, perm));
    EXPECT_TRUE(find_isomorphism(R1, R2).has_value());
    EXPECT_TRUE(find_isomorphism(L, R2).has_value()) << L.name();
  }
}

TEST(Reconstruction, Example22Frame) {
  const auto P = bsub(example22()).order();
  const auto classes = classify_atoms(P);
  // a, b, c, d, e split as non-maximal atoms of BSub
  EXPECT_EQ(classes.u.size() + classes.v.size(), 5u);
  const auto result = reconstruct_with_frame(P);
  EXPECT_EQ(result.frame.size(), 5);
  EXPECT_EQ(result.frame.edges().size(), 6u);
  EXPECT_EQ(result.lattice.size(), 12);
}

TEST(Reconstruction, FourElementBlocksDoublePoints) {
  // BSub(MO3) is a bottom under three maximal atoms; each gives two points.
  const auto result = reconstruct_with_frame(bsub(mo(3)).order());
  EXPECT_EQ(result.frame.size(), 6);
  EXPECT_EQ(result.frame.edges().size(), 3u);
  EXPECT_EQ(result.lattice.size(), 8);
}

TEST(Reconstruction, SinglePoint) {
  const auto one = AbstractPoset::from_relation(1, [](Node, Node) { return true; });
  const auto R = reconstruct(one);
  EXPECT_EQ(R.size(), 2);
  EXPECT_TRUE(find_isomorphism(R, boolean_algebra(1)).has_value());
}

TEST(Reconstruction, OrthoclosedSetsOfSmallFrame) {
  // Three mutually orthogonal points: the closed sets are all subsets.
  OrthoFrame frame;
  frame.points = {{1, 0}, {2, 0}, {3, 0}};
  frame.perp = {0b110, 0b101, 0b011};
  const auto L = orthoclosed_lattice(frame);
  EXPECT_TRUE(find_isomorphism(L, boolean_algebra(3)).has_value());
}

TEST(Reconstruction, Errors) {
  const auto anti = AbstractPoset::from_relation(2, [](Node i, Node j) { return i == j; });
  EXPECT_EQ(kind_of([&] { reconstruct(anti); }), ErrorKind::NoLeastElement);

  OrthoFrame wide;
  wide.points.resize(21);
  wide.perp.assign(21, 0);
  EXPECT_EQ(kind_of([&] { orthoclosed_lattice(wide); }), ErrorKind::FrameCap);
}

TEST(Reconstruction, NonBSubPosetDoesNotRoundTrip) {
  // A 3-chain is not BSub of any OML; whatever comes back has a different BSub.
  const auto chain = AbstractPoset::from_relation(3, [](Node i, Node j) { return i <= j; });
  try {
    const auto R = reconstruct(chain);
    EXPECT_FALSE(poset_isomorphic(bsub(R).order(), chain).has_value());
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedInput);
  }
}
