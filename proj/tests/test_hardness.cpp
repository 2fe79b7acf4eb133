#include <gtest/gtest.h>

#include <algorithm>

#include "recolour/hardness.hpp"
#include "recolour/oracle.hpp"

namespace recolour {
namespace {

HittingSetInstance hs(std::size_t n, std::vector<std::vector<std::size_t>> fam,
                      std::size_t p) {
  HittingSetInstance h;
  h.universe_size = n;
  h.family = std::move(fam);
  h.budget = p;
  return h;
}

HittingSetInstance overlapping_pair() { return hs(4, {{1, 2, 4}, {2, 3, 4}}, 1); }

// Colours left to v once its clique neighbours are taken into account.
std::vector<Colour> palette(const GadgetInstance& gi, Vertex v) {
  std::vector<Colour> out;
  for (int i = 1; i <= gi.k(); ++i) {
    if (!gi.instance.graph.adjacent(v, gi.clique(i))) out.push_back(i);
  }
  return out;
}

Vertex by_role(const GadgetInstance& gi, const std::string& label) {
  const auto it = std::find(gi.roles.begin(), gi.roles.end(), label);
  EXPECT_NE(it, gi.roles.end()) << label;
  return static_cast<Vertex>(it - gi.roles.begin());
}

TEST(Preprocess, DistinctSignaturesArePadded) {
  const auto p = preprocess(hs(3, {{1, 2}, {1, 3}}, 1));
  EXPECT_EQ(p.instance.universe_size, 4u);
  EXPECT_EQ(p.instance.family, (std::vector<std::vector<std::size_t>>{{1, 2}, {1, 3}}));
  EXPECT_EQ(p.origin, (std::vector<std::size_t>{1, 2, 3, 0}));
}

TEST(Preprocess, SharedSignatureCollapses) {
  const auto p = preprocess(hs(2, {{1, 2}}, 1));
  EXPECT_EQ(p.instance.universe_size, 2u);
  EXPECT_EQ(p.instance.family, (std::vector<std::vector<std::size_t>>{{1}}));
  EXPECT_EQ(p.origin, (std::vector<std::size_t>{1, 0}));
}

TEST(Preprocess, AlreadyReducedIsUnchanged) {
  const auto in = hs(4, {{1, 2}, {2, 3}, {3, 4}}, 2);
  const auto p = preprocess(in);
  EXPECT_EQ(p.instance.universe_size, 4u);
  EXPECT_EQ(p.instance.family, in.family);
  EXPECT_EQ(p.instance.budget, 2u);
}

TEST(Preprocess, EmptyFamilyIsAnError) {
  EXPECT_THROW(preprocess(hs(2, {}, 1)), RecolourError);
}

TEST(Preprocess, InvalidSetsAreErrors) {
  EXPECT_THROW(preprocess(hs(2, {{}}, 1)), RecolourError);
  EXPECT_THROW(preprocess(hs(2, {{3}}, 1)), RecolourError);
}

TEST(Generate, TwoSingletons) {
  const auto gi = generate(hs(2, {{1}, {2}}, 2), 4);
  EXPECT_EQ(gi.instance.graph.num_vertices(), 16u);
  EXPECT_EQ(gi.instance.ell, 19u);
  EXPECT_EQ(gi.r, 1u);
}

TEST(Generate, OverlappingPairShape) {
  const auto gi = generate(overlapping_pair(), 4);
  EXPECT_EQ(gi.instance.graph.num_vertices(), 34u);
  EXPECT_EQ(gi.instance.ell, 3u + 2u + 2u * 2u * 3u * 2u);
  for (std::size_t f = 1; f <= 2; ++f) {
    for (const char* tag : {"_0_1", "_1_1", "_1_2"}) {
      for (const char* part : {"a", "b", "c", "d"}) {
        by_role(gi, part + ("_" + std::to_string(f)) + tag);
      }
    }
  }
  // element 3 is not in F, so a_{F,1,2} keeps only colour 2
  EXPECT_EQ(palette(gi, by_role(gi, "a_1_1_2")), (std::vector<Colour>{2}));
  // element 3 is in F', so its copy keeps {2, 4}
  EXPECT_EQ(palette(gi, by_role(gi, "a_2_1_2")), (std::vector<Colour>{2, 4}));
  EXPECT_EQ(palette(gi, GadgetInstance::s), (std::vector<Colour>{2, 3}));
  EXPECT_EQ(palette(gi, GadgetInstance::t), (std::vector<Colour>{2, 3, 4}));
  EXPECT_EQ(palette(gi, gi.element(1)), (std::vector<Colour>{1, 4}));
  EXPECT_EQ(palette(gi, by_role(gi, "c_1_0_1")), (std::vector<Colour>{1, 2, 3}));
  EXPECT_EQ(palette(gi, by_role(gi, "d_1_1_1")), (std::vector<Colour>{1, 4}));
  // claw tree wiring
  const Claw root = gi.claw(0, 0, 1);
  EXPECT_TRUE(gi.instance.graph.adjacent(root.d, GadgetInstance::t));
  EXPECT_TRUE(gi.instance.graph.adjacent(gi.claw(0, 1, 1).d, root.a));
  EXPECT_TRUE(gi.instance.graph.adjacent(gi.claw(0, 1, 2).d, root.b));
  EXPECT_TRUE(gi.instance.graph.adjacent(gi.claw(0, 1, 2).a, gi.element(3)));
  EXPECT_TRUE(gi.instance.graph.adjacent(gi.claw(0, 1, 2).b, gi.element(4)));
}

TEST(Generate, ColouringsDifferOnlyAtTerminals) {
  for (int k : {4, 5, 6}) {
    const auto gi = generate(overlapping_pair(), k);
    EXPECT_TRUE(is_proper(gi.instance.graph, gi.instance.alpha));
    EXPECT_TRUE(is_proper(gi.instance.graph, gi.instance.beta));
    std::vector<Vertex> diff;
    for (Vertex v = 0; v < gi.instance.graph.num_vertices(); ++v) {
      if (gi.instance.alpha[v] != gi.instance.beta[v]) diff.push_back(v);
    }
    EXPECT_EQ(diff, (std::vector<Vertex>{GadgetInstance::s, GadgetInstance::t}));
    EXPECT_EQ(gi.instance.graph.num_vertices(), 2u + k + 4u + 24u);
  }
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate(overlapping_pair(), 3), RecolourError);
  EXPECT_THROW(generate(hs(3, {{1}}, 1), 4), RecolourError);
  EXPECT_THROW(generate(hs(2, {}, 1), 4), RecolourError);
}

TEST(BruteForce, Examples) {
  EXPECT_FALSE(brute_force_hitting_set(hs(2, {{1}, {2}}, 1)).has_value());
  EXPECT_EQ(brute_force_hitting_set(hs(2, {{1, 2}}, 1)), (std::vector<std::size_t>{1}));
  EXPECT_FALSE(brute_force_hitting_set(hs(1, {{1}}, 0)).has_value());
  EXPECT_EQ(brute_force_hitting_set(hs(2, {{1}, {2}}, 2)), (std::vector<std::size_t>{1, 2}));
}

TEST(BruteForce, CapIsAnError) {
  EXPECT_THROW(brute_force_hitting_set(hs(30, {{1}}, 1)), RecolourError);
}

TEST(Constructive, OverlappingPairHitByTwo) {
  const auto gi = generate(overlapping_pair(), 4);
  const auto w = constructive_witness(gi, {2});
  const auto& in = gi.instance;
  EXPECT_TRUE(verify_recolouring(in.graph, in.k, in.alpha, in.beta, w).accepted);
  EXPECT_LE(w.size(), in.ell);
}

TEST(Constructive, OverlappingPairHitByFour) {
  const auto gi = generate(overlapping_pair(), 5);
  const auto w = constructive_witness(gi, {4});
  const auto& in = gi.instance;
  EXPECT_TRUE(verify_recolouring(in.graph, in.k, in.alpha, in.beta, w).accepted);
  EXPECT_LE(w.size(), in.ell);
}

TEST(Constructive, RejectsSetsThatMissOrOverspend) {
  const auto gi = generate(hs(2, {{2}}, 1), 4);
  EXPECT_THROW(constructive_witness(gi, {1}), RecolourError);
  EXPECT_THROW(constructive_witness(gi, {1, 2}), RecolourError);
  EXPECT_THROW(constructive_witness(gi, {3}), RecolourError);
}

TEST(Soundness, TwoSingletonsNeedBudgetTwo) {
  for (std::size_t p : {1u, 2u}) {
    const auto gi = generate(hs(2, {{1}, {2}}, p), 4);
    const auto r = oracle_distance(gi.instance);
    ASSERT_TRUE(r.exhausted || r.distance.has_value());
    const bool yes = r.distance && *r.distance <= gi.instance.ell;
    EXPECT_EQ(yes, p == 2) << "p=" << p;
  }
}

}  // namespace
}  // namespace recolour
