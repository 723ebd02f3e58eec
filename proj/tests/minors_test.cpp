#include <gtest/gtest.h>

#include <random>

#include "octminor/atlas.hpp"
#include "octminor/minors.hpp"
#include "oracles.hpp"

using namespace octminor;

namespace {

TEST(Minor, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(41);
  int positives = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const SimpleGraph g = oracle::random_graph(3 + static_cast<int>(rng() % 4), 0.6, rng);
    const SimpleGraph h = oracle::random_graph(2 + static_cast<int>(rng() % 3), 0.7, rng);
    const auto m = find_minor(g, h);
    ASSERT_EQ(m.has_value(), oracle::has_minor(g, h)) << to_graph6(g) << " / " << to_graph6(h);
    if (m) {
      ++positives;
      EXPECT_TRUE(verify_model(g, h, *m));
    }
  }
  EXPECT_GT(positives, 50);
}

TEST(Minor, VerifyModelRejectsBadModels) {
  const SimpleGraph k4 = build("K4");
  const SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_FALSE(verify_model(c4, k4, {{singleton(0), singleton(1), singleton(2), singleton(3)}}));
  EXPECT_FALSE(verify_model(k4, k4, {{singleton(0), singleton(0), singleton(2), singleton(3)}}));
  EXPECT_FALSE(verify_model(c4, SimpleGraph(2, {{0, 1}}), {{singleton(0) | singleton(2), singleton(1)}}));
  EXPECT_TRUE(verify_model(c4, SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}), {{singleton(0) | singleton(1), singleton(2), singleton(3)}}));
}

TEST(Minor, KnownContainments) {
  EXPECT_TRUE(has_minor(build("P10"), build("K5")));
  EXPECT_TRUE(has_minor(build("P10"), build("K3,3")));
  EXPECT_FALSE(has_minor(build("Oct"), build("K5")));
  EXPECT_TRUE(has_minor(build("Oct1+"), build("Oct")));
  EXPECT_FALSE(has_minor(build("Oct"), build("Oct1+")));
  EXPECT_FALSE(has_minor(build("C7^2"), build("Oct")));
  EXPECT_TRUE(has_minor(build("C8^2"), build("Oct1+")));
}

TEST(Minor, BudgetIsEnforced) {
  SearchOptions tiny{1};
  EXPECT_THROW(find_minor(build("C9^2"), build("Oct"), tiny), BudgetExceededError);
}

TEST(TopologicalMinor, SubdivisionsVerify) {
  const SimpleGraph k4 = build("K4");
  const SimpleGraph s = subdivide_edge(subdivide_edge(k4, {0, 1}), {2, 3});
  const auto m = find_topological_minor(s, k4);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(verify_subdivision(s, k4, *m));
  // K5 is a minor of P10 but not a topological minor (P10 is cubic)
  EXPECT_FALSE(find_topological_minor(build("P10"), build("K5")).has_value());
  EXPECT_TRUE(find_topological_minor(build("P10"), build("K3,3")).has_value());
}

TEST(Planarity, AgreesWithKuratowskiMinors) {
  std::mt19937_64 rng(51);
  const SimpleGraph k5 = build("K5");
  const SimpleGraph k33 = build("K3,3");
  int nonplanar = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const SimpleGraph g = oracle::random_graph(n, 0.35 + 0.3 * static_cast<double>(rng() % 100) / 100.0, rng);
    const bool expected = !has_minor(g, k5) && !has_minor(g, k33);
    const PlanarityResult r = planarity(g);
    ASSERT_EQ(r.planar, expected) << to_graph6(g);
    EXPECT_EQ(is_planar(g), expected);
    if (!r.planar) {
      ++nonplanar;
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_TRUE(verify_model(g, r.obstruction == "K5" ? k5 : k33, *r.witness));
    }
  }
  EXPECT_GT(nonplanar, 100);
}

TEST(Planarity, NamedGraphs) {
  for (const char* p : {"K4", "Oct", "Oct1+", "Cube", "Prism", "W6", "C8^2", "C10^2", "L5"}) EXPECT_TRUE(is_planar(build(p))) << p;
  for (const char* q : {"K5", "K3,3", "Oct2+", "V8", "P10", "C7^2", "K5^tri", "Oct+"}) EXPECT_FALSE(is_planar(build(q))) << q;
}

} // namespace
