#include <gtest/gtest.h>

#include <random>

#include "octminor/atlas.hpp"
#include "octminor/characterize.hpp"
#include "octminor/claims.hpp"

using namespace octminor;

namespace {

TEST(Terminal, SquaredCycles) {
  for (int n = 5; n <= 12; ++n) {
    const SimpleGraph g = build("C" + std::to_string(n) + "^2");
    EXPECT_TRUE(is_squared_cycle(g)) << n;
    EXPECT_EQ(classify_C_or_L(g).cycle_length, n);
  }
  EXPECT_FALSE(is_squared_cycle(build("L(K3,3)")));
  EXPECT_FALSE(is_squared_cycle(build("K6")));
}

TEST(Terminal, LineGraphRoots) {
  for (const char* root : {"K3,3", "Cube", "V8", "P10"}) {
    const TerminalClass t = classify_C_or_L(line_graph(build(root)));
    ASSERT_EQ(t.kind, TerminalKind::LineOfCubic) << root;
    ASSERT_TRUE(t.root.has_value());
    EXPECT_TRUE(is_isomorphic(*t.root, build(root)));
  }
  // Prism is cubic but not cyclically 4-connected
  EXPECT_EQ(classify_C_or_L(line_graph(build("Prism"))).kind, TerminalKind::Neither);
}

TEST(Decomposition, ReassemblesRandomSums) {
  std::mt19937_64 rng(61);
  const std::vector<SimpleGraph> pool = detail::build_all({"K1", "K2", "K3", "K4", "W4", "Oct", "Prism", "K3,3", "C4"});
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g = detail::random_relabel(pool[rng() % pool.size()], rng);
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < parts; ++i) {
      const SimpleGraph b = detail::random_relabel(pool[rng() % pool.size()], rng);
      if (g.order() + b.order() > 30) break;
      if (auto s = detail::random_sum(g, b, static_cast<int>(rng() % 3), rng)) g = *s;
    }
    const DecompositionTree t = decompose_012(g);
    EXPECT_EQ(reassemble(t), g) << to_graph6(g);
    for (int leaf : t.leaves()) {
      const SimpleGraph& p = t.nodes[static_cast<std::size_t>(leaf)].graph;
      EXPECT_TRUE(p.order() <= 3 || is_k_connected(p, 3)) << to_graph6(p);
    }
  }
}

TEST(SpecialSums, RecognizerMatchesCatalog) {
  for (bool del : {false, true}) {
    const Catalog& cat = special_3sum_catalog(8, del);
    for (int n = 4; n <= 8; ++n) {
      for (const auto& e : gen_all_graphs(n, [](const SimpleGraph& g) { return is_k_connected(g, 2); })) {
        ASSERT_EQ(in_special_3sum_closure(e.graph, del), cat.contains(e.key)) << to_graph6(e.graph) << " del=" << del;
      }
    }
  }
}

TEST(FourConnectedDeciders, TerminalCases) {
  const ClassificationResult c6 = decide_4conn_oct1_free(build("C6^2"));
  EXPECT_TRUE(c6.member());
  EXPECT_EQ(c6.reason, Reason::IsC6Square);
  const ClassificationResult c9 = decide_4conn_oct1_free(build("C9^2"));
  EXPECT_TRUE(c9.member());
  EXPECT_EQ(c9.reason, Reason::IsOddCycleSquare);
  EXPECT_EQ(c9.parameter, 4);
  EXPECT_FALSE(decide_4conn_oct1_free(build("C8^2")).member());
  EXPECT_FALSE(decide_4conn_oct1_free(build("L(K3,3)")).member());

  const ClassificationResult lk = decide_4conn_oct2_free(build("L(K3,3)"));
  EXPECT_TRUE(lk.member());
  EXPECT_EQ(lk.reason, Reason::IsLineK33);
  EXPECT_TRUE(decide_4conn_oct2_free(build("C8^2")).member());
  EXPECT_FALSE(decide_4conn_oct2_free(build("L(V8)")).member());

  const ClassificationResult k5 = decide_4conn_oct1_free(build("K5"));
  EXPECT_TRUE(k5.member());
  EXPECT_EQ(k5.reason, Reason::IsOddCycleSquare);
  const ClassificationResult k6 = decide_4conn_oct1_free(build("K6"));
  EXPECT_TRUE(k6.member());
  EXPECT_EQ(k6.reason, Reason::ChainToC5Square);
  ASSERT_TRUE(k6.chain.has_value());
  EXPECT_TRUE(verify_chain(*k6.chain));

  EXPECT_THROW(decide_4conn_oct1_free(build("Cube")), DomainError);
  EXPECT_THROW(decide_4conn_oct2_free(build("W5")), DomainError);
}

TEST(PlanarDecider, NamedGraphs) {
  for (const char* yes : {"K4", "Oct", "Cube", "W5", "Prism", "L5", "K1", "C4"}) {
    EXPECT_TRUE(decide_planar_oct1_free(build(yes)).member()) << yes;
  }
  for (const char* no : {"Oct1+", "C8^2", "C10^2"}) {
    const ClassificationResult r = decide_planar_oct1_free(build(no));
    EXPECT_FALSE(r.member()) << no;
    EXPECT_EQ(r.reason, Reason::LeafOutsideBase);
  }
  EXPECT_THROW(decide_planar_oct1_free(build("K5")), DomainError);
}

TEST(PlanarDecider, DeletionVariantMatters) {
  // W5 is planar, 3-connected and Oct1+-free, but no stacked triangulation
  EXPECT_TRUE(decide_planar_oct1_free(build("W5"), {true, 9}).member());
  EXPECT_FALSE(decide_planar_oct1_free(build("W5"), {false, 9}).member());
}

TEST(PlanarDecider, RecognizerAboveCatalogLimit) {
  // a 10-vertex stacked triangulation must be accepted with the catalog
  // capped below its order
  const Catalog& cat = special_3sum_catalog(10, false);
  int checked = 0;
  for (const auto& e : cat) {
    if (e.graph.order() != 10 || checked >= 10) continue;
    ++checked;
    EXPECT_TRUE(decide_planar_oct1_free(e.graph, {false, 8}).member()) << to_graph6(e.graph);
  }
  EXPECT_EQ(checked, 10);
}

} // namespace
