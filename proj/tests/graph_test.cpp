#include <gtest/gtest.h>

#include <random>

#include "octminor/graph.hpp"
#include "octminor/io.hpp"
#include "oracles.hpp"

using namespace octminor;

namespace {

void expect_valid(const SimpleGraph& g) {
  int twice_m = 0;
  for (int v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(contains(g.neighbors(v), v)) << "loop at " << v;
    EXPECT_EQ(g.neighbors(v) & ~first_n(g.order()), 0U);
    for_each_vertex(g.neighbors(v), [&](int w) { EXPECT_TRUE(contains(g.neighbors(w), v)); });
    twice_m += popcount(g.neighbors(v));
  }
  EXPECT_EQ(twice_m, 2 * g.size());
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(SimpleGraph(3, {{0, 0}}), DomainError);
  EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(SimpleGraph(2, {{0, 2}}), NotFoundError);
  EXPECT_THROW(SimpleGraph(kMaxOrder + 1), UnsupportedSizeError);
}

TEST(Graph, ContractMergesIntoSmallerLabel) {
  // path 0-1-2-3; contracting 1-2 gives the path 0-1-2
  const SimpleGraph p(4, {{0, 1}, {1, 2}, {2, 3}});
  const SimpleGraph c = contract_edge(p, {1, 2});
  EXPECT_EQ(c, SimpleGraph(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(contract_edge(p, {0, 2}), NotFoundError);
}

TEST(Graph, ContractionKeepsInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleGraph g = oracle::random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
    for (Edge e : g.edges()) {
      const SimpleGraph c = contract_edge(g, e);
      ASSERT_EQ(c.order(), g.order() - 1);
      EXPECT_EQ(c.size(), g.size() - 1 - common_neighbor_count(g, e.u, e.v));
      expect_valid(c);
    }
  }
}

TEST(Graph, DeletionsAndSubdivision) {
  const SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(delete_edge(k4, {0, 1}).size(), 5);
  EXPECT_EQ(delete_vertex(k4, 0), SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  const SimpleGraph s = subdivide_edge(k4, {0, 1});
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s.size(), 7);
  EXPECT_FALSE(s.adjacent(0, 1));
  EXPECT_EQ(contract_edge(s, {0, 4}), k4);
}

TEST(Graph, LineGraphCounts) {
  const SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const SimpleGraph l = line_graph(k4);
  EXPECT_EQ(l.order(), 6);
  EXPECT_EQ(l.size(), 12);
  EXPECT_TRUE(is_regular(l, 4));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const SimpleGraph g = oracle::random_graph(static_cast<int>(rng() % 40), 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
    EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
    EXPECT_EQ(parse_graph(to_edge_list(g)), g);
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(SimpleGraph(1)), "@");
  const SimpleGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(to_graph6(k4), "C~");
  EXPECT_EQ(from_graph6(">>graph6<<C~"), k4);
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);
  EXPECT_THROW(from_graph6("C~~"), ParseError);
  EXPECT_THROW(from_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(from_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(from_edge_list("3 1\n1 1\n"), ParseError);
}

} // namespace
