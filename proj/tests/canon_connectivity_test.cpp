#include <gtest/gtest.h>

#include <random>

#include "octminor/atlas.hpp"
#include "octminor/canon.hpp"
#include "octminor/connectivity.hpp"
#include "oracles.hpp"

using namespace octminor;

namespace {

SimpleGraph shuffled(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

TEST(Canon, InvariantUnderRelabeling) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleGraph g = oracle::random_graph(1 + static_cast<int>(rng() % 14), 0.4, rng);
    const SimpleGraph h = shuffled(g, rng);
    EXPECT_EQ(canonical_key(g), canonical_key(h)) << to_graph6(g);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(relabel(g, *iso), h);
  }
}

TEST(Canon, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const SimpleGraph g = oracle::random_graph(n, 0.5, rng);
    const SimpleGraph h = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(canonical_key(g) == canonical_key(h), oracle::isomorphic(g, h)) << to_graph6(g) << ' ' << to_graph6(h);
  }
}

TEST(Canon, RegularGraphsSeparated) {
  // same degree sequences, different classes
  EXPECT_NE(canonical_key(build("Prism")), canonical_key(build("K3,3")));
  EXPECT_NE(canonical_key(build("Cube")), canonical_key(build("V8")));
  EXPECT_NE(canonical_key(build("C8^2")), canonical_key(build("L(K3,3)")));
}

TEST(Connectivity, AgreesWithBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const SimpleGraph g = oracle::random_graph(n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
    const ConnectivityResult r = vertex_connectivity(g);
    ASSERT_EQ(r.value, oracle::connectivity(g)) << to_graph6(g);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(is_k_connected(g, k), n > k && r.value >= k);
    if (r.witness) {
      const VertexSet cut = to_set(r.witness->vertices);
      EXPECT_EQ(popcount(cut), r.value);
      EXPECT_FALSE(oracle::connected_within(g, g.vertices() & ~cut));
      EXPECT_EQ(r.witness->side_a & r.witness->side_b, 0U);
    }
  }
}

TEST(Connectivity, NamedGraphs) {
  EXPECT_THROW(vertex_connectivity(SimpleGraph(1)), DomainError);
  EXPECT_EQ(vertex_connectivity(build("K5")).value, 4);
  EXPECT_EQ(vertex_connectivity(build("Oct")).value, 4);
  EXPECT_EQ(vertex_connectivity(build("Cube")).value, 3);
  EXPECT_EQ(vertex_connectivity(build("C7^2")).value, 4);
  EXPECT_EQ(cut_vertices(SimpleGraph(3, {{0, 1}, {1, 2}})), std::vector<int>{1});
}

TEST(Connectivity, CyclicFourConnectivity) {
  EXPECT_TRUE(is_cyclically_4_connected_cubic(build("K3,3")).value);
  EXPECT_TRUE(is_cyclically_4_connected_cubic(build("Cube")).value);
  EXPECT_TRUE(is_cyclically_4_connected_cubic(build("P10")).value);
  EXPECT_TRUE(is_cyclically_4_connected_cubic(build("V8")).value);
  const auto prism = is_cyclically_4_connected_cubic(build("Prism"));
  EXPECT_FALSE(prism.value);
  ASSERT_TRUE(prism.witness.has_value());
  EXPECT_EQ(prism.witness->edges.size(), 3U);
  EXPECT_FALSE(is_cyclically_4_connected_cubic(build("K4")).value);
}

TEST(Connectivity, SeparatingTriangles) {
  // K4 with a vertex stacked on each face has separating triangles
  const SimpleGraph k4 = build("K4");
  EXPECT_FALSE(is_separating_triangle(k4, {0, 1, 2}));
  GraphBuilder b(k4);
  const int x = b.add_vertex();
  b.add_edge(x, 0).add_edge(x, 1).add_edge(x, 2);
  EXPECT_TRUE(is_separating_triangle(b.build(), {0, 1, 2}));
}

} // namespace
