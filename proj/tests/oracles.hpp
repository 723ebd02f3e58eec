// Brute-force oracles and random generators shared by the unit tests. They
// are deliberately naive and independent of the library algorithms.
#ifndef OCTMINOR_TESTS_ORACLES_HPP
#define OCTMINOR_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "octminor/graph.hpp"

namespace oracle {

using octminor::SimpleGraph;

inline SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  octminor::GraphBuilder b(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

// Depth-first reachability inside the vertex mask `alive`.
inline bool connected_within(const SimpleGraph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  int start = 0;
  while (!((alive >> start) & 1U)) ++start;
  std::uint64_t seen = std::uint64_t{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.order(); ++w) {
      if (((alive >> w) & 1U) && !((seen >> w) & 1U) && g.adjacent(v, w)) {
        seen |= std::uint64_t{1} << w;
        stack.push_back(w);
      }
    }
  }
  return seen == alive;
}

// Smallest number of vertices whose removal disconnects g or leaves one
// vertex; n - 1 for complete graphs.
inline int connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  int best = n - 1;
  for (std::uint64_t cut = 0; cut <= all; ++cut) {
    const int k = std::popcount(cut);
    if (k >= best || n - k < 2) continue;
    if (!connected_within(g, all & ~cut)) best = k;
  }
  return best;
}

inline bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u) {
      for (int v = u + 1; v < g.order() && ok; ++v) {
        ok = g.adjacent(u, v) == h.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// h is a minor of g iff some map V(g) -> {unused} + V(h) has nonempty
// connected preimages with a g-edge between the preimages of every h-edge.
inline bool has_minor(const SimpleGraph& g, const SimpleGraph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);  // 0 = unused, i + 1 = branch set i
  while (true) {
    std::vector<std::uint64_t> sets(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
      if (assign[static_cast<std::size_t>(v)] > 0) sets[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)] - 1)] |= std::uint64_t{1} << v;
    }
    bool ok = std::all_of(sets.begin(), sets.end(), [&](std::uint64_t s) { return s != 0 && connected_within(g, s); });
    for (int a = 0; a < k && ok; ++a) {
      for (int b = a + 1; b < k && ok; ++b) {
        if (!h.adjacent(a, b)) continue;
        bool linked = false;
        for (int u = 0; u < n && !linked; ++u) {
          for (int v = 0; v < n && !linked; ++v) {
            linked = ((sets[static_cast<std::size_t>(a)] >> u) & 1U) && ((sets[static_cast<std::size_t>(b)] >> v) & 1U) &&
                     g.adjacent(u, v);
          }
        }
        ok = linked;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && assign[static_cast<std::size_t>(i)] == k) assign[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return false;
    ++assign[static_cast<std::size_t>(i)];
  }
}

} // namespace oracle

#endif // OCTMINOR_TESTS_ORACLES_HPP
