#ifndef OCTMINOR_CONNECTIVITY_HPP
#define OCTMINOR_CONNECTIVITY_HPP

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <queue>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace octminor {

/// Vertices reachable from `start` inside `allowed`.
inline VertexSet reach(const SimpleGraph& g, int start, VertexSet allowed) {
  VertexSet seen = singleton(start) & allowed;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of the subgraph induced on `within`, ordered by
/// their least vertex.
inline std::vector<VertexSet> components(const SimpleGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet c = reach(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline std::vector<VertexSet> components(const SimpleGraph& g) {
  return components(g, g.vertices());
}

inline bool is_connected(const SimpleGraph& g, VertexSet within) {
  within &= g.vertices();
  return within == 0 || reach(g, lowest(within), within) == within;
}

inline bool is_connected(const SimpleGraph& g) { return is_connected(g, g.vertices()); }

inline int edges_within(const SimpleGraph& g, VertexSet s) {
  int twice = 0;
  for_each_vertex(s, [&](int v) { twice += popcount(g.neighbors(v) & s); });
  return twice / 2;
}

/// m - n + c: the number of independent cycles.
inline int cycle_rank(const SimpleGraph& g) {
  return g.size() - g.order() + static_cast<int>(components(g).size());
}

enum class CutKind { Vertex, CyclicEdge };

/// A separating set plus the two sides it separates.
struct CutWitness {
  CutKind kind = CutKind::Vertex;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  VertexSet side_a = 0;
  VertexSet side_b = 0;
};

struct ConnectivityResult {
  int value = 0;
  std::optional<CutWitness> witness;
};

namespace detail {

// Unit vertex capacities via the split digraph: v_in = 2v, v_out = 2v+1.
class VertexFlow {
public:
  explicit VertexFlow(const SimpleGraph& g) : g_(g), n2_(2 * g.order()) {}

  // Maximum number of internally disjoint s-t paths, stopping at `cap`.
  int max_paths(int s, int t, int cap) {
    cap_.assign(static_cast<std::size_t>(n2_ * n2_), 0);
    constexpr int kInf = INT_MAX / 4;
    for (int v = 0; v < g_.order(); ++v) {
      at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
      for_each_vertex(g_.neighbors(v), [&](int w) { at(2 * v + 1, 2 * w) = kInf; });
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
    int flow = 0;
    while (flow < cap && augment()) ++flow;
    return flow;
  }

  // After max_paths: vertices whose in-node is residual-reachable from the
  // source but whose out-node is not.
  VertexSet min_cut() const {
    std::vector<char> seen = reachable();
    VertexSet cut = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (seen[static_cast<std::size_t>(2 * v)] && !seen[static_cast<std::size_t>(2 * v + 1)]) {
        cut |= singleton(v);
      }
    }
    return cut;
  }

private:
  int& at(int a, int b) { return cap_[static_cast<std::size_t>(a * n2_ + b)]; }
  int at(int a, int b) const { return cap_[static_cast<std::size_t>(a * n2_ + b)]; }

  std::vector<char> reachable(std::vector<int>* parent = nullptr) const {
    std::vector<char> seen(static_cast<std::size_t>(n2_), 0);
    std::queue<int> q;
    q.push(source_);
    seen[static_cast<std::size_t>(source_)] = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < n2_; ++b) {
        if (!seen[static_cast<std::size_t>(b)] && at(a, b) > 0) {
          seen[static_cast<std::size_t>(b)] = 1;
          if (parent) (*parent)[static_cast<std::size_t>(b)] = a;
          q.push(b);
        }
      }
    }
    return seen;
  }

  bool augment() {
    std::vector<int> parent(static_cast<std::size_t>(n2_), -1);
    std::vector<char> seen = reachable(&parent);
    if (!seen[static_cast<std::size_t>(sink_)]) return false;
    for (int b = sink_; b != source_; b = parent[static_cast<std::size_t>(b)]) {
      int a = parent[static_cast<std::size_t>(b)];
      at(a, b) -= 1;
      at(b, a) += 1;
    }
    return true;
  }

  const SimpleGraph& g_;
  int n2_;
  int source_ = 0;
  int sink_ = 0;
  std::vector<int> cap_;
};

inline CutWitness vertex_cut_witness(const SimpleGraph& g, VertexSet cut) {
  CutWitness w;
  w.kind = CutKind::Vertex;
  w.vertices = to_vector(cut);
  std::vector<VertexSet> parts = components(g, g.vertices() & ~cut);
  if (!parts.empty()) {
    w.side_a = parts.front();
    w.side_b = g.vertices() & ~cut & ~parts.front();
  }
  return w;
}

} // namespace detail

/// Exact vertex connectivity. K_n gives n-1; otherwise the witness is a
/// minimum vertex cut.
inline ConnectivityResult vertex_connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("vertex connectivity needs at least two vertices");
  if (!is_connected(g)) return {0, detail::vertex_cut_witness(g, 0)};
  int best = n - 1;
  VertexSet best_cut = 0;
  bool found = false;
  detail::VertexFlow flow(g);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      // Uncapped on the first pair, so the residual cut is exact whenever
      // it is taken.
      int k = flow.max_paths(s, t, best);
      if (!found || k < best) {
        best = k;
        best_cut = flow.min_cut();
        found = true;
      }
    }
  }
  if (!found) return {n - 1, std::nullopt};
  return {best, detail::vertex_cut_witness(g, best_cut)};
}

/// At least k+1 vertices and no vertex cut of size < k.
inline bool is_k_connected(const SimpleGraph& g, int k) {
  const int n = g.order();
  if (k <= 0) return true;
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  if (g.min_degree() < k) return false;
  detail::VertexFlow flow(g);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t) && flow.max_paths(s, t, k) < k) return false;
    }
  }
  return true;
}

/// Cut vertices in ascending order.
inline std::vector<int> cut_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = g.vertices() & ~singleton(v);
    VertexSet comp_of_v = reach(g, v, g.vertices());
    if (components(g, comp_of_v & rest).size() > 1) out.push_back(v);
  }
  return out;
}

inline bool is_cubic(const SimpleGraph& g) { return is_regular(g, 3); }

struct CyclicConnectivityResult {
  bool value = false;
  std::optional<CutWitness> witness;
};

/// Cyclic 4-connectivity of a cubic graph: 2-connected, cycle rank at least
/// 4, and no edge cut of at most three edges leaving a circuit on each side.
inline CyclicConnectivityResult is_cyclically_4_connected_cubic(const SimpleGraph& g) {
  if (!is_cubic(g)) throw DomainError("cyclic connectivity is only defined here for cubic graphs");
  if (!is_k_connected(g, 2)) return {false, std::nullopt};
  if (g.size() - g.order() + 1 < 4) return {false, std::nullopt};
  const std::vector<Edge> es = g.edges();
  const int m = static_cast<int>(es.size());
  auto check = [&](const std::vector<int>& pick) -> std::optional<CutWitness> {
    GraphBuilder b(g);
    for (int i : pick) b.remove_edge(es[static_cast<std::size_t>(i)].u, es[static_cast<std::size_t>(i)].v);
    SimpleGraph rest = b.build();
    std::vector<VertexSet> cyclic;
    for (VertexSet c : components(rest)) {
      if (edges_within(rest, c) >= popcount(c)) cyclic.push_back(c);
    }
    if (cyclic.size() < 2) return std::nullopt;
    CutWitness w;
    w.kind = CutKind::CyclicEdge;
    for (int i : pick) w.edges.push_back(es[static_cast<std::size_t>(i)]);
    w.side_a = cyclic.front();
    w.side_b = g.vertices() & ~cyclic.front();
    return w;
  };
  for (int a = 0; a < m; ++a) {
    if (auto w = check({a})) return {false, w};
    for (int b = a + 1; b < m; ++b) {
      if (auto w = check({a, b})) return {false, w};
      for (int c = b + 1; c < m; ++c) {
        if (auto w = check({a, b, c})) return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

/// g - {a, b, c} disconnected. An empty remainder is non-separating.
inline bool is_separating_triangle(const SimpleGraph& g, Triangle t) {
  if (!is_triangle(g, t)) throw DomainError("not a triangle of the graph");
  VertexSet rest = g.vertices() & ~(singleton(t.a) | singleton(t.b) | singleton(t.c));
  return rest != 0 && !is_connected(g, rest);
}

} // namespace octminor

#endif // OCTMINOR_CONNECTIVITY_HPP
