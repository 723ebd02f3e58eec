#ifndef OCTMINOR_GRAPH_HPP
#define OCTMINOR_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace octminor {

/// Bitmask over vertex labels 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
  return n >= kMaxOrder ? ~VertexSet{0} : singleton(n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

template <class Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet to_set(std::span<const int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= singleton(v);
  return s;
}

/// Removes bit position `v` and shifts every higher bit down by one.
constexpr VertexSet squeeze_out(VertexSet s, int v) {
  const VertexSet low = first_n(v);
  return (s & low) | ((s >> 1) & ~low);
}

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes an unordered vertex pair so that u < v.
inline Edge make_edge(int a, int b) {
  if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

class GraphBuilder;

/// Finite simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is stored as one bit row per vertex. Values are immutable;
/// every edit operation below returns a new graph.
class SimpleGraph {
public:
  SimpleGraph() = default;

  explicit SimpleGraph(int n) : n_(n) { check_order(n); }

  SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges)
      : SimpleGraph(n) {
    for (auto [a, b] : edges) insert_new(make_edge(a, b));
  }

  SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
    for (Edge e : edges) insert_new(make_edge(e.u, e.v));
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  VertexSet vertices() const noexcept { return first_n(n_); }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return contains(adj_[static_cast<std::size_t>(u)], v);
  }
  bool has_edge(Edge e) const {
    return e.u != e.v && e.u >= 0 && e.v >= 0 && e.u < n_ && e.v < n_ &&
           contains(adj_[static_cast<std::size_t>(e.u)], e.v);
  }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
      for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~first_n(u + 1),
                      [&](int v) { out.push_back({u, v}); });
    }
    return out;
  }

  /// Degrees in non-increasing order.
  std::vector<int> degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n_ != b.n_ || a.m_ != b.m_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

private:
  friend class GraphBuilder;

  static void check_order(int n) {
    if (n < 0 || n > kMaxOrder) {
      throw UnsupportedSizeError("graphs are limited to " +
                                 std::to_string(kMaxOrder) + " vertices, got " +
                                 std::to_string(n));
    }
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw NotFoundError("vertex " + std::to_string(v) + " not in graph of order " +
                          std::to_string(n_));
    }
  }

  void insert_new(Edge e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (contains(adj_[static_cast<std::size_t>(e.u)], e.v)) {
      throw DomainError("parallel edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v));
    }
    adj_[static_cast<std::size_t>(e.u)] |= singleton(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= singleton(e.u);
    ++m_;
  }

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// Mutable staging area for constructing a SimpleGraph. Adding an existing
/// edge or removing a missing one is a no-op.
class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(const SimpleGraph& g) : g_(g) {}

  int order() const { return g_.n_; }

  int add_vertex() {
    SimpleGraph::check_order(g_.n_ + 1);
    return g_.n_++;
  }

  GraphBuilder& add_edge(int a, int b) {
    Edge e = make_edge(a, b);
    g_.check_vertex(e.u);
    g_.check_vertex(e.v);
    if (!contains(row(e.u), e.v)) {
      row(e.u) |= singleton(e.v);
      row(e.v) |= singleton(e.u);
      ++g_.m_;
    }
    return *this;
  }

  GraphBuilder& remove_edge(int a, int b) {
    Edge e = make_edge(a, b);
    g_.check_vertex(e.u);
    g_.check_vertex(e.v);
    if (contains(row(e.u), e.v)) {
      row(e.u) &= ~singleton(e.v);
      row(e.v) &= ~singleton(e.u);
      --g_.m_;
    }
    return *this;
  }

  bool adjacent(int a, int b) const { return g_.adjacent(a, b); }

  SimpleGraph build() const { return g_; }

private:
  VertexSet& row(int v) { return g_.adj_[static_cast<std::size_t>(v)]; }
  SimpleGraph g_;
};

inline SimpleGraph add_edge(const SimpleGraph& g, Edge e) {
  if (g.has_edge(e)) throw DomainError("edge already present");
  return GraphBuilder(g).add_edge(e.u, e.v).build();
}

inline SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw NotFoundError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " not in graph");
  }
  return GraphBuilder(g).remove_edge(e.u, e.v).build();
}

/// Subgraph induced on `keep`, relabelled in ascending label order.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet keep) {
  keep &= g.vertices();
  std::vector<int> old = to_vector(keep);
  std::array<int, kMaxOrder> index{};
  for (std::size_t i = 0; i < old.size(); ++i) index[static_cast<std::size_t>(old[i])] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(old.size()));
  for (std::size_t i = 0; i < old.size(); ++i) {
    for_each_vertex(g.neighbors(old[i]) & keep & ~first_n(old[i] + 1), [&](int w) {
      b.add_edge(static_cast<int>(i), index[static_cast<std::size_t>(w)]);
    });
  }
  return b.build();
}

inline SimpleGraph delete_vertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw NotFoundError("vertex " + std::to_string(v) + " not in graph");
  }
  return induced_subgraph(g, g.vertices() & ~singleton(v));
}

/// g/e. The merged vertex keeps label min(u, v); labels above max(u, v)
/// shift down by one. Loops and parallel edges are dropped.
inline SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw NotFoundError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " not in graph");
  }
  const int keep = std::min(e.u, e.v);
  const int gone = std::max(e.u, e.v);
  GraphBuilder b(g.order() - 1);
  for (Edge f : g.edges()) {
    int a = f.u == gone ? keep : f.u;
    int c = f.v == gone ? keep : f.v;
    if (a == c) continue;
    if (a > gone) --a;
    if (c > gone) --c;
    b.add_edge(a, c);
  }
  return b.build();
}

/// Replaces e by a path through a new vertex labelled n.
inline SimpleGraph subdivide_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw NotFoundError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " not in graph");
  }
  GraphBuilder b(g);
  b.remove_edge(e.u, e.v);
  int w = b.add_vertex();
  b.add_edge(e.u, w).add_edge(w, e.v);
  return b.build();
}

/// L(g): one vertex per edge of g, in lexicographic edge order.
inline SimpleGraph line_graph(const SimpleGraph& g) {
  if (g.size() == 0) throw DomainError("line graph of an edgeless graph");
  const std::vector<Edge> es = g.edges();
  GraphBuilder b(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u ||
          es[i].v == es[j].v) {
        b.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return b.build();
}

/// g2's vertices are shifted up by g1.order().
inline SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
  GraphBuilder b(g1);
  const int off = g1.order();
  for (int i = 0; i < g2.order(); ++i) b.add_vertex();
  for (Edge e : g2.edges()) b.add_edge(e.u + off, e.v + off);
  return b.build();
}

inline SimpleGraph complement(const SimpleGraph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// `perm[old] = new`.
inline SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw DomainError("permutation size does not match graph order");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || contains(seen, p)) throw DomainError("not a permutation");
    seen |= singleton(p);
  }
  GraphBuilder b(g.order());
  for (Edge e : g.edges()) {
    b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return b.build();
}

struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline Triangle make_triangle(int x, int y, int z) {
  std::array<int, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return {t[0], t[1], t[2]};
}

inline bool is_triangle(const SimpleGraph& g, Triangle t) {
  return g.has_edge({t.a, t.b}) && g.has_edge({t.a, t.c}) && g.has_edge({t.b, t.c});
}

/// Every triangle once, lexicographic in (a, b, c) with a < b < c.
inline std::vector<Triangle> triangles(const SimpleGraph& g) {
  std::vector<Triangle> out;
  for (int a = 0; a < g.order(); ++a) {
    VertexSet up = g.neighbors(a) & ~first_n(a + 1);
    for_each_vertex(up, [&](int b) {
      for_each_vertex(up & g.neighbors(b) & ~first_n(b + 1),
                      [&](int c) { out.push_back({a, b, c}); });
    });
  }
  return out;
}

inline int common_neighbor_count(const SimpleGraph& g, int u, int v) {
  return popcount(g.neighbors(u) & g.neighbors(v));
}

inline bool is_regular(const SimpleGraph& g, int d) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

} // namespace octminor

#endif // OCTMINOR_GRAPH_HPP
