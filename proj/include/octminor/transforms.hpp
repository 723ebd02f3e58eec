#ifndef OCTMINOR_TRANSFORMS_HPP
#define OCTMINOR_TRANSFORMS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canon.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "minors.hpp"

namespace octminor {

// ---------------------------------------------------------------------------
// Vertex splits

/// Replace `vertex` by adjacent v' (keeps the label) and v'' (label n) with
/// N(v') = a + v'' and N(v'') = b + v'. Both arities need a | b = N(v).
/// Arity 3: a & b empty, both sides >= 2. Arity 4: both sides >= 3.
struct SplitSpec {
  int vertex = 0;
  VertexSet a = 0;
  VertexSet b = 0;
  int arity = 3;

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

inline void validate_split(const SimpleGraph& g, const SplitSpec& s) {
  if (s.arity != 3 && s.arity != 4) throw DomainError("split arity must be 3 or 4");
  if (s.vertex < 0 || s.vertex >= g.order()) throw DomainError("split vertex out of range");
  const VertexSet nv = g.neighbors(s.vertex);
  if ((s.a & ~nv) != 0 || (s.b & ~nv) != 0) throw DomainError("split sides must be neighbours of v");
  if ((s.a | s.b) != nv) throw DomainError("split sides must cover N(v)");
  if (s.arity == 3) {
    if ((s.a & s.b) != 0) throw DomainError("3-split sides must be disjoint");
    if (popcount(s.a) < 2 || popcount(s.b) < 2) throw DomainError("3-split sides need at least 2 vertices");
  } else if (popcount(s.a) < 3 || popcount(s.b) < 3) {
    throw DomainError("4-split sides need at least 3 vertices");
  }
}

namespace detail {

inline SimpleGraph split_unchecked(const SimpleGraph& g, const SplitSpec& s) {
  GraphBuilder b(g);
  const int v = s.vertex;
  for_each_vertex(g.neighbors(v), [&](int w) { b.remove_edge(v, w); });
  const int w2 = b.add_vertex();
  b.add_edge(v, w2);
  for_each_vertex(s.a, [&](int w) { b.add_edge(v, w); });
  for_each_vertex(s.b, [&](int w) { b.add_edge(w2, w); });
  return b.build();
}

} // namespace detail

/// Applies a split. A 4-split requires a 4-connected input and its result
/// is re-verified 4-connected.
inline SimpleGraph apply_split(const SimpleGraph& g, const SplitSpec& s) {
  validate_split(g, s);
  if (s.arity == 4 && !is_k_connected(g, 4)) throw DomainError("4-split needs a 4-connected graph");
  SimpleGraph out = detail::split_unchecked(g, s);
  if (s.arity == 4 && !is_k_connected(out, 4)) {
    throw InternalError("4-split of a 4-connected graph is not 4-connected");
  }
  return out;
}

struct SplitResult {
  SplitSpec spec;
  SimpleGraph graph;
  CanonicalKey key;
};

/// Every valid split spec of the given arity over all vertices, keeping the
/// first spec (vertex, then side masks ascending) of each result class.
inline std::vector<SplitResult> enumerate_splits(const SimpleGraph& g, int arity) {
  if (arity != 3 && arity != 4) throw DomainError("split arity must be 3 or 4");
  if (arity == 4 && !is_k_connected(g, 4)) throw DomainError("4-split needs a 4-connected graph");
  std::vector<SplitResult> out;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.neighbors(v);
    const std::vector<int> nbrs = to_vector(nv);
    const std::size_t d = nbrs.size();
    if (d > 20) throw UnsupportedSizeError("split enumeration over degree above 20");
    std::vector<SplitSpec> specs;
    for (std::uint32_t am = 0; am < (1U << d); ++am) {
      VertexSet a = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if ((am >> i) & 1U) a |= singleton(nbrs[i]);
      }
      if (arity == 3) {
        SplitSpec s{v, a, nv & ~a, 3};
        if (popcount(s.a) >= 2 && popcount(s.b) >= 2) specs.push_back(s);
        continue;
      }
      if (popcount(a) < 3) continue;
      // b = (N(v) \ a) plus any subset of a
      const std::vector<int> in_a = to_vector(a);
      for (std::uint32_t cm = 0; cm < (1U << in_a.size()); ++cm) {
        VertexSet b = nv & ~a;
        for (std::size_t i = 0; i < in_a.size(); ++i) {
          if ((cm >> i) & 1U) b |= singleton(in_a[i]);
        }
        if (popcount(b) >= 3) specs.push_back({v, a, b, 4});
      }
    }
    for (const SplitSpec& s : specs) {
      SimpleGraph r = arity == 4 ? apply_split(g, s) : (validate_split(g, s), detail::split_unchecked(g, s));
      CanonicalKey k = canonical_key(r);
      if (seen.insert(k).second) out.push_back({s, std::move(r), std::move(k)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// k-sums

/// Identify `identify[i].first` in g1 with `identify[i].second` in g2
/// (k = identify.size() pairs), then delete `deletions` (g1 labels, among the
/// common edges). k = 0 is the disjoint union.
struct SumSpec {
  int k = 0;
  std::vector<std::pair<int, int>> identify;
  std::vector<Edge> deletions;
};

/// g1 keeps its labels; g2's private vertices follow in ascending g2 order.
inline SimpleGraph apply_sum(const SimpleGraph& g1, const SimpleGraph& g2, const SumSpec& s) {
  if (s.k < 0 || s.k > 3) throw DomainError("sum order must be 0..3");
  if (static_cast<int>(s.identify.size()) != s.k) throw DomainError("identification size must equal k");
  VertexSet in1 = 0;
  VertexSet in2 = 0;
  for (auto [a, b] : s.identify) {
    if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order()) {
      throw DomainError("identified vertex out of range");
    }
    if (contains(in1, a) || contains(in2, b)) throw DomainError("identification is not injective");
    in1 |= singleton(a);
    in2 |= singleton(b);
  }
  for (std::size_t i = 0; i < s.identify.size(); ++i) {
    for (std::size_t j = i + 1; j < s.identify.size(); ++j) {
      if (!g1.adjacent(s.identify[i].first, s.identify[j].first) ||
          !g2.adjacent(s.identify[i].second, s.identify[j].second)) {
        throw DomainError("identified vertices must form a clique in both summands");
      }
    }
  }
  if (static_cast<int>(s.deletions.size()) > s.k * (s.k - 1) / 2) {
    throw DomainError("too many deletions for this sum order");
  }
  std::vector<int> map2(static_cast<std::size_t>(g2.order()), -1);
  for (auto [a, b] : s.identify) map2[static_cast<std::size_t>(b)] = a;
  GraphBuilder out(g1);
  for (int v = 0; v < g2.order(); ++v) {
    if (map2[static_cast<std::size_t>(v)] < 0) map2[static_cast<std::size_t>(v)] = out.add_vertex();
  }
  for (Edge e : g2.edges()) {
    out.add_edge(map2[static_cast<std::size_t>(e.u)], map2[static_cast<std::size_t>(e.v)]);
  }
  std::set<Edge> removed;
  for (Edge d : s.deletions) {
    Edge e = make_edge(d.u, d.v);
    if (!contains(in1, e.u) || !contains(in1, e.v)) throw DomainError("deleted edge is not a common edge");
    if (!removed.insert(e).second) throw DomainError("deleted edge listed twice");
    out.remove_edge(e.u, e.v);
  }
  return out.build();
}

/// 3-sum over triangles that are non-separating in both summands;
/// t1.a/b/c is identified with t2.a/b/c.
inline SimpleGraph special_3sum(const SimpleGraph& g1, Triangle t1, const SimpleGraph& g2, Triangle t2,
                                const std::vector<Edge>& deletions = {}) {
  if (!is_triangle(g1, t1) || !is_triangle(g2, t2)) throw DomainError("special 3-sum needs triangles");
  if (is_separating_triangle(g1, t1) || is_separating_triangle(g2, t2)) {
    throw DomainError("special 3-sum needs non-separating triangles");
  }
  SumSpec s;
  s.k = 3;
  s.identify = {{t1.a, t2.a}, {t1.b, t2.b}, {t1.c, t2.c}};
  s.deletions = deletions;
  return apply_sum(g1, g2, s);
}

// ---------------------------------------------------------------------------
// Handles and one-step extensions

/// Subdivide nonadjacent e1 (new vertex n) and e2 (new vertex n+1), then
/// join the two new vertices.
inline SimpleGraph add_handle(const SimpleGraph& g, Edge e1, Edge e2) {
  e1 = make_edge(e1.u, e1.v);
  e2 = make_edge(e2.u, e2.v);
  if (!g.has_edge(e1) || !g.has_edge(e2)) throw DomainError("handle edges must be edges of the graph");
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) {
    throw DomainError("handle edges must be nonadjacent");
  }
  GraphBuilder b(g);
  b.remove_edge(e1.u, e1.v).remove_edge(e2.u, e2.v);
  const int x = b.add_vertex();
  const int y = b.add_vertex();
  b.add_edge(e1.u, x).add_edge(x, e1.v).add_edge(e2.u, y).add_edge(y, e2.v).add_edge(x, y);
  return b.build();
}

struct Extensions {
  std::vector<SimpleGraph> edge_additions;
  std::vector<SimpleGraph> splits;

  /// Both parts, deduplicated, edge additions first.
  std::vector<SimpleGraph> all() const {
    std::vector<SimpleGraph> out;
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for (const auto* part : {&edge_additions, &splits}) {
      for (const auto& g : *part) {
        if (seen.insert(canonical_key(g)).second) out.push_back(g);
      }
    }
    return out;
  }
};

/// Single-edge additions and 3-splits of a 3-connected graph, each part
/// deduplicated up to isomorphism.
inline Extensions enumerate_extensions(const SimpleGraph& h) {
  if (!is_k_connected(h, 3)) throw DomainError("extensions are defined for 3-connected graphs");
  Extensions ext;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (int u = 0; u < h.order(); ++u) {
    for (int v = u + 1; v < h.order(); ++v) {
      if (h.adjacent(u, v)) continue;
      SimpleGraph g = add_edge(h, {u, v});
      if (seen.insert(canonical_key(g)).second) ext.edge_additions.push_back(std::move(g));
    }
  }
  for (auto& r : enumerate_splits(h, 3)) ext.splits.push_back(std::move(r.graph));
  return ext;
}

// ---------------------------------------------------------------------------
// Contraction chains

/// graphs[i] / edges[i] == graphs[i+1], every graph 4-connected.
struct Chain {
  std::vector<SimpleGraph> graphs;
  std::vector<Edge> edges;
};

inline bool verify_chain(const Chain& c) {
  if (c.graphs.empty() || c.edges.size() + 1 != c.graphs.size()) return false;
  for (const auto& g : c.graphs) {
    if (!is_k_connected(g, 4)) return false;
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (!c.graphs[i].has_edge(c.edges[i])) return false;
    if (!(contract_edge(c.graphs[i], c.edges[i]) == c.graphs[i + 1])) return false;
  }
  return true;
}

/// Graph6 per line, followed by the contracted edge: "<g6> / u-v".
inline std::string format_chain(const Chain& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    os << to_graph6(c.graphs[i]);
    if (i < c.edges.size()) os << " / " << c.edges[i].u << '-' << c.edges[i].v;
    os << '\n';
  }
  return os.str();
}

namespace detail {

class ChainSearch {
public:
  ChainSearch(const std::set<CanonicalKey>& targets, std::uint64_t budget)
      : targets_(targets), budget_(budget) {
    for (const auto& t : targets) min_target_ = std::min(min_target_, t.order());
  }

  bool dfs(const SimpleGraph& g, Chain& chain) {
    if (++nodes_ > budget_) {
      throw BudgetExceededError("chain search exceeded node budget of " + std::to_string(budget_));
    }
    CanonicalKey key = canonical_key(g);
    chain.graphs.push_back(g);
    if (targets_.contains(key)) return true;
    if (g.order() > min_target_ && !dead_.contains(key)) {
      // children in ascending canonical-key order, one edge per class
      std::map<CanonicalKey, std::pair<Edge, SimpleGraph>> children;
      for (Edge e : g.edges()) {
        SimpleGraph c = contract_edge(g, e);
        if (!is_k_connected(c, 4)) continue;
        CanonicalKey ck = canonical_key(c);
        if (!children.contains(ck)) children.emplace(std::move(ck), std::make_pair(e, std::move(c)));
      }
      for (auto& [ck, ec] : children) {
        if (dead_.contains(ck)) continue;
        chain.edges.push_back(ec.first);
        if (dfs(ec.second, chain)) return true;
        chain.edges.pop_back();
      }
      dead_.insert(key);
    }
    chain.graphs.pop_back();
    return false;
  }

private:
  const std::set<CanonicalKey>& targets_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int min_target_ = kMaxOrder + 1;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> dead_;
};

} // namespace detail

/// Backtracking descent through 4-connected contractions until a graph
/// whose canonical key is in `targets`. nullopt means the space was
/// exhausted; running out of budget throws.
inline std::optional<Chain> find_chain(const SimpleGraph& g, const std::set<CanonicalKey>& targets,
                                       const SearchOptions& opts = {}) {
  if (!is_k_connected(g, 4)) throw DomainError("chains start from a 4-connected graph");
  detail::ChainSearch search(targets, opts.node_budget);
  Chain chain;
  if (!search.dfs(g, chain)) return std::nullopt;
  if (!verify_chain(chain)) throw InternalError("chain failed re-verification");
  return chain;
}

} // namespace octminor

#endif // OCTMINOR_TRANSFORMS_HPP
