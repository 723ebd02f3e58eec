#ifndef OCTMINOR_CHARACTERIZE_HPP
#define OCTMINOR_CHARACTERIZE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "atlas.hpp"
#include "canon.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "minors.hpp"
#include "transforms.hpp"

namespace octminor {

// ---------------------------------------------------------------------------
// Squared cycles and line graphs of cubic graphs

enum class TerminalKind { SquaredCycle, LineOfCubic, Neither };

struct TerminalClass {
  TerminalKind kind = TerminalKind::Neither;
  int cycle_length = 0;             // SquaredCycle
  std::optional<SimpleGraph> root;  // LineOfCubic: cubic, cyclically 4-connected
};

inline bool is_squared_cycle(const SimpleGraph& g) {
  return g.order() >= 5 && is_regular(g, 4) &&
         canonical_key(g) == canonical_key(build(NamedGraphId{Family::CycleSquare, g.order()}));
}

namespace detail {

// Partitions of E(g) into triangles with every vertex in exactly two of
// them. Calls `found` with each partition until it returns true.
template <class Found>
bool triangle_partitions(const SimpleGraph& g, Found&& found) {
  const std::vector<Triangle> tris = triangles(g);
  std::vector<Edge> edges = g.edges();
  std::map<Edge, std::size_t> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = i;
  std::vector<char> used(edges.size(), 0);
  std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
  std::vector<Triangle> chosen;
  auto tri_edges = [&](Triangle t) {
    return std::array<std::size_t, 3>{edge_index.at(make_edge(t.a, t.b)), edge_index.at(make_edge(t.b, t.c)),
                                      edge_index.at(make_edge(t.a, t.c))};
  };
  auto rec = [&](auto& self) -> bool {
    std::size_t first = 0;
    while (first < edges.size() && used[first]) ++first;
    if (first == edges.size()) return found(chosen);
    const Edge e = edges[first];
    for (Triangle t : tris) {
      const bool has = (t.a == e.u || t.b == e.u || t.c == e.u) && (t.a == e.v || t.b == e.v || t.c == e.v);
      if (!has) continue;
      auto ids = tri_edges(t);
      if (used[ids[0]] || used[ids[1]] || used[ids[2]]) continue;
      if (load[static_cast<std::size_t>(t.a)] >= 2 || load[static_cast<std::size_t>(t.b)] >= 2 ||
          load[static_cast<std::size_t>(t.c)] >= 2) {
        continue;
      }
      for (auto i : ids) used[i] = 1;
      for (int v : {t.a, t.b, t.c}) ++load[static_cast<std::size_t>(v)];
      chosen.push_back(t);
      if (self(self)) return true;
      chosen.pop_back();
      for (int v : {t.a, t.b, t.c}) --load[static_cast<std::size_t>(v)];
      for (auto i : ids) used[i] = 0;
    }
    return false;
  };
  return rec(rec);
}

// Root graph of a triangle partition: triangles become vertices, each
// vertex of g becomes the edge joining its two triangles.
inline SimpleGraph krausz_root(const SimpleGraph& g, const std::vector<Triangle>& parts) {
  std::vector<std::vector<int>> owner(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : {parts[i].a, parts[i].b, parts[i].c}) owner[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }
  GraphBuilder b(static_cast<int>(parts.size()));
  for (const auto& o : owner) b.add_edge(o[0], o[1]);
  return b.build();
}

} // namespace detail

/// Membership in {C_n^2 : n >= 5} (by canonical key) or in the line graphs
/// of cyclically 4-connected cubic graphs (by Krausz triangle partition).
inline TerminalClass classify_C_or_L(const SimpleGraph& g) {
  TerminalClass out;
  if (is_squared_cycle(g)) {
    out.kind = TerminalKind::SquaredCycle;
    out.cycle_length = g.order();
    return out;
  }
  if (!is_regular(g, 4) || g.order() % 3 != 0) return out;
  detail::triangle_partitions(g, [&](const std::vector<Triangle>& parts) {
    SimpleGraph root = detail::krausz_root(g, parts);
    if (!is_cubic(root) || !is_cyclically_4_connected_cubic(root).value) return false;
    out.kind = TerminalKind::LineOfCubic;
    out.root = std::move(root);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// 0-, 1-, 2-sum decomposition

struct DecompositionNode {
  SimpleGraph graph;          // the piece, labelled 0..k-1
  std::vector<int> original;  // original[v]: label of v in the input graph
  int sum_order = -1;         // -1 for leaves, else 0, 1 or 2
  std::vector<int> cut;       // cut vertices, input labels
  bool virtual_edge = false;  // 2-cut edge absent from this piece, added to the children
  int left = -1;
  int right = -1;

  bool is_leaf() const noexcept { return sum_order < 0; }
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;  // nodes[0] is the root

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].is_leaf()) out.push_back(static_cast<int>(i));
    }
    return out;
  }
};

namespace detail {

// Least 2-cut {u,v} (u < v) of a 2-connected graph with at least 4 vertices.
inline std::optional<std::pair<int, int>> least_two_cut(const SimpleGraph& g) {
  if (g.order() < 4) return std::nullopt;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!is_connected(g, g.vertices() & ~singleton(u) & ~singleton(v))) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

inline int add_piece(DecompositionTree& t, const DecompositionNode& parent, VertexSet keep, std::optional<Edge> extra) {
  DecompositionNode node;
  node.graph = induced_subgraph(parent.graph, keep);
  for (int v : to_vector(keep)) node.original.push_back(parent.original[static_cast<std::size_t>(v)]);
  if (extra) {
    auto local = [&](int v) { return popcount(keep & first_n(v)); };
    const int a = local(extra->u);
    const int b = local(extra->v);
    if (!node.graph.adjacent(a, b)) node.graph = add_edge(node.graph, {a, b});
  }
  t.nodes.push_back(std::move(node));
  return static_cast<int>(t.nodes.size()) - 1;
}

inline void decompose_node(DecompositionTree& t, int idx) {
  const DecompositionNode cur = t.nodes[static_cast<std::size_t>(idx)];
  const SimpleGraph& g = cur.graph;
  VertexSet left = 0;
  VertexSet right = 0;
  int order = -1;
  std::vector<int> cut;
  std::optional<Edge> extra;
  std::vector<VertexSet> comps = components(g);
  if (comps.size() > 1) {
    order = 0;
    left = comps.front();
    right = g.vertices() & ~left;
  } else if (std::vector<int> cv = cut_vertices(g); !cv.empty()) {
    order = 1;
    const int v = cv.front();
    std::vector<VertexSet> parts = components(g, g.vertices() & ~singleton(v));
    left = parts.front() | singleton(v);
    right = (g.vertices() & ~parts.front()) | singleton(v);
    cut = {v};
  } else if (auto uv = least_two_cut(g)) {
    order = 2;
    const auto [u, v] = *uv;
    const VertexSet s = singleton(u) | singleton(v);
    std::vector<VertexSet> parts = components(g, g.vertices() & ~s);
    left = parts.front() | s;
    right = (g.vertices() & ~parts.front()) | s;
    cut = {u, v};
    extra = Edge{u, v};
  }
  if (order < 0) return;
  const int l = add_piece(t, cur, left, extra);
  const int r = add_piece(t, cur, right, extra);
  DecompositionNode& node = t.nodes[static_cast<std::size_t>(idx)];
  node.sum_order = order;
  node.left = l;
  node.right = r;
  for (int v : cut) node.cut.push_back(cur.original[static_cast<std::size_t>(v)]);
  node.virtual_edge = extra.has_value() && !g.adjacent(extra->u, extra->v);
  decompose_node(t, l);
  decompose_node(t, r);
}

} // namespace detail

/// Splits on components, then the least cut vertex, then the least 2-cut
/// (adding the virtual edge to both pieces), until every leaf is
/// 3-connected or has fewer than four vertices.
inline DecompositionTree decompose_012(const SimpleGraph& g) {
  DecompositionTree t;
  DecompositionNode root;
  root.graph = g;
  for (int v = 0; v < g.order(); ++v) root.original.push_back(v);
  t.nodes.push_back(std::move(root));
  if (g.order() > 0) detail::decompose_node(t, 0);
  return t;
}

/// Rebuilds the input graph from the leaves with apply_sum, in input labels.
inline SimpleGraph reassemble(const DecompositionTree& t) {
  auto rec = [&](auto& self, int idx) -> std::pair<SimpleGraph, std::vector<int>> {
    const DecompositionNode& n = t.nodes[static_cast<std::size_t>(idx)];
    if (n.is_leaf()) return {n.graph, n.original};
    auto [g1, o1] = self(self, n.left);
    auto [g2, o2] = self(self, n.right);
    auto local = [](const std::vector<int>& o, int label) {
      return static_cast<int>(std::find(o.begin(), o.end(), label) - o.begin());
    };
    SumSpec s;
    s.k = n.sum_order;
    for (int c : n.cut) s.identify.emplace_back(local(o1, c), local(o2, c));
    if (n.virtual_edge) s.deletions.push_back(make_edge(local(o1, n.cut[0]), local(o1, n.cut[1])));
    SimpleGraph g = apply_sum(g1, g2, s);
    std::vector<int> labels = o1;
    for (std::size_t v = 0; v < o2.size(); ++v) {
      if (std::find(n.cut.begin(), n.cut.end(), o2[v]) == n.cut.end()) labels.push_back(o2[v]);
    }
    return {g, labels};
  };
  if (t.nodes.empty() || t.nodes[0].graph.order() == 0) return SimpleGraph(0);
  auto [g, labels] = rec(rec, 0);
  return relabel(g, labels);
}

inline std::string format_decomposition(const DecompositionTree& t) {
  std::ostringstream os;
  auto rec = [&](auto& self, int idx, int depth) -> void {
    const DecompositionNode& n = t.nodes[static_cast<std::size_t>(idx)];
    os << std::string(static_cast<std::size_t>(2 * depth), ' ');
    if (n.is_leaf()) {
      os << "leaf " << to_graph6(n.graph) << " on {";
      for (std::size_t i = 0; i < n.original.size(); ++i) os << (i ? "," : "") << n.original[i];
      os << "}\n";
      return;
    }
    os << n.sum_order << "-sum";
    if (!n.cut.empty()) {
      os << " at {";
      for (std::size_t i = 0; i < n.cut.size(); ++i) os << (i ? "," : "") << n.cut[i];
      os << "}";
    }
    if (n.virtual_edge) os << " virtual";
    os << '\n';
    self(self, n.left, depth + 1);
    self(self, n.right, depth + 1);
  };
  if (!t.nodes.empty()) rec(rec, 0, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Special 3-sum closure membership

namespace detail {

struct KCatalogCache {
  std::mutex mu;
  std::map<bool, Catalog> catalogs;
  std::map<bool, int> bound;
};

inline KCatalogCache& k_cache() {
  static KCatalogCache c;
  return c;
}

} // namespace detail

/// Special 3-sum closure of K4, generated up to at least `max_vertices` and
/// cached per variant.
inline const Catalog& special_3sum_catalog(int max_vertices, bool allow_deletions) {
  auto& c = detail::k_cache();
  std::lock_guard lock(c.mu);
  max_vertices = std::max(max_vertices, 4);
  if (!c.catalogs.contains(allow_deletions) || c.bound[allow_deletions] < max_vertices) {
    c.catalogs[allow_deletions] = gen_special_3sum_K4(max_vertices, allow_deletions);
    c.bound[allow_deletions] = max_vertices;
  }
  return c.catalogs[allow_deletions];
}

/// Recognises the special 3-sum closure of K4 by undoing the last sum: the
/// vertex added last has degree 3, and replacing it by the triangle on its
/// neighbours gives a smaller member in which that triangle is
/// non-separating.
inline bool in_special_3sum_closure(const SimpleGraph& g, bool allow_deletions) {
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> memo;
  const CanonicalKey k4 = canonical_key(build(NamedGraphId{Family::Complete, 4}));
  auto rec = [&](auto& self, const SimpleGraph& h) -> bool {
    if (h.order() < 4) return false;
    CanonicalKey key = canonical_key(h);
    if (key == k4) return true;
    if (h.order() == 4) return false;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (int x = 0; x < h.order() && !ok; ++x) {
      if (h.degree(x) != 3) continue;
      const std::vector<int> nb = to_vector(h.neighbors(x));
      if (!allow_deletions && !(h.adjacent(nb[0], nb[1]) && h.adjacent(nb[1], nb[2]) && h.adjacent(nb[0], nb[2]))) {
        continue;
      }
      GraphBuilder b(delete_vertex(h, x));
      auto shift = [&](int v) { return v > x ? v - 1 : v; };
      const Triangle t = make_triangle(shift(nb[0]), shift(nb[1]), shift(nb[2]));
      b.add_edge(t.a, t.b).add_edge(t.b, t.c).add_edge(t.a, t.c);
      SimpleGraph prev = b.build();
      if (is_separating_triangle(prev, t)) continue;
      ok = self(self, prev);
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  return rec(rec, g);
}

// ---------------------------------------------------------------------------
// Deciders

enum class Verdict { Member, NonMember };

enum class Reason {
  IsC6Square,
  IsOddCycleSquare,
  ChainToC5Square,
  IsPlanar,
  IsLineK33,
  CatalogMember,
  Decomposition,
  NoChain,
  LeafOutsideBase,
};

inline std::string to_string(Verdict v) { return v == Verdict::Member ? "member" : "non-member"; }

inline std::string to_string(Reason r) {
  switch (r) {
  case Reason::IsC6Square: return "is-C6^2";
  case Reason::IsOddCycleSquare: return "is-odd-cycle-square";
  case Reason::ChainToC5Square: return "chain-to-C5^2";
  case Reason::IsPlanar: return "is-planar";
  case Reason::IsLineK33: return "is-L(K3,3)";
  case Reason::CatalogMember: return "catalog-member";
  case Reason::Decomposition: return "decomposition";
  case Reason::NoChain: return "no-chain-to-C5^2";
  case Reason::LeafOutsideBase: return "leaf-outside-base";
  }
  return "unknown";
}

struct ClassificationResult {
  Verdict verdict = Verdict::NonMember;
  Reason reason = Reason::NoChain;
  int parameter = 0;  // k for IsOddCycleSquare (n = 2k + 1)
  std::optional<Chain> chain;
  std::optional<DecompositionTree> tree;
  std::vector<std::string> leaf_labels;  // per leaf, in tree order
  std::string detail;

  bool member() const noexcept { return verdict == Verdict::Member; }
};

/// Text report with graph6 certificates.
inline std::string format_result(const ClassificationResult& r) {
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << '\n' << "reason: " << to_string(r.reason);
  if (r.reason == Reason::IsOddCycleSquare) os << " k=" << r.parameter;
  os << '\n';
  if (!r.detail.empty()) os << "detail: " << r.detail << '\n';
  if (r.chain) os << "chain:\n" << format_chain(*r.chain);
  if (r.tree) {
    os << "decomposition:\n" << format_decomposition(*r.tree);
    const std::vector<int> leaves = r.tree->leaves();
    for (std::size_t i = 0; i < leaves.size() && i < r.leaf_labels.size(); ++i) {
      os << "leaf " << to_graph6(r.tree->nodes[static_cast<std::size_t>(leaves[i])].graph) << ": " << r.leaf_labels[i]
         << '\n';
    }
  }
  return os.str();
}

namespace detail {

inline void require_4_connected(const SimpleGraph& g) {
  if (!is_k_connected(g, 4)) throw DomainError("this decider needs a 4-connected graph");
}

inline bool is_odd_cycle_square(const SimpleGraph& g) { return g.order() % 2 == 1 && is_squared_cycle(g); }

inline std::optional<ClassificationResult> chain_to_c5(const SimpleGraph& g, const SearchOptions& opts) {
  std::set<CanonicalKey> targets{canonical_key(build(NamedGraphId{Family::CycleSquare, 5}))};
  std::optional<Chain> c = find_chain(g, targets, opts);
  if (!c) return std::nullopt;
  ClassificationResult r;
  r.verdict = Verdict::Member;
  r.reason = Reason::ChainToC5Square;
  r.chain = std::move(c);
  return r;
}

} // namespace detail

/// 4-connected Oct1+-free characterisation: C6^2, an odd squared cycle, or
/// a chain of 4-connected contractions down to C5^2.
inline ClassificationResult decide_4conn_oct1_free(const SimpleGraph& g, const SearchOptions& opts = {}) {
  detail::require_4_connected(g);
  ClassificationResult r;
  if (g.order() == 6 && is_squared_cycle(g)) {
    r.verdict = Verdict::Member;
    r.reason = Reason::IsC6Square;
    return r;
  }
  if (detail::is_odd_cycle_square(g)) {
    r.verdict = Verdict::Member;
    r.reason = Reason::IsOddCycleSquare;
    r.parameter = (g.order() - 1) / 2;
    return r;
  }
  if (auto c = detail::chain_to_c5(g, opts)) return *c;
  r.verdict = Verdict::NonMember;
  r.reason = Reason::NoChain;
  r.detail = "contraction space exhausted without reaching C5^2";
  return r;
}

/// 4-connected Oct2+-free characterisation: planar, an odd squared cycle,
/// L(K3,3), or a chain down to C5^2.
inline ClassificationResult decide_4conn_oct2_free(const SimpleGraph& g, const SearchOptions& opts = {}) {
  detail::require_4_connected(g);
  ClassificationResult r;
  r.verdict = Verdict::Member;
  if (is_planar(g)) {
    r.reason = Reason::IsPlanar;
    return r;
  }
  if (detail::is_odd_cycle_square(g)) {
    r.reason = Reason::IsOddCycleSquare;
    r.parameter = (g.order() - 1) / 2;
    return r;
  }
  if (g.order() == 9 && canonical_key(g) == canonical_key(build(NamedGraphId{Family::LineK33}))) {
    r.reason = Reason::IsLineK33;
    return r;
  }
  if (auto c = detail::chain_to_c5(g, opts)) return *c;
  r.verdict = Verdict::NonMember;
  r.reason = Reason::NoChain;
  r.detail = "non-planar, not a listed graph, and no chain to C5^2";
  return r;
}

struct PlanarDeciderOptions {
  bool allow_deletions = true;  // which special 3-sum closure to use
  int catalog_limit = 9;        // larger leaves use the recogniser
};

/// Planar Oct1+-free characterisation: every leaf of the 0/1/2-sum
/// decomposition (virtual edges present) is K1, K2, K3, Oct, L5, or in the
/// special 3-sum closure of K4.
inline ClassificationResult decide_planar_oct1_free(const SimpleGraph& g, const PlanarDeciderOptions& opts = {}) {
  if (!is_planar(g)) throw DomainError("this decider needs a planar graph");
  ClassificationResult r;
  r.tree = decompose_012(g);
  const CanonicalKey oct = canonical_key(build(NamedGraphId{Family::Oct}));
  const CanonicalKey l5 = canonical_key(build(NamedGraphId{Family::L5}));
  bool all_ok = true;
  int biggest = 4;
  for (int idx : r.tree->leaves()) biggest = std::max(biggest, r.tree->nodes[static_cast<std::size_t>(idx)].graph.order());
  const Catalog& cat = special_3sum_catalog(std::min(biggest, opts.catalog_limit), opts.allow_deletions);
  for (int idx : r.tree->leaves()) {
    const SimpleGraph& leaf = r.tree->nodes[static_cast<std::size_t>(idx)].graph;
    std::string label;
    if (leaf.order() <= 3) {
      label = "K" + std::to_string(leaf.order());
    } else {
      const CanonicalKey k = canonical_key(leaf);
      if (k == oct) {
        label = "Oct";
      } else if (k == l5) {
        label = "L5";
      } else if (leaf.order() <= opts.catalog_limit ? cat.contains(k)
                                                     : in_special_3sum_closure(leaf, opts.allow_deletions)) {
        label = "special-3-sum-closure";
      } else {
        label = "outside base";
        all_ok = false;
      }
    }
    r.leaf_labels.push_back(label);
  }
  const bool single = r.tree->nodes.size() == 1;
  r.verdict = all_ok ? Verdict::Member : Verdict::NonMember;
  r.reason = !all_ok ? Reason::LeafOutsideBase : (single ? Reason::CatalogMember : Reason::Decomposition);
  if (single && all_ok) r.detail = r.leaf_labels.front();
  return r;
}

} // namespace octminor

#endif // OCTMINOR_CHARACTERIZE_HPP
