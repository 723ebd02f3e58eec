#ifndef OCTMINOR_MINORS_HPP
#define OCTMINOR_MINORS_HPP

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "canon.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace octminor {

/// Certificate that h is a minor of g: branch_sets[x] is the set of
/// g-vertices that contract onto h-vertex x.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

/// Certificate that g contains a subdivision of h. paths[i] runs from
/// branch_vertices[h_edges[i].u] to branch_vertices[h_edges[i].v].
struct SubdivisionModel {
  std::vector<int> branch_vertices;
  std::vector<Edge> h_edges;
  std::vector<std::vector<int>> paths;
};

inline std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("OCTMINOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

struct SearchOptions {
  std::uint64_t node_budget = default_node_budget();
};

/// Checks the three model conditions directly: disjoint nonempty branch
/// sets, each connected in g, and a g-edge between the sets of every h-edge.
inline bool verify_model(const SimpleGraph& g, const SimpleGraph& h, const MinorModel& m) {
  if (static_cast<int>(m.branch_sets.size()) != h.order()) return false;
  VertexSet used = 0;
  for (VertexSet b : m.branch_sets) {
    if (b == 0 || (b & ~g.vertices()) != 0 || (b & used) != 0) return false;
    used |= b;
    // connectivity by plain flood fill
    std::vector<int> members = to_vector(b);
    std::vector<char> seen(members.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!seen[j] && g.adjacent(members[i], members[j])) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    if (reached != members.size()) return false;
  }
  for (Edge e : h.edges()) {
    bool linked = false;
    for (int a : to_vector(m.branch_sets[static_cast<std::size_t>(e.u)])) {
      for (int b : to_vector(m.branch_sets[static_cast<std::size_t>(e.v)])) {
        if (g.adjacent(a, b)) linked = true;
      }
    }
    if (!linked) return false;
  }
  return true;
}

inline bool verify_subdivision(const SimpleGraph& g, const SimpleGraph& h,
                               const SubdivisionModel& m) {
  if (static_cast<int>(m.branch_vertices.size()) != h.order()) return false;
  if (m.h_edges != h.edges() || m.paths.size() != m.h_edges.size()) return false;
  VertexSet used = 0;
  for (int v : m.branch_vertices) {
    if (v < 0 || v >= g.order() || contains(used, v)) return false;
    used |= singleton(v);
  }
  for (std::size_t i = 0; i < m.paths.size(); ++i) {
    const auto& p = m.paths[i];
    if (p.size() < 2) return false;
    if (p.front() != m.branch_vertices[static_cast<std::size_t>(m.h_edges[i].u)] ||
        p.back() != m.branch_vertices[static_cast<std::size_t>(m.h_edges[i].v)]) {
      return false;
    }
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k + 1] < 0 || p[k + 1] >= g.order() || !g.adjacent(p[k], p[k + 1])) return false;
    }
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      if (contains(used, p[k])) return false;
      used |= singleton(p[k]);
    }
  }
  return true;
}

/// One line per h-vertex: "x: v1 v2 ...".
inline std::string format_minor_model(const MinorModel& m) {
  std::ostringstream os;
  for (std::size_t x = 0; x < m.branch_sets.size(); ++x) {
    os << x << ':';
    for (int v : to_vector(m.branch_sets[x])) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

/// One line per h-edge: "x-y: v1 v2 ... vk".
inline std::string format_subdivision(const SubdivisionModel& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.paths.size(); ++i) {
    os << m.h_edges[i].u << '-' << m.h_edges[i].v << ':';
    for (int v : m.paths[i]) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

namespace detail {

/// Injective, adjacency-preserving map h -> g restricted to `allowed`
/// (`map[x]` is the image of h-vertex x).
inline std::optional<std::vector<int>> subgraph_embedding(const SimpleGraph& h,
                                                          const SimpleGraph& g,
                                                          VertexSet allowed) {
  const int k = h.order();
  allowed &= g.vertices();
  if (popcount(allowed) < k) return std::nullopt;
  // Place high-degree vertices first, then whoever has most placed neighbours.
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < k) {
    int best = -1;
    std::pair<int, int> best_score{-1, -1};
    for (int x = 0; x < k; ++x) {
      if (contains(placed, x)) continue;
      std::pair<int, int> score{popcount(h.neighbors(x) & placed), h.degree(x)};
      if (score > best_score) {
        best_score = score;
        best = x;
      }
    }
    order.push_back(best);
    placed |= singleton(best);
  }
  std::vector<int> map(static_cast<std::size_t>(k), -1);
  auto rec = [&](auto& self, std::size_t i, VertexSet free) -> bool {
    if (i == order.size()) return true;
    const int x = order[i];
    VertexSet cand = free;
    for_each_vertex(h.neighbors(x), [&](int y) {
      int img = map[static_cast<std::size_t>(y)];
      if (img >= 0) cand &= g.neighbors(img);
    });
    const int need = h.degree(x);
    bool ok = false;
    for_each_vertex(cand, [&](int c) {
      if (ok || g.degree(c) < need) return;
      map[static_cast<std::size_t>(x)] = c;
      if (self(self, i + 1, free & ~singleton(c))) ok = true;
      else map[static_cast<std::size_t>(x)] = -1;
    });
    return ok;
  };
  if (!rec(rec, 0, allowed)) return std::nullopt;
  return map;
}

inline void contract_parts(std::vector<VertexSet>& parts, Edge e) {
  parts[static_cast<std::size_t>(e.u)] |= parts[static_cast<std::size_t>(e.v)];
  parts.erase(parts.begin() + e.v);
}

// Depth-first search over contraction (and, if allowed, vertex-deletion)
// minors of g down to |V(h)| vertices, then a spanning-subgraph test.
// States are deduplicated by canonical key; `parts` tracks which original
// vertices each state vertex stands for.
class MinorSearch {
public:
  MinorSearch(const SimpleGraph& h, bool allow_delete, std::uint64_t budget)
      : h_(h), k_(h.order()), mh_(h.size()), allow_delete_(allow_delete), budget_(budget) {}

  std::optional<MinorModel> run(const SimpleGraph& g, std::vector<VertexSet> parts) {
    if (dfs(g, parts)) return result_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  bool edge_bound_ok(int n, int m) const {
    if (allow_delete_) return m >= mh_;
    return m - (n - k_) >= mh_;
  }

  bool dfs(const SimpleGraph& s, const std::vector<VertexSet>& parts) {
    if (++nodes_ > budget_) {
      throw BudgetExceededError("minor search exceeded node budget of " +
                                std::to_string(budget_));
    }
    const int n = s.order();
    if (n < k_ || !edge_bound_ok(n, s.size())) return false;
    if (n == k_) {
      auto emb = subgraph_embedding(h_, s, s.vertices());
      if (!emb) return false;
      MinorModel m;
      for (int x = 0; x < k_; ++x) {
        m.branch_sets.push_back(parts[static_cast<std::size_t>((*emb)[static_cast<std::size_t>(x)])]);
      }
      result_ = std::move(m);
      return true;
    }
    CanonicalKey key = canonical_key(s);
    if (dead_.contains(key)) return false;

    std::vector<std::pair<int, Edge>> moves;
    for (Edge e : s.edges()) moves.emplace_back(common_neighbor_count(s, e.u, e.v), e);
    std::stable_sort(moves.begin(), moves.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [common, e] : moves) {
      if (!edge_bound_ok(n - 1, s.size() - 1 - common)) continue;
      std::vector<VertexSet> next = parts;
      contract_parts(next, e);
      if (dfs(contract_edge(s, e), next)) return true;
    }
    if (allow_delete_) {
      for (int v = 0; v < n; ++v) {
        if (!edge_bound_ok(n - 1, s.size() - s.degree(v))) continue;
        std::vector<VertexSet> next = parts;
        next.erase(next.begin() + v);
        if (dfs(delete_vertex(s, v), next)) return true;
      }
    }
    dead_.insert(std::move(key));
    return false;
  }

  const SimpleGraph& h_;
  int k_;
  int mh_;
  bool allow_delete_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> dead_;
  std::optional<MinorModel> result_;
};

} // namespace detail

/// A model of h in g, or nullopt when g is h-free. The search is exhaustive;
/// running out of budget throws BudgetExceededError.
inline std::optional<MinorModel> find_minor(const SimpleGraph& g, const SimpleGraph& h,
                                            const SearchOptions& opts = {}) {
  const int k = h.order();
  if (k == 0) return MinorModel{};
  if (g.order() < k || g.size() < h.size()) return std::nullopt;
  if (cycle_rank(g) < cycle_rank(h)) return std::nullopt;

  const std::vector<VertexSet> h_parts = components(h);
  if (h_parts.size() == 1) {
    // Connected h in connected g: unused vertices can always be absorbed
    // into a neighbouring branch set, so contractions alone suffice.
    for (VertexSet comp : components(g)) {
      if (popcount(comp) < k) continue;
      SimpleGraph sub = induced_subgraph(g, comp);
      if (sub.size() < h.size()) continue;
      std::vector<int> labels = to_vector(comp);
      std::vector<VertexSet> parts;
      for (int i = 0; i < sub.order(); ++i) parts.push_back(singleton(i));
      detail::MinorSearch search(h, false, opts.node_budget);
      if (auto m = search.run(sub, parts)) {
        for (VertexSet& b : m->branch_sets) {
          VertexSet mapped = 0;
          for_each_vertex(b, [&](int i) { mapped |= singleton(labels[static_cast<std::size_t>(i)]); });
          b = mapped;
        }
        return m;
      }
    }
    return std::nullopt;
  }
  std::vector<VertexSet> parts;
  for (int i = 0; i < g.order(); ++i) parts.push_back(singleton(i));
  detail::MinorSearch search(h, true, opts.node_budget);
  return search.run(g, parts);
}

inline bool has_minor(const SimpleGraph& g, const SimpleGraph& h, const SearchOptions& opts = {}) {
  return find_minor(g, h, opts).has_value();
}

namespace detail {

class SubdivisionSearch {
public:
  SubdivisionSearch(const SimpleGraph& g, const SimpleGraph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), hedges_(h.edges()),
        phi_(static_cast<std::size_t>(h.order()), -1), paths_(hedges_.size()),
        routed_(hedges_.size(), 0) {
    // breadth-first from a maximum-degree vertex, component by component
    VertexSet placed = 0;
    while (static_cast<int>(order_.size()) < h.order()) {
      int start = -1;
      for (int x = 0; x < h.order(); ++x) {
        if (!contains(placed, x) && (start < 0 || h.degree(x) > h.degree(start))) start = x;
      }
      std::vector<int> queue{start};
      placed |= singleton(start);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for_each_vertex(h.neighbors(queue[i]) & ~placed, [&](int y) {
          placed |= singleton(y);
          queue.push_back(y);
        });
      }
    }
  }

  std::optional<SubdivisionModel> run() {
    if (!assign(0)) return std::nullopt;
    SubdivisionModel m;
    m.branch_vertices = phi_;
    m.h_edges = hedges_;
    m.paths = paths_;
    return m;
  }

private:
  void tick() {
    if (++nodes_ > budget_) {
      throw BudgetExceededError("subdivision search exceeded node budget of " +
                                std::to_string(budget_));
    }
  }

  bool feasible() const {
    for (int x = 0; x < h_.order(); ++x) {
      int bx = phi_[static_cast<std::size_t>(x)];
      if (bx < 0) continue;
      int pending = 0;
      int direct = 0;
      for (std::size_t i = 0; i < hedges_.size(); ++i) {
        if (routed_[i] || (hedges_[i].u != x && hedges_[i].v != x)) continue;
        ++pending;
        int y = hedges_[i].u == x ? hedges_[i].v : hedges_[i].u;
        int by = phi_[static_cast<std::size_t>(y)];
        if (by >= 0 && g_.adjacent(bx, by)) ++direct;
      }
      if (popcount(g_.neighbors(bx) & ~used_) + direct < pending) return false;
    }
    return true;
  }

  bool assign(std::size_t idx) {
    if (idx == order_.size()) return true;
    const int x = order_[idx];
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < hedges_.size(); ++i) {
      const Edge e = hedges_[i];
      int other = e.u == x ? e.v : (e.v == x ? e.u : -1);
      if (other >= 0 && phi_[static_cast<std::size_t>(other)] >= 0) todo.push_back(i);
    }
    const int need = h_.degree(x);
    for (int c = 0; c < g_.order(); ++c) {
      if (contains(used_, c) || g_.degree(c) < need) continue;
      tick();
      phi_[static_cast<std::size_t>(x)] = c;
      used_ |= singleton(c);
      if (feasible() && route(idx, todo, 0)) return true;
      used_ &= ~singleton(c);
      phi_[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  }

  bool route(std::size_t idx, const std::vector<std::size_t>& todo, std::size_t j) {
    if (j == todo.size()) return assign(idx + 1);
    const std::size_t ei = todo[j];
    const int a = phi_[static_cast<std::size_t>(hedges_[ei].u)];
    const int b = phi_[static_cast<std::size_t>(hedges_[ei].v)];
    std::vector<int> path{a};
    return extend(idx, todo, j, path, b);
  }

  bool extend(std::size_t idx, const std::vector<std::size_t>& todo, std::size_t j,
              std::vector<int>& path, int target) {
    tick();
    const int cur = path.back();
    const std::size_t ei = todo[j];
    if (g_.adjacent(cur, target)) {
      path.push_back(target);
      paths_[ei] = path;
      routed_[ei] = 1;
      if (feasible() && route(idx, todo, j + 1)) return true;
      routed_[ei] = 0;
      paths_[ei].clear();
      path.pop_back();
    }
    VertexSet next = g_.neighbors(cur) & ~used_;
    bool done = false;
    for_each_vertex(next, [&](int w) {
      if (done) return;
      used_ |= singleton(w);
      path.push_back(w);
      if (extend(idx, todo, j, path, target)) done = true;
      else {
        path.pop_back();
        used_ &= ~singleton(w);
      }
    });
    return done;
  }

  const SimpleGraph& g_;
  const SimpleGraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Edge> hedges_;
  std::vector<int> order_;
  std::vector<int> phi_;
  std::vector<std::vector<int>> paths_;
  std::vector<char> routed_;
  VertexSet used_ = 0;
};

} // namespace detail

/// A subdivision of h inside g, or nullopt. Exhaustive within the budget.
inline std::optional<SubdivisionModel> find_topological_minor(const SimpleGraph& g,
                                                              const SimpleGraph& h,
                                                              const SearchOptions& opts = {}) {
  if (h.order() == 0) return SubdivisionModel{};
  if (h.max_degree() > g.max_degree()) return std::nullopt;
  if (g.order() < h.order() || g.size() < h.size()) return std::nullopt;
  detail::SubdivisionSearch search(g, h, opts.node_budget);
  return search.run();
}

// ---------------------------------------------------------------------------
// Planarity

inline SimpleGraph k5_graph() {
  return SimpleGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline SimpleGraph k33_graph() {
  return SimpleGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

struct PlanarityResult {
  bool planar = true;
  /// "K5" or "K3,3" when non-planar.
  std::string obstruction;
  std::optional<MinorModel> witness;
};

namespace detail {

// Deletes vertices of degree <= 1 and contracts away degree-2 vertices.
// Both moves preserve the existence of minors of min-degree-3 graphs.
inline SimpleGraph suppress_low_degree(SimpleGraph g) {
  for (bool again = true; again;) {
    again = false;
    for (int v = 0; v < g.order(); ++v) {
      int d = g.degree(v);
      if (d <= 1) {
        g = delete_vertex(g, v);
        again = true;
        break;
      }
      if (d == 2) {
        g = contract_edge(g, make_edge(v, lowest(g.neighbors(v))));
        again = true;
        break;
      }
    }
  }
  return g;
}

// Path-addition planarity test for a 2-connected graph: grow an embedding
// from a cycle, each time placing a path of some fragment (a chord or a
// component of the rest plus its attachments) into a face containing all of
// the fragment's attachments, forced placements first.
inline bool path_addition_planar(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  // initial cycle through edge (0, w): a shortest 0-w path avoiding that edge
  const int w = lowest(g.neighbors(0));
  std::vector<int> prev(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{w};
  prev[static_cast<std::size_t>(w)] = w;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for_each_vertex(g.neighbors(x), [&](int y) {
      if (prev[static_cast<std::size_t>(y)] >= 0 || (x == w && y == 0)) return;
      prev[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    });
  }
  if (prev[0] < 0) throw DomainError("path-addition test needs a 2-connected graph");
  std::vector<int> cycle;
  for (int x = 0; x != w; x = prev[static_cast<std::size_t>(x)]) cycle.push_back(x);
  cycle.push_back(w);
  std::vector<std::vector<int>> faces{cycle, cycle};
  VertexSet placed = to_set(cycle);
  std::array<VertexSet, kMaxOrder> emb{};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % cycle.size()];
    emb[static_cast<std::size_t>(a)] |= singleton(b);
    emb[static_cast<std::size_t>(b)] |= singleton(a);
  }
  int embedded_edges = static_cast<int>(cycle.size());
  struct Fragment {
    VertexSet attach = 0;
    VertexSet interior = 0;
    Edge chord{};
  };
  while (embedded_edges < g.size()) {
    std::vector<Fragment> frags;
    for_each_vertex(placed, [&](int x) {
      for_each_vertex(g.neighbors(x) & placed & ~emb[static_cast<std::size_t>(x)] & ~first_n(x + 1),
                      [&](int y) { frags.push_back({singleton(x) | singleton(y), 0, {x, y}}); });
    });
    for (VertexSet c : components(g, g.vertices() & ~placed)) {
      VertexSet att = 0;
      for_each_vertex(c, [&](int x) { att |= g.neighbors(x) & placed; });
      frags.push_back({att, c, {}});
    }
    std::size_t best = frags.size();
    std::size_t best_face = 0;
    int best_count = INT_MAX;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      int count = 0;
      std::size_t first = 0;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if ((frags[i].attach & ~to_set(faces[f])) == 0) {
          if (count++ == 0) first = f;
        }
      }
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best = i;
        best_face = first;
      }
    }
    const Fragment& fr = frags[best];
    std::vector<int> path;  // a, interior..., b
    if (fr.interior == 0) {
      path = {fr.chord.u, fr.chord.v};
    } else {
      const int a = lowest(fr.attach);
      std::vector<int> from(static_cast<std::size_t>(n), -1);
      std::vector<int> q;
      for_each_vertex(g.neighbors(a) & fr.interior, [&](int y) {
        from[static_cast<std::size_t>(y)] = a;
        q.push_back(y);
      });
      int end = -1;
      int last = -1;
      for (std::size_t qi = 0; qi < q.size() && end < 0; ++qi) {
        const int x = q[qi];
        VertexSet out = g.neighbors(x) & fr.attach & ~singleton(a);
        if (out != 0) {
          end = lowest(out);
          last = x;
          break;
        }
        for_each_vertex(g.neighbors(x) & fr.interior, [&](int y) {
          if (from[static_cast<std::size_t>(y)] < 0) {
            from[static_cast<std::size_t>(y)] = x;
            q.push_back(y);
          }
        });
      }
      if (end < 0) throw DomainError("path-addition test needs a 2-connected graph");
      path.push_back(end);
      for (int x = last; x != a; x = from[static_cast<std::size_t>(x)]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }
    const std::vector<int> face = faces[best_face];
    const std::size_t len = face.size();
    const std::size_t i = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const std::size_t j = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<int> f1;
    std::vector<int> f2;
    for (std::size_t k = i;; k = (k + 1) % len) {
      f1.push_back(face[k]);
      if (k == j) break;
    }
    for (std::size_t k = path.size() - 2; k >= 1; --k) f1.push_back(path[k]);
    for (std::size_t k = j;; k = (k + 1) % len) {
      f2.push_back(face[k]);
      if (k == i) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
    faces[best_face] = std::move(f1);
    faces.push_back(std::move(f2));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      emb[static_cast<std::size_t>(path[k])] |= singleton(path[k + 1]);
      emb[static_cast<std::size_t>(path[k + 1])] |= singleton(path[k]);
      placed |= singleton(path[k]) | singleton(path[k + 1]);
      ++embedded_edges;
    }
  }
  return true;
}

// Name of a Kuratowski minor of g, or "" when g is planar. Splits along
// components, cut vertices and 2-cuts (adding the virtual edge); a
// 3-connected non-planar piece other than K5 has a K3,3 minor.
inline std::string kuratowski_obstruction(const SimpleGraph& input) {
  SimpleGraph g = suppress_low_degree(input);
  const int n = g.order();
  if (n <= 4) return "";
  if (cycle_rank(g) < 4) return "";

  auto recurse_pieces = [&](const std::vector<SimpleGraph>& pieces) -> std::string {
    for (const auto& p : pieces) {
      std::string r = kuratowski_obstruction(p);
      if (!r.empty()) return r;
    }
    return "";
  };

  std::vector<VertexSet> comps = components(g);
  if (comps.size() > 1) {
    std::vector<SimpleGraph> pieces;
    for (VertexSet c : comps) pieces.push_back(induced_subgraph(g, c));
    return recurse_pieces(pieces);
  }
  for (int c = 0; c < n; ++c) {
    std::vector<VertexSet> parts = components(g, g.vertices() & ~singleton(c));
    if (parts.size() > 1) {
      std::vector<SimpleGraph> pieces;
      for (VertexSet p : parts) pieces.push_back(induced_subgraph(g, p | singleton(c)));
      return recurse_pieces(pieces);
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      VertexSet sep = singleton(u) | singleton(v);
      std::vector<VertexSet> parts = components(g, g.vertices() & ~sep);
      if (parts.size() <= 1) continue;
      std::vector<SimpleGraph> pieces;
      for (VertexSet p : parts) {
        VertexSet keep = p | sep;
        SimpleGraph piece = induced_subgraph(g, keep);
        // positions of u and v after relabelling
        int iu = popcount(keep & first_n(u));
        int iv = popcount(keep & first_n(v));
        if (!piece.adjacent(iu, iv)) piece = add_edge(piece, make_edge(iu, iv));
        pieces.push_back(piece);
      }
      return recurse_pieces(pieces);
    }
  }
  if (n == 5 && g.size() == 10) return "K5";
  if (g.size() > 3 * n - 6) return "K3,3";
  return path_addition_planar(g) ? "" : "K3,3";
}

} // namespace detail

/// Wagner's criterion: planar iff neither K5 nor K3,3 is a minor. A
/// non-planar answer carries the obstruction and a verified model.
inline PlanarityResult planarity(const SimpleGraph& g, const SearchOptions& opts = {}) {
  std::string kind = detail::kuratowski_obstruction(g);
  if (kind.empty()) return {};
  PlanarityResult r;
  r.planar = false;
  const SimpleGraph first = kind == "K5" ? k5_graph() : k33_graph();
  const SimpleGraph second = kind == "K5" ? k33_graph() : k5_graph();
  if (auto m = find_minor(g, first, opts)) {
    r.obstruction = kind;
    r.witness = std::move(m);
  } else if (auto m2 = find_minor(g, second, opts)) {
    r.obstruction = kind == "K5" ? "K3,3" : "K5";
    r.witness = std::move(m2);
  } else {
    throw InternalError("non-planar piece found but no Kuratowski minor in the whole graph");
  }
  return r;
}

/// Planarity verdict without building a witness.
inline bool is_planar(const SimpleGraph& g) {
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
  return detail::kuratowski_obstruction(g).empty();
}

} // namespace octminor

#endif // OCTMINOR_MINORS_HPP
