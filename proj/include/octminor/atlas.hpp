#ifndef OCTMINOR_ATLAS_HPP
#define OCTMINOR_ATLAS_HPP

#include <charconv>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "canon.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "fixed_graphs.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "minors.hpp"
#include "transforms.hpp"

namespace octminor {

enum class Family {
  Complete,          // K<p>
  CompleteBipartite, // K<p>,<q>
  Cycle,             // C<p>
  CycleSquare,       // C<p>^2
  Wheel,             // W<p>: hub 0, rim 1..p
  Prism,
  Cube,
  Oct,
  OctMinusEdge,
  OctPlus,
  Oct1Plus,
  Oct2Plus,
  V8,
  P10,
  L4Prime,
  L5,
  L5Prime,
  L5DoublePrime,
  K5Triangle,
  LineK33,
  LineCube,
  LineV8,
};

struct NamedGraphId {
  Family family = Family::Complete;
  int p = 0;
  int q = 0;

  friend bool operator==(const NamedGraphId&, const NamedGraphId&) = default;
};

namespace detail {

struct FixedName {
  std::string_view name;
  Family family;
};

inline constexpr FixedName kFixedNames[] = {
    {"Prism", Family::Prism},     {"Cube", Family::Cube},         {"Oct", Family::Oct},
    {"Oct-e", Family::OctMinusEdge}, {"Oct\\e", Family::OctMinusEdge}, {"Oct+", Family::OctPlus},
    {"Oct1+", Family::Oct1Plus},  {"Oct2+", Family::Oct2Plus},    {"V8", Family::V8},
    {"P10", Family::P10},         {"L4'", Family::L4Prime},       {"L5", Family::L5},
    {"L5'", Family::L5Prime},     {"L5''", Family::L5DoublePrime}, {"K5^tri", Family::K5Triangle},
    {"L(K3,3)", Family::LineK33}, {"L(Cube)", Family::LineCube},  {"L(V8)", Family::LineV8},
};

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace detail

/// Parses names such as "K5", "K3,3", "C7^2", "W5", "Oct1+", "L(V8)".
inline NamedGraphId parse_named_graph(std::string_view name) {
  for (const auto& f : detail::kFixedNames) {
    if (f.name == name) return {f.family, 0, 0};
  }
  NamedGraphId id;
  auto fail = [&]() -> NamedGraphId { throw DomainError("unknown graph name '" + std::string(name) + "'"); };
  if (name.size() < 2) return fail();
  const char head = name[0];
  std::string_view rest = name.substr(1);
  if (head == 'K') {
    std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      if (!detail::parse_int(rest, id.p)) return fail();
      id.family = Family::Complete;
    } else {
      if (!detail::parse_int(rest.substr(0, comma), id.p) || !detail::parse_int(rest.substr(comma + 1), id.q)) {
        return fail();
      }
      id.family = Family::CompleteBipartite;
    }
  } else if (head == 'C') {
    if (rest.ends_with("^2")) {
      if (!detail::parse_int(rest.substr(0, rest.size() - 2), id.p)) return fail();
      id.family = Family::CycleSquare;
    } else {
      if (!detail::parse_int(rest, id.p)) return fail();
      id.family = Family::Cycle;
    }
  } else if (head == 'W') {
    if (!detail::parse_int(rest, id.p)) return fail();
    id.family = Family::Wheel;
  } else {
    return fail();
  }
  return id;
}

inline std::string to_string(const NamedGraphId& id) {
  switch (id.family) {
  case Family::Complete: return "K" + std::to_string(id.p);
  case Family::CompleteBipartite: return "K" + std::to_string(id.p) + "," + std::to_string(id.q);
  case Family::Cycle: return "C" + std::to_string(id.p);
  case Family::CycleSquare: return "C" + std::to_string(id.p) + "^2";
  case Family::Wheel: return "W" + std::to_string(id.p);
  default: break;
  }
  for (const auto& f : detail::kFixedNames) {
    if (f.family == id.family) return std::string(f.name);
  }
  throw InternalError("unnamed family");
}

/// Every parameter-free name plus a few representative parametrised ones.
inline std::vector<std::string> atlas_names() {
  std::vector<std::string> out = {"K4", "K5", "K6", "K3,3", "C5^2", "C6^2", "C7^2", "C8^2", "W4", "W5"};
  for (const auto& f : detail::kFixedNames) {
    if (f.name != "Oct\\e") out.emplace_back(f.name);
  }
  return out;
}

namespace detail {

inline SimpleGraph from_edges(int n, std::span<const Edge> es) { return SimpleGraph(n, es); }

inline void check_param(bool ok, const NamedGraphId& id) {
  if (!ok) throw DomainError("parameter out of range for " + to_string(id));
}

// Oct labelled as C6^2: i ~ j unless |i - j| = 3.
inline SimpleGraph octahedron() {
  GraphBuilder b(6);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (j - i != 3) b.add_edge(i, j);
    }
  }
  return b.build();
}

} // namespace detail

/// Builds the named graph with the fixed labelling documented per family.
inline SimpleGraph build(const NamedGraphId& id) {
  using detail::check_param;
  switch (id.family) {
  case Family::Complete: {
    check_param(id.p >= 1 && id.p <= kMaxOrder, id);
    GraphBuilder b(id.p);
    for (int i = 0; i < id.p; ++i) {
      for (int j = i + 1; j < id.p; ++j) b.add_edge(i, j);
    }
    return b.build();
  }
  case Family::CompleteBipartite: {
    check_param(id.p >= 1 && id.q >= 1 && id.p + id.q <= kMaxOrder, id);
    GraphBuilder b(id.p + id.q);
    for (int i = 0; i < id.p; ++i) {
      for (int j = 0; j < id.q; ++j) b.add_edge(i, id.p + j);
    }
    return b.build();
  }
  case Family::Cycle:
  case Family::CycleSquare: {
    check_param(id.p >= 3 && id.p <= kMaxOrder, id);
    const int reach = id.family == Family::Cycle ? 1 : 2;
    GraphBuilder b(id.p);
    for (int i = 0; i < id.p; ++i) {
      for (int d = 1; d <= reach; ++d) {
        if ((i + d) % id.p != i) b.add_edge(i, (i + d) % id.p);
      }
    }
    return b.build();
  }
  case Family::Wheel: {
    check_param(id.p >= 3 && id.p + 1 <= kMaxOrder, id);
    GraphBuilder b(id.p + 1);
    for (int i = 1; i <= id.p; ++i) b.add_edge(0, i).add_edge(i, i % id.p + 1);
    return b.build();
  }
  case Family::Prism:
    return SimpleGraph(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  case Family::Cube: {
    GraphBuilder b(8);
    for (int x = 0; x < 8; ++x) {
      for (int bit = 1; bit < 8; bit <<= 1) {
        if ((x & bit) == 0) b.add_edge(x, x | bit);
      }
    }
    return b.build();
  }
  case Family::Oct: return detail::octahedron();
  case Family::OctMinusEdge: return delete_edge(detail::octahedron(), {0, 1});
  case Family::OctPlus: return add_edge(detail::octahedron(), {2, 5});
  case Family::Oct1Plus:
  case Family::Oct2Plus: {
    // N(0) = {1,2,4,5} induces the 4-cycle 1-2-4-5.
    const bool planar_kind = id.family == Family::Oct1Plus;
    SplitSpec s{0, planar_kind ? to_set(std::vector{1, 2}) : to_set(std::vector{1, 4}),
                planar_kind ? to_set(std::vector{4, 5}) : to_set(std::vector{2, 5}), 3};
    SimpleGraph g = apply_split(detail::octahedron(), s);
    if (g.order() != 7 || g.size() != 13 || is_planar(g) != planar_kind) {
      throw InternalError("3-split of Oct failed its planarity validation");
    }
    return g;
  }
  case Family::V8:
  case Family::L4Prime: return detail::from_edges(8, fixed::kL4Prime);
  case Family::P10: return detail::from_edges(10, fixed::kP10);
  case Family::L5: return detail::from_edges(10, fixed::kL5);
  case Family::L5Prime: return detail::from_edges(10, fixed::kL5Prime);
  case Family::L5DoublePrime: throw DomainError("L5'' has no transcribed adjacency");
  case Family::K5Triangle: {
    // Prism triangle {0,1,2} identified with K5's {0,1,2}, all three common
    // edges deleted.
    SumSpec s{3, {{0, 0}, {1, 1}, {2, 2}}, {{0, 1}, {1, 2}, {0, 2}}};
    return apply_sum(build({Family::Prism}), build({Family::Complete, 5}), s);
  }
  case Family::LineK33: return line_graph(build({Family::CompleteBipartite, 3, 3}));
  case Family::LineCube: return line_graph(build({Family::Cube}));
  case Family::LineV8: return line_graph(build({Family::V8}));
  }
  throw InternalError("unhandled family");
}

inline SimpleGraph build(std::string_view name) { return build(parse_named_graph(name)); }

// ---------------------------------------------------------------------------
// Catalogs

struct CatalogEntry {
  SimpleGraph graph;
  CanonicalKey key;
  std::string provenance;
};

/// Isomorphism-deduplicated collection in insertion order.
class Catalog {
public:
  /// False when an isomorphic entry is already present.
  bool insert(SimpleGraph g, std::string provenance) {
    CanonicalKey k = canonical_key(g);
    return insert(std::move(g), std::move(k), std::move(provenance));
  }

  bool insert(SimpleGraph g, CanonicalKey k, std::string provenance) {
    if (index_.contains(k)) return false;
    index_.emplace(k, entries_.size());
    entries_.push_back({std::move(g), std::move(k), std::move(provenance)});
    return true;
  }

  bool contains(const CanonicalKey& k) const { return index_.contains(k); }
  bool contains(const SimpleGraph& g) const { return contains(canonical_key(g)); }

  const CatalogEntry* find(const CanonicalKey& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Set when a generator stopped at its size guard.
  bool truncated = false;
  std::string truncation_note;

private:
  std::vector<CatalogEntry> entries_;
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> index_;
};

// Provenance strings are a base followed by " | "-separated steps:
//   <atlas name> or graph6:<code>   the starting graph
//   handle u-v x-y                   add_handle on edges uv and xy
//   s3 a,b,c [del u-v ...]           special 3-sum with a fresh K4 on its
//                                    triangle 0,1,2, optional deletions
namespace detail {

inline std::string edge_token(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

inline Edge parse_edge_token(std::string_view t) {
  std::size_t dash = t.find('-');
  int u = 0;
  int v = 0;
  if (dash == std::string_view::npos || !parse_int(t.substr(0, dash), u) || !parse_int(t.substr(dash + 1), v)) {
    throw ParseError("bad edge token '" + std::string(t) + "'");
  }
  return make_edge(u, v);
}

inline std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

inline std::string handle_step(Edge e1, Edge e2) {
  return " | handle " + edge_token(e1) + " " + edge_token(e2);
}

inline std::string s3_step(Triangle t, const std::vector<Edge>& del) {
  std::string s = " | s3 " + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
  if (!del.empty()) {
    s += " del";
    for (Edge e : del) s += " " + edge_token(e);
  }
  return s;
}

} // namespace detail

/// Rebuilds the graph described by a provenance string.
inline SimpleGraph replay_provenance(std::string_view provenance) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = provenance.find(" | ", start);
    parts.push_back(detail::trim(provenance.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 3;
  }
  SimpleGraph g = parts[0].starts_with("graph6:") ? from_graph6(parts[0].substr(7)) : build(parts[0]);
  const SimpleGraph k4 = build(NamedGraphId{Family::Complete, 4});
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::vector<std::string> w = detail::words(parts[i]);
    if (w.size() == 3 && w[0] == "handle") {
      g = add_handle(g, detail::parse_edge_token(w[1]), detail::parse_edge_token(w[2]));
    } else if (w.size() >= 2 && w[0] == "s3") {
      int a = 0;
      int b = 0;
      int c = 0;
      std::string_view tri = w[1];
      std::size_t c1 = tri.find(',');
      std::size_t c2 = tri.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
      if (c1 == std::string_view::npos || c2 == std::string_view::npos || !detail::parse_int(tri.substr(0, c1), a) ||
          !detail::parse_int(tri.substr(c1 + 1, c2 - c1 - 1), b) || !detail::parse_int(tri.substr(c2 + 1), c)) {
        throw ParseError("bad triangle in provenance step '" + std::string(parts[i]) + "'");
      }
      std::vector<Edge> del;
      if (w.size() > 2) {
        if (w[2] != "del") throw ParseError("bad provenance step '" + std::string(parts[i]) + "'");
        for (std::size_t j = 3; j < w.size(); ++j) del.push_back(detail::parse_edge_token(w[j]));
      }
      g = special_3sum(g, {a, b, c}, k4, {0, 1, 2}, del);
    } else {
      throw ParseError("unknown provenance step '" + std::string(parts[i]) + "'");
    }
  }
  return g;
}

/// Graph6 stream of representatives, plus a sidecar with one
/// "<canonical graph6>\t<provenance>" line per entry.
inline void write_catalog(const Catalog& c, std::ostream& graphs, std::ostream& sidecar) {
  for (const auto& e : c) {
    graphs << to_graph6(e.graph) << '\n';
    sidecar << e.key.to_graph6() << '\t' << e.provenance << '\n';
  }
}

inline Catalog read_catalog(std::istream& graphs, std::istream& sidecar) {
  std::vector<SimpleGraph> gs = read_graph6_stream(graphs);
  Catalog c;
  std::string line;
  std::size_t i = 0;
  while (std::getline(sidecar, line)) {
    if (detail::trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || i >= gs.size()) throw ParseError("malformed catalog sidecar");
    CanonicalKey k = canonical_key(gs[i]);
    if (k.to_graph6() != line.substr(0, tab)) throw ParseError("catalog sidecar key does not match graph");
    c.insert(gs[i], std::move(k), line.substr(tab + 1));
    ++i;
  }
  if (i != gs.size()) throw ParseError("catalog sidecar has fewer lines than graphs");
  return c;
}

// ---------------------------------------------------------------------------
// Generators

/// Breadth-first handle closure of {K3,3, Cube}, keeping cyclically
/// 4-connected cubic graphs only. Level k holds graphs first reached after
/// k handle additions; graphs above `max_vertices` are not expanded and the
/// catalog is marked truncated.
inline Catalog gen_cubic_cyc4(int max_steps, int max_vertices = kMaxOrder) {
  if (max_steps < 0) throw DomainError("max_steps must be non-negative");
  Catalog cat;
  std::vector<std::size_t> frontier;
  for (std::string_view base : {"K3,3", "Cube"}) {
    if (cat.insert(build(base), std::string(base))) frontier.push_back(cat.size() - 1);
  }
  for (int step = 0; step < max_steps; ++step) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const SimpleGraph g = cat.entries()[idx].graph;
      const std::string prov = cat.entries()[idx].provenance;
      if (g.order() + 2 > max_vertices) {
        cat.truncated = true;
        cat.truncation_note = "handle closure stopped at " + std::to_string(max_vertices) + " vertices";
        continue;
      }
      const std::vector<Edge> es = g.edges();
      for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
          const Edge a = es[i];
          const Edge b = es[j];
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
          SimpleGraph h = add_handle(g, a, b);
          CanonicalKey k = canonical_key(h);
          if (cat.contains(k) || !is_cyclically_4_connected_cubic(h).value) continue;
          cat.insert(std::move(h), std::move(k), prov + detail::handle_step(a, b));
          next.push_back(cat.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  return cat;
}

/// Closure of {K4} under special 3-sums with a fresh K4 (one new vertex per
/// step). With `allow_deletions`, every subset of the three common edges may
/// be deleted after identification.
inline Catalog gen_special_3sum_K4(int max_vertices, bool allow_deletions = false) {
  if (max_vertices < 4) throw DomainError("max_vertices must be at least 4");
  if (max_vertices > kMaxOrder) throw UnsupportedSizeError("max_vertices exceeds the vertex limit");
  const SimpleGraph k4 = build(NamedGraphId{Family::Complete, 4});
  const Triangle fresh{0, 1, 2};
  Catalog cat;
  cat.insert(k4, "K4");
  std::vector<std::size_t> frontier{0};
  for (int n = 4; n < max_vertices; ++n) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const SimpleGraph g = cat.entries()[idx].graph;
      const std::string prov = cat.entries()[idx].provenance;
      for (Triangle t : triangles(g)) {
        if (is_separating_triangle(g, t)) continue;
        const std::vector<Edge> tri_edges = {make_edge(t.a, t.b), make_edge(t.b, t.c), make_edge(t.a, t.c)};
        const int subsets = allow_deletions ? 8 : 1;
        for (int mask = 0; mask < subsets; ++mask) {
          std::vector<Edge> del;
          for (int i = 0; i < 3; ++i) {
            if ((mask >> i) & 1) del.push_back(tri_edges[static_cast<std::size_t>(i)]);
          }
          SimpleGraph h = special_3sum(g, t, k4, fresh, del);
          CanonicalKey k = canonical_key(h);
          if (cat.contains(k)) continue;
          cat.insert(std::move(h), std::move(k), prov + detail::s3_step(t, del));
          next.push_back(cat.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  return cat;
}

namespace detail {

// All graphs on n vertices up to isomorphism, by adding a vertex with every
// possible neighbourhood to each graph on n-1 vertices. Cached per n.
inline const std::vector<SimpleGraph>& all_graphs_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<SimpleGraph>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  int have = 0;
  for (auto it = cache.rbegin(); it != cache.rend(); ++it) {
    if (it->first <= n) {
      level = it->second;
      have = it->first;
      break;
    }
  }
  for (int k = have + 1; k <= n; ++k) {
    std::vector<SimpleGraph> next;
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for (const SimpleGraph& g : level) {
      for (VertexSet nb = 0; nb < (VertexSet{1} << (k - 1)); ++nb) {
        GraphBuilder b(g);
        const int v = b.add_vertex();
        for_each_vertex(nb, [&](int w) { b.add_edge(v, w); });
        CanonicalLabeling cl = canonical_labeling(b.build());
        if (seen.insert(cl.key).second) next.push_back(cl.key.graph());
      }
    }
    level = std::move(next);
    cache.emplace(k, level);
  }
  return cache.at(n);
}

} // namespace detail

/// Every graph on n <= 8 vertices up to isomorphism satisfying `predicate`,
/// as canonical representatives.
inline Catalog gen_all_graphs(int n, const std::function<bool(const SimpleGraph&)>& predicate = {}) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
  if (n > 8) throw UnsupportedSizeError("census is limited to 8 vertices");
  Catalog cat;
  for (const SimpleGraph& g : detail::all_graphs_cached(n)) {
    if (!predicate || predicate(g)) cat.insert(g, "graph6:" + to_graph6(g));
  }
  return cat;
}

} // namespace octminor

#endif // OCTMINOR_ATLAS_HPP
