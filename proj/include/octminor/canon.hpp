#ifndef OCTMINOR_CANON_HPP
#define OCTMINOR_CANON_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "io.hpp"

namespace octminor {

/// Isomorphism-class fingerprint: the canonically relabelled upper triangle
/// (pairs (0,1),(0,2),...,(0,n-1),(1,2),...) packed most-significant-bit
/// first, so word-wise comparison is lexicographic bitstring comparison.
class CanonicalKey {
public:
  CanonicalKey() = default;

  int order() const noexcept { return n_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// The canonically labelled representative.
  SimpleGraph graph() const {
    GraphBuilder b(n_);
    std::size_t p = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++p) {
        if ((words_[p / 64] >> (63 - p % 64)) & 1U) b.add_edge(i, j);
      }
    }
    return b.build();
  }

  std::string to_graph6() const { return octminor::to_graph6(graph()); }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<int>{}(n_);
    for (std::uint64_t w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  /// Packs the graph under `order` (order[k] = vertex placed at position k).
  static CanonicalKey pack(const SimpleGraph& g, const std::vector<int>& order) {
    CanonicalKey key;
    const int n = g.order();
    key.n_ = n;
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    key.words_.assign((bits + 63) / 64, 0);
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
      const VertexSet row = g.neighbors(order[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < n; ++j, ++p) {
        if (contains(row, order[static_cast<std::size_t>(j)])) {
          key.words_[p / 64] |= std::uint64_t{1} << (63 - p % 64);
        }
      }
    }
    return key;
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept { return k.hash(); }
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into other cells until equitable. Every
// decision depends only on cell order and adjacency, never on labels, so
// the result is equivariant under relabelling.
inline void refine(const SimpleGraph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = to_set(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cells[c].size());
        for (int v : cells[c]) keyed.emplace_back(popcount(g.neighbors(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        if (keyed.front().first == keyed.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        for (auto& piece : pieces) std::sort(piece.begin(), piece.end());
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class Canonizer {
public:
  explicit Canonizer(const SimpleGraph& g) : g_(g) {}

  void run() {
    Cells root;
    if (g_.order() > 0) {
      root.emplace_back(static_cast<std::size_t>(g_.order()));
      std::iota(root[0].begin(), root[0].end(), 0);
    }
    search(std::move(root));
    if (!best_) best_ = CanonicalKey::pack(g_, best_order_);
  }

  const CanonicalKey& key() const { return *best_; }
  const std::vector<int>& order() const { return best_order_; }

private:
  void search(Cells cells) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> explored;
    const std::vector<int> candidates = cells[target];
    for (int w : candidates) {
      if (equivalent_to_explored(w, explored)) continue;
      explored.push_back(w);
      Cells next = cells;
      std::vector<int> rest;
      for (int x : candidates) {
        if (x != w) rest.push_back(x);
      }
      next[target] = {w};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      prefix_.push_back(w);
      search(std::move(next));
      prefix_.pop_back();
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(cells.size());
    for (const auto& c : cells) order.push_back(c.front());
    CanonicalKey key = CanonicalKey::pack(g_, order);
    if (!best_ || key < *best_) {
      best_ = std::move(key);
      best_order_ = std::move(order);
    } else if (key == *best_) {
      std::vector<int> gamma(static_cast<std::size_t>(g_.order()));
      for (std::size_t k = 0; k < order.size(); ++k) {
        gamma[static_cast<std::size_t>(best_order_[k])] = order[k];
      }
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // True when w is the image of an explored sibling under the group
  // generated by known automorphisms that fix the current prefix pointwise.
  bool equivalent_to_explored(int w, const std::vector<int>& explored) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(g_.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int p) {
        return gamma[static_cast<std::size_t>(p)] == p;
      });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < g_.order(); ++x) {
        int a = find(x);
        int b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int rw = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == rw; });
  }

  const SimpleGraph& g_;
  std::optional<CanonicalKey> best_;
  std::vector<int> best_order_;
  std::vector<int> prefix_;
  std::vector<std::vector<int>> automorphisms_;
};

} // namespace detail

/// Canonical labelling: `order[k]` is the vertex of g placed at position k.
struct CanonicalLabeling {
  CanonicalKey key;
  std::vector<int> order;
};

/// Minimal packed bitstring over all labellings that respect the
/// equitable-refinement cell order, with ties among cell members broken by
/// ascending label and automorphism pruning.
inline CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
  detail::Canonizer c(g);
  c.run();
  return {c.key(), c.order()};
}

inline CanonicalKey canonical_key(const SimpleGraph& g) { return canonical_labeling(g).key; }

inline SimpleGraph canonical_form(const SimpleGraph& g) { return canonical_key(g).graph(); }

inline bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_key(g) == canonical_key(h);
}

/// An isomorphism g -> h as `map[v_in_g] = v_in_h`, if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g,
                                                        const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  CanonicalLabeling a = canonical_labeling(g);
  CanonicalLabeling b = canonical_labeling(h);
  if (a.key != b.key) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(g.order()));
  for (std::size_t k = 0; k < a.order.size(); ++k) {
    map[static_cast<std::size_t>(a.order[k])] = b.order[k];
  }
  return map;
}

} // namespace octminor

#endif // OCTMINOR_CANON_HPP
