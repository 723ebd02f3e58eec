#ifndef OCTMINOR_CLAIMS_HPP
#define OCTMINOR_CLAIMS_HPP

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "atlas.hpp"
#include "characterize.hpp"
#include "connectivity.hpp"
#include "minors.hpp"
#include "transforms.hpp"

namespace octminor {

enum class ClaimStatus { Pass, Fail, Skipped };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::Pass: return "pass";
  case ClaimStatus::Fail: return "fail";
  case ClaimStatus::Skipped: return "skipped";
  }
  return "unknown";
}

struct ClaimReport {
  std::string id;
  std::string description;
  ClaimStatus status = ClaimStatus::Fail;
  std::string summary;
  std::vector<std::string> evidence;
  double seconds = 0.0;
};

struct ClaimOptions {
  bool slow = false;
  bool witness = false;
  SearchOptions search;
};

struct ClaimDef {
  std::string id;
  std::string description;
  bool slow_only = false;
  std::function<void(ClaimReport&, const ClaimOptions&)> run;
};

namespace detail {

// Collects individual checks; the claim passes when none failed.
class Checks {
public:
  explicit Checks(ClaimReport& r) : r_(r) {}

  bool expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      r_.evidence.push_back("VIOLATION " + what);
    }
    return ok;
  }

  // Counts the check but records evidence only when `detail` is true.
  bool expect_quiet(bool ok, bool detail, const std::string& what) {
    if (detail) return expect(ok, what);
    ++total_;
    if (!ok) ++failed_;
    return ok;
  }

  void note(const std::string& line) { r_.evidence.push_back(line); }

  void finish(const std::string& summary) {
    r_.status = failed_ == 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
    r_.summary = summary + " (" + std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks)";
  }

private:
  ClaimReport& r_;
  int total_ = 0;
  int failed_ = 0;
};

inline std::string witness_line(const std::string& label, const MinorModel& m) {
  std::string s = label + ":";
  for (std::size_t x = 0; x < m.branch_sets.size(); ++x) {
    s += " " + std::to_string(x) + "={";
    bool first = true;
    for_each_vertex(m.branch_sets[x], [&](int v) {
      s += (first ? "" : ",") + std::to_string(v);
      first = false;
    });
    s += "}";
  }
  return s;
}

// Looks for h in g and checks the answer against `expected`; found models
// are re-verified.
inline void minor_check(Checks& c, const ClaimOptions& o, const std::string& gname, const std::string& hname,
                        bool expected) {
  const SimpleGraph g = build(gname);
  const SimpleGraph h = build(hname);
  std::optional<MinorModel> m = find_minor(g, h, o.search);
  const std::string label = hname + " in " + gname;
  c.expect(m.has_value() == expected, label + (m ? " found" : " not found"));
  if (m) {
    c.expect(verify_model(g, h, *m), label + " witness verifies");
    if (o.witness) c.note(witness_line(label, *m));
  } else {
    c.note(label + ": none");
  }
}

inline SimpleGraph random_relabel(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// A uniformly chosen k-clique of g as a vertex list, if any.
inline std::optional<std::vector<int>> random_clique(const SimpleGraph& g, int k, std::mt19937_64& rng) {
  std::vector<std::vector<int>> all;
  if (k == 0) return std::vector<int>{};
  if (k == 1) {
    for (int v = 0; v < g.order(); ++v) all.push_back({v});
  } else if (k == 2) {
    for (Edge e : g.edges()) all.push_back({e.u, e.v});
  } else {
    for (Triangle t : triangles(g)) all.push_back({t.a, t.b, t.c});
  }
  if (all.empty()) return std::nullopt;
  std::vector<int> pick = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  std::shuffle(pick.begin(), pick.end(), rng);
  return pick;
}

// k-sum of g1 and g2 over random cliques, with each common edge deleted
// independently with probability 1/2 (or all of them when `delete_all`).
inline std::optional<SimpleGraph> random_sum(const SimpleGraph& g1, const SimpleGraph& g2, int k, std::mt19937_64& rng,
                                             bool delete_all = false, std::vector<int>* clique1 = nullptr) {
  auto c1 = random_clique(g1, k, rng);
  auto c2 = random_clique(g2, k, rng);
  if (!c1 || !c2) return std::nullopt;
  SumSpec s;
  s.k = k;
  for (int i = 0; i < k; ++i) s.identify.emplace_back((*c1)[static_cast<std::size_t>(i)], (*c2)[static_cast<std::size_t>(i)]);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (delete_all || (rng() & 1U)) {
        s.deletions.push_back(make_edge((*c1)[static_cast<std::size_t>(i)], (*c1)[static_cast<std::size_t>(j)]));
      }
    }
  }
  if (clique1) *clique1 = *c1;
  return apply_sum(g1, g2, s);
}

inline std::vector<SimpleGraph> build_all(std::initializer_list<const char*> names) {
  std::vector<SimpleGraph> out;
  for (const char* n : names) out.push_back(build(n));
  return out;
}

// ---------------------------------------------------------------------------

inline void claim_squares_oct1(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  minor_check(c, o, "C6^2", "Oct1+", false);
  minor_check(c, o, "C8^2", "Oct1+", true);
  for (const char* odd : {"C5^2", "C7^2", "C9^2"}) minor_check(c, o, odd, "Oct", false);
  c.finish("C6^2 Oct1+-free, C8^2 contains Oct1+, odd squares Oct-free");
}

inline void claim_line_graph_witnesses(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  minor_check(c, o, "L(K3,3)", "Oct1+", true);
  minor_check(c, o, "L(Cube)", "Oct1+", true);
  c.finish("L(K3,3) and L(Cube) contain Oct1+");
}

inline void claim_c6sq_splits(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  const SimpleGraph g = build("C6^2");
  const SimpleGraph h = build("Oct1+");
  std::vector<SplitResult> splits = enumerate_splits(g, 4);
  int minimal = 0;
  for (const auto& s : splits) {
    if (popcount(s.spec.a) == 3 && popcount(s.spec.b) == 3) ++minimal;
    std::optional<MinorModel> m = find_minor(s.graph, h, o.search);
    c.expect(m && verify_model(s.graph, h, *m), "4-split " + to_graph6(s.graph) + " contains Oct1+");
    c.note(to_graph6(s.graph) + " |A|=" + std::to_string(popcount(s.spec.a)) + " |B|=" +
           std::to_string(popcount(s.spec.b)) + (m ? " Oct1+ found" : " Oct1+ missing"));
  }
  c.expect(minimal > 0, "some class has |A|=|B|=3");
  c.finish(std::to_string(splits.size()) + " classes of 4-splits of C6^2 (" + std::to_string(minimal) +
           " with |A|=|B|=3), all contain Oct1+");
}

inline void claim_k5_k4_sum(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  SumSpec s{3, {{0, 0}, {1, 1}, {2, 2}}, {{0, 1}, {1, 2}, {0, 2}}};
  const SimpleGraph g = apply_sum(build("K5"), build("K4"), s);
  PlanarityResult p = planarity(g);
  c.expect(!p.planar, "K5 (+) K4 with all common edges deleted is non-planar");
  c.note(to_graph6(g) + " obstruction " + p.obstruction);
  c.finish("triangle 3-sum of K5 and K4 without common edges is non-planar");
}

inline void claim_sum_planarity(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  std::mt19937_64 rng(20240101);
  const std::vector<SimpleGraph> planar = build_all({"K4", "W4", "W5", "Prism", "Cube", "Oct", "Oct1+", "C8^2", "L5"});
  const std::vector<SimpleGraph> nonplanar = build_all({"K5", "K3,3", "Oct2+", "V8", "K6", "Oct+", "P10", "K5^tri"});
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 4;
    auto pick = [&](const std::vector<SimpleGraph>& pool) {
      return random_relabel(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], rng);
    };
    if (k <= 2) {
      SimpleGraph a = pick(planar);
      SimpleGraph b = pick(planar);
      if (auto g = random_sum(a, b, k, rng)) {
        c.expect(is_planar(*g), std::to_string(k) + "-sum of planar graphs planar: " + to_graph6(*g));
        ++done;
      }
    }
    SimpleGraph a = pick(nonplanar);
    SimpleGraph b = (rng() & 1U) ? pick(planar) : pick(nonplanar);
    if (rng() & 1U) std::swap(a, b);
    if (!is_k_connected(a, k) || !is_k_connected(b, k)) continue;
    if (auto g = random_sum(a, b, k, rng)) {
      c.expect(!is_planar(*g), std::to_string(k) + "-sum with a non-planar summand non-planar: " + to_graph6(*g));
      ++done;
    }
  }
  c.finish(std::to_string(done) + " random 0/1/2/3-sums obey the planarity laws");
}

inline void claim_special_sum_planarity(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  std::mt19937_64 rng(77);
  std::vector<SimpleGraph> pool = build_all({"K4", "W4", "W5", "Prism", "Oct", "C6^2", "C8^2"});
  for (const auto& e : gen_special_3sum_K4(8)) pool.push_back(e.graph);
  int special = 0;
  int separating = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleGraph a = random_relabel(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], rng);
    const SimpleGraph b = random_relabel(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], rng);
    auto t1 = random_clique(a, 3, rng);
    auto t2 = random_clique(b, 3, rng);
    if (!t1 || !t2) continue;
    const Triangle ta = make_triangle((*t1)[0], (*t1)[1], (*t1)[2]);
    const Triangle tb{(*t2)[0], (*t2)[1], (*t2)[2]};
    SumSpec s;
    s.k = 3;
    s.identify = {{(*t1)[0], tb.a}, {(*t1)[1], tb.b}, {(*t1)[2], tb.c}};
    for (Edge e : {make_edge(ta.a, ta.b), make_edge(ta.b, ta.c), make_edge(ta.a, ta.c)}) {
      if (rng() & 1U) s.deletions.push_back(e);
    }
    const SimpleGraph g = apply_sum(a, b, s);
    const bool sep = is_separating_triangle(a, ta) || is_separating_triangle(b, make_triangle(tb.a, tb.b, tb.c));
    if (sep) {
      ++separating;
      c.expect(!is_planar(g), "3-sum over a separating triangle non-planar: " + to_graph6(g));
    } else {
      ++special;
      c.expect(is_planar(g), "special 3-sum planar: " + to_graph6(g));
    }
  }
  c.finish(std::to_string(special) + " special and " + std::to_string(separating) +
           " separating 3-sums of 3-connected planar graphs behave as stated");
}

inline void claim_oct_extensions(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  Extensions ext = enumerate_extensions(build("Oct"));
  for (const auto& g : ext.edge_additions) c.expect(!is_planar(g), "Oct plus an edge non-planar: " + to_graph6(g));
  c.expect(ext.splits.size() == 2, "3-splits of Oct form 2 classes (got " + std::to_string(ext.splits.size()) + ")");
  int planar = 0;
  for (const auto& g : ext.splits) {
    const bool p = is_planar(g);
    planar += p ? 1 : 0;
    if (p) c.expect(is_isomorphic(g, build("Oct1+")), "the planar 3-split is Oct1+");
    else c.expect(is_isomorphic(g, build("Oct2+")), "the non-planar 3-split is Oct2+");
    c.note(to_graph6(g) + (p ? " planar" : " non-planar"));
  }
  c.expect(planar == 1, "exactly one planar 3-split");
  c.finish(std::to_string(ext.edge_additions.size()) + " edge-addition class(es), all non-planar; 3-splits {Oct1+, Oct2+}");
}

inline void claim_oct_splits_two_classes(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  std::vector<SplitResult> s = enumerate_splits(build("Oct"), 3);
  std::set<CanonicalKey> keys;
  for (const auto& x : s) keys.insert(x.key);
  c.expect(keys.size() == 2, "two classes");
  c.expect(keys.contains(canonical_key(build("Oct1+"))) && keys.contains(canonical_key(build("Oct2+"))),
           "classes are Oct1+ and Oct2+");
  c.expect(build("Oct1+").size() == 13 && build("Oct2+").size() == 13, "both have 13 edges");
  c.finish("3-splitting a vertex of Oct gives exactly Oct1+ and Oct2+");
}

inline void claim_squares_oct2(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  for (int k = 3; k <= 6; ++k) {
    const std::string name = "C" + std::to_string(2 * k) + "^2";
    c.expect(is_planar(build(name)), name + " planar");
  }
  for (const char* odd : {"C5^2", "C7^2", "C9^2"}) minor_check(c, o, odd, "Oct", false);
  for (int n = 5; n <= 10; ++n) {
    const std::string name = "C" + std::to_string(n) + "^2";
    c.expect(is_k_connected(build(name), 4), name + " 4-connected");
  }
  c.finish("even squares planar, odd squares Oct-free, all 4-connected");
}

inline void claim_line_k33_cases(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  const SimpleGraph g = build("L(K3,3)");
  const SimpleGraph h = build("Oct2+");
  c.expect(g.order() == 9 && g.size() == 18, "L(K3,3) has 9 vertices and 18 edges");
  std::map<CanonicalKey, SimpleGraph> second;
  for (Edge e : g.edges()) {
    const SimpleGraph g1 = contract_edge(g, e);
    c.expect(g1.order() == 8 && g1.size() == 16, "first contraction is 8 vertices, 16 edges");
    for (Edge f : g1.edges()) {
      SimpleGraph g2 = contract_edge(g1, f);
      second.emplace(canonical_key(g2), std::move(g2));
    }
  }
  std::multiset<int> sizes;
  for (const auto& [k, g2] : second) {
    sizes.insert(g2.size());
    const bool free = !has_minor(g2, h, o.search);
    c.expect(free, "second contraction " + to_graph6(g2) + " Oct2+-free");
    c.note(to_graph6(g2) + " " + std::to_string(g2.order()) + " vertices " + std::to_string(g2.size()) + " edges");
  }
  c.expect(second.size() == 6, "six classes of second contractions (got " + std::to_string(second.size()) + ")");
  c.expect(sizes == std::multiset<int>{13, 13, 14, 14, 14, 15}, "edge multiset {13,13,14,14,14,15}");
  c.expect(!has_minor(g, h, o.search), "direct search: L(K3,3) Oct2+-free");
  c.finish("L(K3,3): 6 second-contraction classes, all Oct2+-free");
}

inline void claim_line_v8(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  minor_check(c, o, "L(V8)", "Oct2+", true);
  c.finish("L(V8) contains Oct2+");
}

inline void census_claim(ClaimReport& r, const ClaimOptions& o, bool plus_one) {
  Checks c(r);
  const SimpleGraph h = build(plus_one ? "Oct1+" : "Oct2+");
  const int top = o.slow ? 8 : 7;
  int total = 0;
  int mismatches = 0;
  for (int n = 5; n <= top; ++n) {
    Catalog cat = gen_all_graphs(n, [](const SimpleGraph& g) { return is_k_connected(g, 4); });
    int here = 0;
    for (const auto& e : cat) {
      ++total;
      const bool free = !has_minor(e.graph, h, o.search);
      const ClassificationResult d = plus_one ? decide_4conn_oct1_free(e.graph, o.search) : decide_4conn_oct2_free(e.graph, o.search);
      const bool agree = d.member() == free;
      if (!agree) {
        ++mismatches;
        ++here;
      }
      c.expect_quiet(agree, !agree && here <= 3,
                     to_graph6(e.graph) + " decider=" + to_string(d.verdict) + " via " + to_string(d.reason) +
                         ", oracle=" + (free ? "free" : "contains"));
    }
    c.note("n=" + std::to_string(n) + ": " + std::to_string(cat.size()) + " 4-connected graphs, " +
           std::to_string(here) + " mismatches");
  }
  c.finish(std::to_string(total) + " 4-connected graphs, " + std::to_string(mismatches) + " decider/oracle mismatches");
}

inline void claim_planar_base(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  const SimpleGraph h = build("Oct1+");
  const int top = o.slow ? 8 : 7;
  const Catalog& with_del = special_3sum_catalog(top, true);
  const Catalog& no_del = special_3sum_catalog(top, false);
  const CanonicalKey oct = canonical_key(build("Oct"));
  int members = 0;
  int outside_no_del = 0;
  for (int n = 4; n <= top; ++n) {
    Catalog cat = gen_all_graphs(n, [](const SimpleGraph& g) { return is_k_connected(g, 3) && is_planar(g); });
    for (const auto& e : cat) {
      if (has_minor(e.graph, h, o.search)) continue;
      ++members;
      const bool base = e.key == oct || with_del.contains(e.key);
      c.expect(base, "3-connected planar Oct1+-free " + to_graph6(e.graph) + " in {Oct} + deletion closure");
      if (e.key != oct && !no_del.contains(e.key)) ++outside_no_del;
    }
  }
  for (const auto& e : with_del) {
    if (is_k_connected(e.graph, 3)) c.expect(!has_minor(e.graph, h, o.search), to_graph6(e.graph) + " Oct1+-free");
  }
  c.note(std::to_string(outside_no_del) + " of them lie outside the no-deletion closure");
  c.finish(std::to_string(members) + " 3-connected planar Oct1+-free graphs on <= " + std::to_string(top) +
           " vertices, all Oct or in the deletion-allowed special 3-sum closure");
}

inline void claim_planar_decider(ClaimReport& r, const ClaimOptions& o) {
  Checks c(r);
  std::mt19937_64 rng(4242);
  const SimpleGraph h = build("Oct1+");
  std::vector<SimpleGraph> pool = build_all({"K1", "K2", "K3", "Oct", "Oct1+", "C8^2", "W5", "Cube", "Prism", "W4"});
  for (const auto& e : gen_special_3sum_K4(6)) pool.push_back(e.graph);
  int tested = 0;
  int mismatch_no_del = 0;
  for (int trial = 0; trial < 150; ++trial) {
    SimpleGraph g = random_relabel(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], rng);
    while (g.order() < 5) {
      const SimpleGraph b = random_relabel(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)], rng);
      const int k = static_cast<int>(rng() % 3);
      if (g.order() + b.order() - k > 8) break;
      if (auto s = random_sum(g, b, k, rng)) g = *s;
      else break;
    }
    if (g.order() > 8 || !is_planar(g)) continue;
    ++tested;
    const bool free = !has_minor(g, h, o.search);
    const bool with_del = decide_planar_oct1_free(g, {true, 9}).member();
    const bool without = decide_planar_oct1_free(g, {false, 9}).member();
    c.expect(with_del == free, to_graph6(g) + " decider (deletions) agrees with oracle");
    if (without != free) ++mismatch_no_del;
  }
  c.note("no-deletion closure disagrees with the oracle on " + std::to_string(mismatch_no_del) + " of these graphs");
  c.finish(std::to_string(tested) + " planar sums checked against the Oct1+ oracle");
}

inline void claim_atlas_identities(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  c.expect(is_isomorphic(build("C5^2"), build("K5")), "C5^2 = K5");
  c.expect(is_isomorphic(build("C6^2"), build("Oct")), "C6^2 = Oct");
  const SimpleGraph k6m = delete_edge(delete_edge(build("K6"), {0, 1}), {2, 3});
  c.expect(is_isomorphic(build("Oct+"), k6m), "Oct+ = K6 minus two independent edges");
  c.expect(is_isomorphic(build("Oct"), line_graph(build("K4"))), "Oct = L(K4)");
  c.expect(is_isomorphic(build("V8"), build("L4'")), "V8 = L4'");
  const SimpleGraph k4 = build("K4");
  c.expect(is_isomorphic(special_3sum(k4, {0, 1, 2}, k4, {0, 1, 2}), delete_edge(build("K5"), {3, 4})),
           "special 3-sum of two K4 = K5 minus an edge");
  c.finish("atlas identities hold");
}

inline void claim_count_13_edges(ClaimReport& r, const ClaimOptions&) {
  Checks c(r);
  int total = 0;
  for (int n = 1; n <= 8; ++n) {
    const int count = static_cast<int>(
        gen_all_graphs(n, [](const SimpleGraph& g) { return g.size() == 13 && is_k_connected(g, 3); }).size());
    total += count;
    if (count > 0) c.note("n=" + std::to_string(n) + ": " + std::to_string(count));
  }
  c.note("n>=9: none (3-connectivity needs at least 3n/2 > 13 edges)");
  c.expect(total == 51, "51 3-connected graphs with 13 edges (got " + std::to_string(total) + ")");
  c.finish(std::to_string(total) + " 3-connected graphs with exactly 13 edges");
}

} // namespace detail

/// The claim suite in report order.
inline std::vector<ClaimDef> claim_registry() {
  using namespace detail;
  return {
      {"ATLAS-IDENTITIES", "named-graph identities", false, claim_atlas_identities},
      {"OCT-SPLITS-TWO-CLASSES", "3-splits of Oct give Oct1+ and Oct2+", false, claim_oct_splits_two_classes},
      {"SQUARES-OCT1-BOUNDARY", "squared cycles against Oct1+", false, claim_squares_oct1},
      {"LINE-GRAPHS-CONTAIN-OCT1", "line graphs of K3,3 and Cube contain Oct1+", false, claim_line_graph_witnesses},
      {"C6SQ-4SPLITS-CONTAIN-OCT1", "every 4-split of C6^2 contains Oct1+", false, claim_c6sq_splits},
      {"K5-K4-TRIANGLE-SUM-NONPLANAR", "K5 and K4 summed on a triangle, common edges deleted", false, claim_k5_k4_sum},
      {"SUM-PLANARITY-SAMPLED", "k-sum planarity laws on random sums", false, claim_sum_planarity},
      {"SPECIAL-3SUM-PLANARITY-SAMPLED", "special vs separating 3-sums", false, claim_special_sum_planarity},
      {"OCT-EXTENSIONS", "edge additions and 3-splits of Oct", false, claim_oct_extensions},
      {"PLANAR-OCT1-BASE", "3-connected planar Oct1+-free graphs vs the base set", false, claim_planar_base},
      {"PLANAR-OCT1-SUMS", "planar decider vs minor oracle on sums", false, claim_planar_decider},
      {"SQUARES-OCT2-FREE", "squared cycles are 4-connected and Oct2+-free", false, claim_squares_oct2},
      {"LINE-K33-SIX-CLASSES", "second contractions of L(K3,3)", false, claim_line_k33_cases},
      {"LINE-V8-CONTAINS-OCT2", "L(V8) contains Oct2+", false, claim_line_v8},
      {"CENSUS-4CONN-OCT1", "4-connected census: Oct1+ decider vs oracle", false,
       [](ClaimReport& r, const ClaimOptions& o) { census_claim(r, o, true); }},
      {"CENSUS-4CONN-OCT2", "4-connected census: Oct2+ decider vs oracle", false,
       [](ClaimReport& r, const ClaimOptions& o) { census_claim(r, o, false); }},
      {"COUNT-13-EDGES", "3-connected graphs with 13 edges", true, claim_count_13_edges},
  };
}

/// Runs the selected claims (all when `selection` is empty) in registry
/// order. Slow-only claims are skipped unless `opts.slow`.
inline std::vector<ClaimReport> run_claims(const std::vector<std::string>& selection, const ClaimOptions& opts) {
  std::vector<ClaimReport> out;
  for (const ClaimDef& def : claim_registry()) {
    if (!selection.empty() && std::find(selection.begin(), selection.end(), def.id) == selection.end()) continue;
    ClaimReport r;
    r.id = def.id;
    r.description = def.description;
    if (def.slow_only && !opts.slow) {
      r.status = ClaimStatus::Skipped;
      r.summary = "needs --slow";
      out.push_back(std::move(r));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      def.run(r, opts);
    } catch (const std::exception& e) {
      r.status = ClaimStatus::Fail;
      r.summary = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_claim(const ClaimReport& r, bool timing) {
  std::ostringstream os;
  os << "[" << to_string(r.status) << "] " << r.id << " - " << r.description << '\n';
  os << "  " << r.summary << '\n';
  for (const auto& e : r.evidence) os << "  | " << e << '\n';
  if (timing) os << "  time: " << r.seconds << " s\n";
  return os.str();
}

} // namespace octminor

#endif // OCTMINOR_CLAIMS_HPP
