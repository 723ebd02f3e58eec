#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "octminor/atlas.hpp"
#include "octminor/characterize.hpp"
#include "octminor/claims.hpp"
#include "octminor/connectivity.hpp"
#include "octminor/io.hpp"
#include "octminor/minors.hpp"

using namespace octminor;

namespace {

struct Globals {
  bool witness = false;
  bool slow = false;
  std::uint64_t budget = default_node_budget();
  std::string format = "graph6";
  std::string out;
};

// "name:X", a readable file, a bare atlas name, or inline graph6.
SimpleGraph load_graph(const std::string& arg) {
  if (arg.rfind("name:", 0) == 0) return build(arg.substr(5));
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
  }
  try {
    return build(arg);
  } catch (const DomainError&) {
  }
  return from_graph6(arg);
}

std::string render(const SimpleGraph& g, const std::string& format) {
  if (format == "graph6") return to_graph6(g) + "\n";
  if (format == "edges") return to_edge_list(g);
  if (format == "dot") return to_dot(g);
  throw DomainError("unknown format '" + format + "'");
}

// Writes to --out when given, stdout otherwise.
void emit(const Globals& gl, const std::string& text) {
  if (gl.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(gl.out);
  if (!f) throw Error("cannot write " + gl.out);
  f << text;
}

SearchOptions search(const Globals& gl) { return SearchOptions{gl.budget}; }

int cmd_atlas(const Globals& gl, const std::string& name) {
  if (name.empty()) {
    std::ostringstream os;
    for (const auto& n : atlas_names()) {
      try {
        SimpleGraph g = build(n);
        os << n << "\t" << g.order() << " vertices\t" << g.size() << " edges\t" << to_graph6(g) << '\n';
      } catch (const DomainError& e) {
        os << n << "\tunavailable: " << e.what() << '\n';
      }
    }
    emit(gl, os.str());
    return 0;
  }
  emit(gl, render(build(name), gl.format));
  return 0;
}

int cmd_minor(const Globals& gl, const std::string& garg, const std::string& harg, bool topological) {
  const SimpleGraph g = load_graph(garg);
  const SimpleGraph h = load_graph(harg);
  if (topological) {
    auto m = find_topological_minor(g, h, search(gl));
    if (!m) {
      std::cout << "NO TOPOLOGICAL MINOR\n";
      return 1;
    }
    if (!verify_subdivision(g, h, *m)) throw InternalError("subdivision failed verification");
    std::cout << "TOPOLOGICAL MINOR FOUND\n";
    if (gl.witness) std::cout << format_subdivision(*m);
    return 0;
  }
  auto m = find_minor(g, h, search(gl));
  if (!m) {
    std::cout << "NO MINOR\n";
    return 1;
  }
  if (!verify_model(g, h, *m)) throw InternalError("minor model failed verification");
  std::cout << "MINOR FOUND\n";
  if (gl.witness) std::cout << format_minor_model(*m);
  return 0;
}

int cmd_planar(const Globals& gl, const std::string& garg) {
  const SimpleGraph g = load_graph(garg);
  PlanarityResult r = planarity(g, search(gl));
  if (r.planar) {
    std::cout << "planar\n";
    return 0;
  }
  std::cout << "non-planar (" << r.obstruction << " minor)\n";
  if (gl.witness && r.witness) std::cout << format_minor_model(*r.witness);
  return 1;
}

std::string format_cut(const CutWitness& w) {
  std::ostringstream os;
  if (w.kind == CutKind::Vertex) {
    os << "cut {";
    for (std::size_t i = 0; i < w.vertices.size(); ++i) os << (i ? "," : "") << w.vertices[i];
    os << "}";
  } else {
    os << "edge cut {";
    for (std::size_t i = 0; i < w.edges.size(); ++i) os << (i ? " " : "") << w.edges[i].u << '-' << w.edges[i].v;
    os << "}";
  }
  auto side = [&](VertexSet s) {
    std::string t = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
      t += (first ? "" : ",") + std::to_string(v);
      first = false;
    });
    return t + "}";
  };
  os << " separating " << side(w.side_a) << " from " << side(w.side_b) << '\n';
  return os.str();
}

int cmd_conn(const Globals& gl, const std::string& garg, int k, bool cyclic) {
  const SimpleGraph g = load_graph(garg);
  if (cyclic) {
    CyclicConnectivityResult r = is_cyclically_4_connected_cubic(g);
    std::cout << (r.value ? "cyclically 4-connected\n" : "not cyclically 4-connected\n");
    if (gl.witness && r.witness) std::cout << format_cut(*r.witness);
    return r.value ? 0 : 1;
  }
  ConnectivityResult r = vertex_connectivity(g);
  std::cout << "connectivity " << r.value << '\n';
  if (gl.witness && r.witness) std::cout << format_cut(*r.witness);
  if (k < 0) return 0;
  return r.value >= k && g.order() > k ? 0 : 1;
}

int cmd_classify(const Globals& gl, const std::string& garg, const std::string& cls, bool no_deletions) {
  const SimpleGraph g = load_graph(garg);
  ClassificationResult r;
  if (cls == "oct1-4conn") r = decide_4conn_oct1_free(g, search(gl));
  else if (cls == "oct1-planar") r = decide_planar_oct1_free(g, PlanarDeciderOptions{!no_deletions, 9});
  else r = decide_4conn_oct2_free(g, search(gl));
  std::cout << format_result(r);
  return r.member() ? 0 : 1;
}

int cmd_gen(const Globals& gl, const std::string& family, int bound, const std::string& filter, bool deletions) {
  Catalog cat;
  if (family == "cubic-cyc4") {
    cat = gen_cubic_cyc4(bound);
  } else if (family == "special-3sum") {
    cat = gen_special_3sum_K4(bound, deletions);
  } else if (family == "census") {
    if (bound == 8 && !gl.slow) throw UnsupportedSizeError("the 8-vertex census needs --slow");
    std::function<bool(const SimpleGraph&)> pred;
    if (filter == "2conn") pred = [](const SimpleGraph& g) { return is_k_connected(g, 2); };
    else if (filter == "3conn") pred = [](const SimpleGraph& g) { return is_k_connected(g, 3); };
    else if (filter == "4conn") pred = [](const SimpleGraph& g) { return is_k_connected(g, 4); };
    else if (filter == "planar") pred = [](const SimpleGraph& g) { return is_planar(g); };
    else if (filter == "connected") pred = [](const SimpleGraph& g) { return is_connected(g); };
    else if (!filter.empty()) throw DomainError("unknown filter '" + filter + "'");
    cat = gen_all_graphs(bound, pred);
  } else {
    throw DomainError("unknown family '" + family + "' (cubic-cyc4, special-3sum, census)");
  }
  if (!gl.out.empty()) {
    std::ofstream graphs(gl.out);
    std::ofstream side(gl.out + ".prov");
    if (!graphs || !side) throw Error("cannot write " + gl.out);
    write_catalog(cat, graphs, side);
  } else {
    for (const auto& e : cat) std::cout << render(e.graph, gl.format);
  }
  std::cerr << cat.size() << " graphs\n";
  if (cat.truncated) std::cerr << "truncated: " << cat.truncation_note << '\n';
  return 0;
}

int cmd_verify(const Globals& gl, const std::vector<std::string>& ids, bool timing, const std::string& json_path) {
  ClaimOptions opts;
  opts.slow = gl.slow;
  opts.witness = gl.witness;
  opts.search = search(gl);
  std::vector<ClaimReport> reports = run_claims(ids, opts);
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : reports) {
    os << format_claim(r, timing);
    if (r.status == ClaimStatus::Fail) ++failed;
  }
  os << reports.size() << " claims, " << failed << " failed\n";
  emit(gl, os.str());
  if (!json_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
      nlohmann::json c = {{"id", r.id}, {"status", to_string(r.status)}, {"summary", r.summary}, {"evidence", r.evidence}};
      if (timing) c["seconds"] = r.seconds;
      j.push_back(std::move(c));
    }
    std::ofstream f(json_path);
    if (!f) throw Error("cannot write " + json_path);
    f << j.dump(2) << '\n';
  }
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minor containment, planarity, connectivity and Oct-family characterisations for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--witness", gl.witness, "Print certificates");
  app.add_flag("--slow", gl.slow, "Enable the 8-vertex census and slow claims");
  app.add_option("--budget", gl.budget, "Search node budget (default from OCTMINOR_BUDGET or 50000000)");
  app.add_option("--format", gl.format, "Graph output format")->check(CLI::IsMember({"graph6", "edges", "dot"}));
  app.add_option("--out", gl.out, "Write output to this path");

  std::string name;
  auto* atlas = app.add_subcommand("atlas", "List named graphs or print one");
  atlas->add_option("name", name, "Atlas name, e.g. Oct1+ or C7^2");

  std::string g_arg;
  std::string h_arg;
  bool topological = false;
  auto* minor = app.add_subcommand("minor", "Test whether H is a minor of G");
  minor->add_option("G", g_arg)->required();
  minor->add_option("H", h_arg)->required();
  minor->add_flag("--topological", topological, "Look for a subdivision instead");

  auto* planar = app.add_subcommand("planar", "Planarity with a Kuratowski witness");
  planar->add_option("G", g_arg)->required();

  int k = -1;
  bool cyclic = false;
  auto* conn = app.add_subcommand("conn", "Vertex connectivity with a minimum cut");
  conn->add_option("G", g_arg)->required();
  conn->add_option("-k", k, "Exit 0 iff the graph is k-connected");
  conn->add_flag("--cyclic", cyclic, "Cyclic 4-connectivity of a cubic graph");

  std::string cls;
  bool no_deletions = false;
  auto* classify = app.add_subcommand("classify", "Structural membership deciders");
  classify->add_option("G", g_arg)->required();
  classify->add_option("--class", cls, "oct1-4conn: 4-connected Oct1+-free, oct1-planar: planar Oct1+-free, oct2-4conn: 4-connected Oct2+-free")
      ->required()
      ->check(CLI::IsMember({"oct1-4conn", "oct1-planar", "oct2-4conn"}));
  classify->add_flag("--no-deletions", no_deletions, "Use the special 3-sum closure without edge deletions");

  std::string family;
  int bound = 0;
  std::string filter;
  bool deletions = false;
  auto* gen = app.add_subcommand("gen", "Generate a catalog");
  gen->add_option("family", family, "cubic-cyc4 (bound = handle steps), special-3sum (bound = max vertices), census (bound = n)")
      ->required();
  gen->add_option("bound", bound)->required();
  gen->add_option("--filter", filter, "census filter: connected, 2conn, 3conn, 4conn, planar");
  gen->add_flag("--with-deletions", deletions, "special-3sum: allow deleting common edges");

  std::vector<std::string> ids;
  bool timing = false;
  std::string json_path;
  auto* verify = app.add_subcommand("verify-claims", "Run the claim suite");
  verify->add_option("ids", ids, "Claim ids to run (default: all)");
  verify->add_flag("--timing", timing, "Report runtimes (breaks byte-identical output)");
  verify->add_option("--json", json_path, "Also write a JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*atlas) return cmd_atlas(gl, name);
    if (*minor) return cmd_minor(gl, g_arg, h_arg, topological);
    if (*planar) return cmd_planar(gl, g_arg);
    if (*conn) return cmd_conn(gl, g_arg, k, cyclic);
    if (*classify) return cmd_classify(gl, g_arg, cls, no_deletions);
    if (*gen) return cmd_gen(gl, family, bound, filter, deletions);
    if (*verify) return cmd_verify(gl, ids, timing, json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
