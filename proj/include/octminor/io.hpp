#ifndef OCTMINOR_IO_HPP
#define OCTMINOR_IO_HPP

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace octminor {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

} // namespace detail

// graph6: N(n) followed by the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte + 63.
inline std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline SimpleGraph from_graph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  }
  auto val = [&](std::size_t i) { return static_cast<int>(static_cast<unsigned char>(s[i])) - 63; };
  std::size_t pos = 0;
  long long n = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else if (s.size() >= 2 && val(1) == 63) {
    throw UnsupportedSizeError("graph6 order above 258047 is not supported");
  } else {
    if (s.size() < 4) throw ParseError("truncated graph6 size field");
    n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw UnsupportedSizeError("graph6 order " + std::to_string(n) + " exceeds " +
                               std::to_string(kMaxOrder));
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) throw ParseError("graph6 body has wrong length");
  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = val(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

/// Newline-separated graph6 records; blank lines are skipped.
inline std::vector<SimpleGraph> read_graph6_stream(std::istream& in) {
  std::vector<SimpleGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

inline void write_graph6_stream(std::ostream& out, const std::vector<SimpleGraph>& gs) {
  for (const auto& g : gs) out << to_graph6(g) << '\n';
}

/// "n m" then m lines "u v".
inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (Edge e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline SimpleGraph from_edge_list(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  for (std::string_view raw : detail::split_lines(text)) {
    std::string_view line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream is{std::string(line)};
    std::vector<long long> nums;
    long long x = 0;
    while (is >> x) nums.push_back(x);
    if (!is.eof() || nums.size() != 2) throw ParseError("edge list lines must hold two integers");
    rows.push_back(nums);
  }
  if (rows.empty()) throw ParseError("empty edge list");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (n < 0 || m < 0) throw ParseError("negative size in edge list header");
  if (n > kMaxOrder) {
    throw UnsupportedSizeError("edge list order " + std::to_string(n) + " exceeds " +
                               std::to_string(kMaxOrder));
  }
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges but lists " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    long long u = rows[i][0];
    long long v = rows[i][1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loops are not allowed");
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  try {
    return SimpleGraph(static_cast<int>(n), edges);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline std::string to_dot(const SimpleGraph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (Edge e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

/// Edge list when the first meaningful line holds two integers, graph6 otherwise.
inline SimpleGraph parse_graph(std::string_view text) {
  for (std::string_view raw : detail::split_lines(text)) {
    std::string_view line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream is{std::string(line)};
    long long a = 0;
    long long b = 0;
    if (is >> a >> b) return from_edge_list(text);
    std::vector<std::string_view> rest;
    for (std::string_view r : detail::split_lines(text)) {
      if (!detail::trim(r).empty()) rest.push_back(r);
    }
    if (rest.size() != 1) throw ParseError("expected a single graph6 record");
    return from_graph6(rest[0]);
  }
  throw ParseError("no graph in input");
}

} // namespace octminor

#endif // OCTMINOR_IO_HPP
