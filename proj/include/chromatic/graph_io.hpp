#pragma once

// Graph ingestion and emission.
//
// Edge-list text: first line "n m", then m lines "u v [mult]". Lines starting
// with '#' are comments, except "# v label" lines which carry vertex labels.
// graph6: the standard printable encoding for simple graphs.

#include "chromatic/graph.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace chromatic {

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<std::string> body;
  std::vector<std::pair<int, std::string>> labels;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      int v;
      std::string label;
      if (ls >> v >> label) labels.emplace_back(v, label);
      continue;
    }
    body.push_back(line);
  }
  if (body.empty()) throw InputError("edge list: missing header line 'n m'");
  std::istringstream header(body[0]);
  int n = -1;
  int m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) throw InputError("edge list: bad header '" + body[0] + "'");
  if (static_cast<int>(body.size()) - 1 != m) {
    throw InputError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(body.size() - 1));
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> mult;
  bool multi = false;
  for (std::size_t i = 1; i < body.size(); ++i) {
    std::istringstream ls(body[i]);
    int u;
    int v;
    if (!(ls >> u >> v)) throw InputError("edge list: bad edge line '" + body[i] + "'");
    int c = 1;
    if (ls >> c) {
      if (c != 1) multi = true;
    } else {
      c = 1;
    }
    edges.emplace_back(u, v);
    mult.push_back(c);
  }
  Graph g = Graph::build(n, edges, mult, multi ? Flavor::multi : Flavor::simple);
  if (!labels.empty()) {
    std::vector<std::string> table(n);
    std::vector<bool> seen(n, false);
    for (auto& [v, label] : labels) {
      if (v < 0 || v >= n) throw InputError("edge list: label for unknown vertex " + std::to_string(v));
      table[v] = label;
      seen[v] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw InputError("edge list: label table is not total (vertex " + std::to_string(v) + ")");
    g = g.with_labels(std::move(table));
  }
  return g;
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (!g.is_simple()) out << ' ' << e.mult;
    out << '\n';
  }
  if (g.labels()) {
    for (int v = 0; v < g.order(); ++v) out << "# " << v << ' ' << (*g.labels())[v] << '\n';
  }
  return out.str();
}

inline std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw InputError("graph6 encodes simple graphs only");
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw InputError("graph6: graph too large");
  }
  int bits = 0;
  int acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph from_graph6(std::string text) {
  text = detail::trim(text);
  if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  if (text.empty()) throw InputError("graph6: empty string");
  for (char c : text)
    if (c < 63 || c > 126) throw InputError("graph6: invalid character");
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw InputError("graph6: unsupported size prefix");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  const long long pairs = n * (n - 1) / 2;
  const long long needed = (pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != needed) {
    throw InputError("graph6: wrong length for n=" + std::to_string(n));
  }
  std::vector<std::pair<int, int>> edges;
  long long index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      int byte = text[pos + index / 6] - 63;
      if ((byte >> (5 - index % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::build(static_cast<int>(n), edges);
}

/// Sidecar for graph6 output: one "v label" line per vertex.
inline std::string write_label_sidecar(const Graph& g) {
  std::ostringstream out;
  if (g.labels()) {
    for (int v = 0; v < g.order(); ++v) out << v << ' ' << (*g.labels())[v] << '\n';
  }
  return out.str();
}

/// Edge-list text if the first data line holds two integers, graph6 otherwise.
inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int a;
    int b;
    if (ls >> a >> b) {
      std::istringstream all(text);
      return read_edge_list(all);
    }
    return from_graph6(line);
  }
  throw InputError("empty graph input");
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

/// Stable identifier: graph6 for simple graphs, a compact edge text otherwise.
inline std::string fingerprint(const Graph& g) {
  if (g.is_simple()) return "g6:" + to_graph6(g);
  std::string out = "el:" + std::to_string(g.order());
  for (const auto& e : g.edges()) {
    out += ";" + std::to_string(e.u) + "-" + std::to_string(e.v) + "x" + std::to_string(e.mult);
  }
  return out;
}

}  // namespace chromatic
