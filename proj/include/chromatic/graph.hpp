#pragma once

// Immutable graph values and the graph constructions used as reductions and
// identity gadgets. Vertices are dense indices 0..n-1. Constructions place the
// original vertices first, then fresh vertices in construction order.

#include "chromatic/types.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromatic {

enum class Flavor { simple, multi };

struct Edge {
  int u = 0;
  int v = 0;
  int mult = 1;
  auto operator<=>(const Edge&) const = default;
};

using VertexMask = std::uint64_t;

class Graph {
 public:
  /// The graph on zero vertices.
  Graph() = default;

  static Graph build(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::optional<std::vector<int>>& multiplicities = std::nullopt,
                     Flavor flavor = Flavor::simple) {
    if (n < 0) throw InputError("negative vertex count");
    if (multiplicities && multiplicities->size() != edges.size()) {
      throw InputError("multiplicity list length does not match edge list");
    }
    std::map<std::pair<int, int>, int> merged;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") with n=" + std::to_string(n));
      }
      if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
      int mult = multiplicities ? (*multiplicities)[i] : 1;
      if (mult < 1) throw InputError("edge multiplicity must be >= 1");
      if (flavor == Flavor::simple && mult != 1) {
        throw InputError("multiplicity > 1 in a simple graph");
      }
      auto key = std::minmax(u, v);
      auto [it, inserted] = merged.emplace(key, mult);
      if (!inserted) {
        if (flavor == Flavor::simple) {
          throw InputError("duplicate edge (" + std::to_string(key.first) + "," +
                           std::to_string(key.second) + ") in simple graph");
        }
        it->second += mult;
      }
    }
    Graph g;
    g.n_ = n;
    g.flavor_ = flavor;
    g.edges_.reserve(merged.size());
    for (auto& [key, mult] : merged) g.edges_.push_back({key.first, key.second, mult});
    g.finalize();
    return g;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  Flavor flavor() const { return flavor_; }
  bool is_simple() const { return flavor_ == Flavor::simple; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Neighbours of v as a bitmask; only available when n <= 64.
  VertexMask neighbor_mask(int v) const {
    require_mask_capacity();
    return masks_[v];
  }
  bool fits_mask() const { return n_ <= 64; }
  void require_mask_capacity() const {
    if (n_ > 64) throw InputError("graph has more than 64 vertices; mask-based routine unavailable");
  }
  VertexMask all_vertices() const {
    return n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1);
  }

  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  int multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0},
                               [](const Edge& a, const Edge& b) {
                                 return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                               });
    return (it != edges_.end() && it->u == u && it->v == v) ? it->mult : 0;
  }

  int isolated_count() const {
    return static_cast<int>(std::count_if(adjacency_.begin(), adjacency_.end(),
                                          [](const auto& a) { return a.empty(); }));
  }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  std::vector<int> edge_multiplicities() const {
    std::vector<int> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.mult);
    return out;
  }

  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  Graph with_labels(std::vector<std::string> labels) const {
    if (static_cast<int>(labels.size()) != n_) {
      throw InputError("label table must cover every vertex");
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  Graph without_labels() const {
    Graph g = *this;
    g.labels_.reset();
    return g;
  }

  /// Structural equality: same n, flavor and edge multiset. Labels ignored.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && flavor_ == other.flavor_ && edges_ == other.edges_;
  }

 private:
  void finalize() {
    adjacency_.assign(n_, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
    masks_.clear();
    if (n_ <= 64) {
      masks_.assign(n_, 0);
      for (const auto& e : edges_) {
        masks_[e.u] |= VertexMask{1} << e.v;
        masks_[e.v] |= VertexMask{1} << e.u;
      }
    }
  }

  int n_ = 0;
  Flavor flavor_ = Flavor::simple;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexMask> masks_;
  std::optional<std::vector<std::string>> labels_;
};

// ---------------------------------------------------------------------------
// Mask helpers over induced subgraphs (n <= 64).

inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

/// Vertices of `within` reachable from `start` inside G[within].
inline VertexMask reach_within(const Graph& g, int start, VertexMask within) {
  VertexMask seen = VertexMask{1} << start;
  VertexMask frontier = seen;
  while (frontier) {
    int v = lowest_vertex(frontier);
    frontier &= frontier - 1;
    VertexMask next = g.neighbor_mask(v) & within & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen;
}

/// Empty vertex sets count as connected.
inline bool induced_connected(const Graph& g, VertexMask within) {
  if (!within) return true;
  return reach_within(g, lowest_vertex(within), within) == within;
}

inline std::vector<VertexMask> induced_components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  while (within) {
    VertexMask comp = reach_within(g, lowest_vertex(within), within);
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

/// Number of distinct adjacent pairs inside G[within].
inline int induced_edge_count(const Graph& g, VertexMask within) {
  int twice = 0;
  for (VertexMask m = within; m; m &= m - 1) {
    twice += popcount(g.neighbor_mask(lowest_vertex(m)) & within);
  }
  return twice / 2;
}

inline std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest_vertex(m));
  return out;
}

inline VertexMask vertices_mask(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= VertexMask{1} << v;
  return m;
}

/// Induced subgraph on the listed vertices, relabelled 0.. in list order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> mult;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.emplace_back(index[e.u], index[e.v]);
      mult.push_back(e.mult);
    }
  }
  return Graph::build(static_cast<int>(vertices.size()), edges, mult, g.flavor());
}

// ---------------------------------------------------------------------------
// Standard graphs.

enum class GraphKind { complete, edgeless, path, star, cycle };

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

inline Graph edgeless_graph(int m) { return Graph::build(m, {}); }

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

/// K_{1,leaves}: centre is vertex 0.
inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::build(leaves + 1, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

inline Graph standard_graph(GraphKind kind, int size) {
  if (size < 0) throw InputError("graph size must be nonnegative");
  switch (kind) {
    case GraphKind::complete: return complete_graph(size);
    case GraphKind::edgeless: return edgeless_graph(size);
    case GraphKind::path: return path_graph(size);
    case GraphKind::star: return star_graph(size);
    case GraphKind::cycle: return cycle_graph(size);
  }
  throw InputError("unknown graph kind");
}

/// Parses short graph names: K<n>, E<n>, P<n>, C<n>, S<n> (star K_{1,n}).
inline Graph named_graph(std::string_view name) {
  if (name.size() < 2) throw InputError("unknown graph name '" + std::string(name) + "'");
  int size = parse_int(name.substr(1));
  switch (name[0]) {
    case 'K': return complete_graph(size);
    case 'E': return edgeless_graph(size);
    case 'P': return path_graph(size);
    case 'C': return cycle_graph(size);
    case 'S': return star_graph(size);
    default: throw InputError("unknown graph name '" + std::string(name) + "'");
  }
}

// ---------------------------------------------------------------------------
// Constructions.

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.flavor() != g2.flavor()) throw InputError("disjoint_union: flavor mismatch");
  auto edges = g1.edge_pairs();
  auto mult = g1.edge_multiplicities();
  for (const auto& e : g2.edges()) {
    edges.emplace_back(e.u + g1.order(), e.v + g1.order());
    mult.push_back(e.mult);
  }
  return Graph::build(g1.order() + g2.order(), edges, mult, g1.flavor());
}

inline Graph join(const Graph& g1, const Graph& g2) {
  if (!g1.is_simple() || !g2.is_simple()) throw InputError("join: simple graphs only");
  auto edges = disjoint_union(g1, g2).edge_pairs();
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) edges.emplace_back(u, g1.order() + v);
  return Graph::build(g1.order() + g2.order(), edges);
}

/// S(G): subdivide every edge with a fresh vertex v_e (in edge order, after
/// the original vertices) and make the subdivision vertices a clique.
inline Graph harmonious_gadget(const Graph& g) {
  if (!g.is_simple()) throw InputError("harmonious_gadget: simple graph required");
  const int n = g.order();
  const int m = g.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    const auto& e = g.edges()[i];
    edges.emplace_back(e.u, n + i);
    edges.emplace_back(n + i, e.v);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(n + i, n + j);
  return Graph::build(n + m, edges);
}

/// G_l: every edge becomes a path with l edges; interior vertices of edge i
/// are n + i*(l-1) .. n + (i+1)*(l-1) - 1, ordered from e.u towards e.v.
inline Graph stretch(const Graph& g, int l) {
  if (!g.is_simple()) throw InputError("stretch: simple graph required");
  if (l < 1) throw InputError("stretch: l must be >= 1");
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  int next = n;
  for (const auto& e : g.edges()) {
    int prev = e.u;
    for (int step = 1; step < l; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, e.v);
  }
  return Graph::build(next, edges);
}

/// Box_{H,v}(G): G then H, plus every vertex of G joined to v in H.
inline Graph box_join(const Graph& g, const Graph& h, int v) {
  if (!g.is_simple() || !h.is_simple()) throw InputError("box_join: simple graphs required");
  if (v < 0 || v >= h.order()) throw InputError("box_join: attachment vertex out of range");
  auto edges = disjoint_union(g, h).edge_pairs();
  for (int u = 0; u < g.order(); ++u) edges.emplace_back(u, g.order() + v);
  return Graph::build(g.order() + h.order(), edges);
}

struct StrippedGraph {
  Graph core;
  int isolated = 0;
};

inline StrippedGraph strip_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return {induced_subgraph(g, keep), g.order() - static_cast<int>(keep.size())};
}

/// G': G plus a clique on t(k+1) new vertices; the first new vertex (index
/// n(G)) is joined to every vertex of G.
inline Graph mcc_extension(const Graph& g, int t, int k) {
  if (!g.is_simple()) throw InputError("mcc_extension: simple graph required");
  if (t < 1 || k < 1) throw InputError("mcc_extension: t and k must be >= 1");
  const int n = g.order();
  const int fresh = t * (k + 1);
  auto edges = g.edge_pairs();
  for (int i = 0; i < fresh; ++i)
    for (int j = i + 1; j < fresh; ++j) edges.emplace_back(n + i, n + j);
  for (int u = 0; u < n; ++u) edges.emplace_back(u, n);
  return Graph::build(n + fresh, edges);
}

/// G joined to a new vertex (index n(G)) by edges of multiplicity t+1.
inline Graph t_pendant(const Graph& g, int t) {
  if (t < 0) throw InputError("t_pendant: t must be >= 0");
  auto edges = g.edge_pairs();
  auto mult = g.edge_multiplicities();
  for (int u = 0; u < g.order(); ++u) {
    edges.emplace_back(u, g.order());
    mult.push_back(t + 1);
  }
  return Graph::build(g.order() + 1, edges, mult, Flavor::multi);
}

/// Vertex i of L(G) is edge i of G (in G's canonical edge order).
inline Graph line_graph(const Graph& g) {
  if (!g.is_simple()) throw InputError("line_graph: simple graph required");
  const auto& es = g.edges();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u ||
          es[i].v == es[j].v)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::build(static_cast<int>(es.size()), edges);
}

/// Maximal connected vertex sets in increasing order of their least vertex.
/// The graph on zero vertices has one (empty) component.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {{}};
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbors(members[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline int component_count(const Graph& g) {
  return g.order() == 0 ? 1 : static_cast<int>(connected_components(g).size());
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

/// Edges whose removal increases the number of components.
inline int bridge_count(const Graph& g) {
  int bridges = 0;
  const int base = component_count(g);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (g.edges()[i].mult > 1) continue;
    auto edges = g.edge_pairs();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    if (component_count(Graph::build(g.order(), edges)) > base) ++bridges;
  }
  return bridges;
}

}  // namespace chromatic
