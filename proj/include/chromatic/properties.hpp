#pragma once

// Coloring properties as machine-checkable predicates.
//
// Colors are 1-based. A property sees the whole color assignment of its
// domain (vertices, or edges in the graph's canonical edge order) together
// with the palette size k. Most properties ignore k; the two non-polynomial
// demonstration properties do not.
//
// A property may also carry a `dead_end` predicate used by the enumerators:
// given colors for the first `last + 1` domain positions, it returns true only
// when no completion of that prefix can satisfy the property.

#include "chromatic/graph.hpp"
#include "chromatic/isomorphism.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromatic {

enum class Domain { vertex, edge };

using ColorSpan = std::span<const int>;

struct Coloring {
  Domain domain = Domain::vertex;
  std::vector<int> colors;
  int k = 0;
};

struct ColoringProperty {
  using Checker = std::function<bool(const Graph&, ColorSpan, int)>;
  using DeadEnd = std::function<bool(const Graph&, ColorSpan, int)>;

  std::string name;
  Domain domain = Domain::vertex;
  Checker checker;
  DeadEnd dead_end;  // optional
  /// Known to satisfy conditions (A) and (B) on every graph.
  bool zilber = true;
  std::optional<int> t;
  std::optional<Graph> pattern;
};

inline int domain_size(const Graph& g, Domain d) { return d == Domain::vertex ? g.order() : g.size(); }

/// Validating front for prop.checker.
inline bool check(const ColoringProperty& prop, const Graph& g, const Coloring& c) {
  if (c.domain != prop.domain) throw InputError("coloring domain does not match property '" + prop.name + "'");
  if (static_cast<int>(c.colors.size()) != domain_size(g, prop.domain)) {
    throw InputError("coloring is not total on its domain");
  }
  for (int col : c.colors)
    if (col < 1 || col > c.k) throw InputError("color " + std::to_string(col) + " outside 1.." + std::to_string(c.k));
  return prop.checker(g, c.colors, c.k);
}

namespace detail {

/// Class masks indexed by color (index 0 unused).
inline std::vector<VertexMask> class_masks(ColorSpan colors, int count) {
  int top = 0;
  for (int i = 0; i < count; ++i) top = std::max(top, colors[i]);
  std::vector<VertexMask> masks(top + 1, 0);
  for (int i = 0; i < count; ++i) masks[colors[i]] |= VertexMask{1} << i;
  return masks;
}

inline std::vector<VertexMask> class_masks(ColorSpan colors) {
  return class_masks(colors, static_cast<int>(colors.size()));
}

/// Vertices 0..last that share the color of `last`.
inline VertexMask assigned_class(ColorSpan colors, int last) {
  VertexMask m = 0;
  for (int i = 0; i <= last; ++i)
    if (colors[i] == colors[last]) m |= VertexMask{1} << i;
  return m;
}

inline bool mono_edge_at(const Graph& g, ColorSpan colors, int last) {
  return (g.neighbor_mask(last) & assigned_class(colors, last) & ~(VertexMask{1} << last)) != 0;
}

inline bool is_forest(const Graph& g, VertexMask within) {
  return induced_edge_count(g, within) == popcount(within) - static_cast<int>(induced_components(g, within).size());
}

inline bool is_clique(const Graph& g, VertexMask within) {
  const int s = popcount(within);
  return induced_edge_count(g, within) == s * (s - 1) / 2;
}

/// Degree of v inside `within`, counting parallel edges.
inline int class_degree(const Graph& g, int v, VertexMask within) {
  if (g.is_simple()) return popcount(g.neighbor_mask(v) & within);
  int d = 0;
  for (int w : g.neighbors(v))
    if ((within >> w) & 1) d += g.multiplicity(v, w);
  return d;
}

/// Whether some h-subset of `within` (containing `must` if nonzero) induces H.
inline bool contains_induced_copy(const Graph& g, VertexMask within, const Graph& pattern, VertexMask must) {
  const int h = pattern.order();
  if (popcount(within) < h) return false;
  if (h == 0) return true;
  std::vector<int> verts = mask_vertices(within & ~must);
  const int base = popcount(must);
  if (base > h) return false;
  const int need = h - base;
  std::vector<int> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(pick.size()) == need) {
      VertexMask m = must | vertices_mask(pick);
      return induced_isomorphic(g, m, pattern);
    }
    for (std::size_t i = from; i + (need - pick.size()) <= verts.size(); ++i) {
      pick.push_back(verts[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

inline bool is_connected_pattern(const Graph& h) {
  return h.order() >= 1 && component_count(h) == 1;
}

}  // namespace detail

/// Whether every component of G[class_vertices] is isomorphic to pattern.
inline bool induces_copy_union(const Graph& g, const std::vector<int>& class_vertices, const Graph& pattern) {
  if (!detail::is_connected_pattern(pattern)) throw InputError("pattern graph must be connected and nonempty");
  for (VertexMask comp : induced_components(g, vertices_mask(class_vertices)))
    if (!induced_isomorphic(g, comp, pattern)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Named properties.

inline ColoringProperty trivial_property() {
  return {"trivial", Domain::vertex, [](const Graph&, ColorSpan, int) { return true; }, {}, true, {}, {}};
}

inline ColoringProperty proper_property() {
  ColoringProperty p;
  p.name = "proper";
  p.checker = [](const Graph& g, ColorSpan c, int) {
    for (const auto& e : g.edges())
      if (c[e.u] == c[e.v]) return false;
    return true;
  };
  p.dead_end = [](const Graph& g, ColorSpan c, int last) { return detail::mono_edge_at(g, c, last); };
  return p;
}

inline ColoringProperty harmonious_property() {
  ColoringProperty p;
  p.name = "harmonious";
  p.checker = [](const Graph& g, ColorSpan c, int) {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(g.size());
    for (const auto& e : g.edges()) {
      if (c[e.u] == c[e.v]) return false;
      std::pair<int, int> pair = std::minmax(c[e.u], c[e.v]);
      if (std::find(seen.begin(), seen.end(), pair) != seen.end()) return false;
      seen.push_back(pair);
    }
    return true;
  };
  p.dead_end = [](const Graph& g, ColorSpan c, int last) {
    if (detail::mono_edge_at(g, c, last)) return true;
    std::vector<std::pair<int, int>> others;
    std::vector<std::pair<int, int>> mine;
    for (const auto& e : g.edges()) {
      if (e.u > last || e.v > last) continue;
      std::pair<int, int> pair = std::minmax(c[e.u], c[e.v]);
      if (e.u == last || e.v == last) {
        if (std::find(mine.begin(), mine.end(), pair) != mine.end()) return true;
        mine.push_back(pair);
      } else {
        others.push_back(pair);
      }
    }
    for (const auto& pair : mine)
      if (std::find(others.begin(), others.end(), pair) != others.end()) return true;
    return false;
  };
  return p;
}

/// Every color class induces a connected graph; empty classes count as connected.
inline ColoringProperty convex_property() {
  ColoringProperty p;
  p.name = "convex";
  p.checker = [](const Graph& g, ColorSpan c, int) {
    for (VertexMask m : detail::class_masks(c))
      if (!induced_connected(g, m)) return false;
    return true;
  };
  return p;
}

inline ColoringProperty mcc_property(int t) {
  if (t < 1) throw InputError("mcc: t must be >= 1");
  ColoringProperty p;
  p.name = "mcc:t=" + std::to_string(t);
  p.t = t;
  p.checker = [t](const Graph& g, ColorSpan c, int) {
    for (VertexMask m : detail::class_masks(c))
      for (VertexMask comp : induced_components(g, m))
        if (popcount(comp) > t) return false;
    return true;
  };
  p.dead_end = [t](const Graph& g, ColorSpan c, int last) {
    return popcount(reach_within(g, last, detail::assigned_class(c, last))) > t;
  };
  return p;
}

inline ColoringProperty du_property(const Graph& pattern, const std::string& pattern_name = "H") {
  if (!detail::is_connected_pattern(pattern)) throw InputError("du: pattern graph must be connected and nonempty");
  ColoringProperty p;
  p.name = "du:H=" + pattern_name;
  p.pattern = pattern;
  p.checker = [pattern](const Graph& g, ColorSpan c, int) {
    for (VertexMask m : detail::class_masks(c))
      for (VertexMask comp : induced_components(g, m))
        if (!induced_isomorphic(g, comp, pattern)) return false;
    return true;
  };
  const bool complete = pattern.size() == pattern.order() * (pattern.order() - 1) / 2;
  p.dead_end = [h = pattern.order(), complete](const Graph& g, ColorSpan c, int last) {
    VertexMask comp = reach_within(g, last, detail::assigned_class(c, last));
    if (popcount(comp) > h) return true;
    return complete && !detail::is_clique(g, comp);
  };
  return p;
}

/// No color class contains an induced copy of H.
inline ColoringProperty hfree_property(const Graph& pattern, const std::string& pattern_name = "H") {
  if (pattern.order() < 1) throw InputError("hfree: pattern graph must be nonempty");
  ColoringProperty p;
  p.name = "hfree:H=" + pattern_name;
  p.pattern = pattern;
  p.checker = [pattern](const Graph& g, ColorSpan c, int) {
    for (VertexMask m : detail::class_masks(c))
      if (detail::contains_induced_copy(g, m, pattern, 0)) return false;
    return true;
  };
  p.dead_end = [pattern](const Graph& g, ColorSpan c, int last) {
    return detail::contains_induced_copy(g, detail::assigned_class(c, last), pattern, VertexMask{1} << last);
  };
  return p;
}

/// Every color class induces a graph of maximum degree <= t; parallel edges count.
inline ColoringProperty timp_property(int t) {
  if (t < 0) throw InputError("timp: t must be >= 0");
  ColoringProperty p;
  p.name = "timp:t=" + std::to_string(t);
  p.t = t;
  p.checker = [t](const Graph& g, ColorSpan c, int) {
    auto masks = detail::class_masks(c);
    for (int v = 0; v < g.order(); ++v)
      if (detail::class_degree(g, v, masks[c[v]]) > t) return false;
    return true;
  };
  p.dead_end = [t](const Graph& g, ColorSpan c, int last) {
    VertexMask cls = detail::assigned_class(c, last);
    for (VertexMask m = cls; m; m &= m - 1)
      if (detail::class_degree(g, lowest_vertex(m), cls) > t) return true;
    return false;
  };
  return p;
}

/// Proper, and every union of two color classes induces a forest.
inline ColoringProperty acyclic_property() {
  ColoringProperty p;
  p.name = "acyclic";
  p.checker = [](const Graph& g, ColorSpan c, int) {
    for (const auto& e : g.edges())
      if (c[e.u] == c[e.v]) return false;
    auto masks = detail::class_masks(c);
    for (std::size_t i = 1; i < masks.size(); ++i)
      for (std::size_t j = i + 1; j < masks.size(); ++j)
        if (!detail::is_forest(g, masks[i] | masks[j])) return false;
    return true;
  };
  p.dead_end = [](const Graph& g, ColorSpan c, int last) {
    if (detail::mono_edge_at(g, c, last)) return true;
    auto masks = detail::class_masks(c, last + 1);
    for (std::size_t j = 1; j < masks.size(); ++j) {
      if (static_cast<int>(j) == c[last]) continue;
      VertexMask both = masks[c[last]] | masks[j];
      if (!detail::is_forest(g, reach_within(g, last, both))) return true;
    }
    return false;
  };
  return p;
}

/// Every color class induces a clique or an independent set.
inline ColoringProperty cocolor_property() {
  ColoringProperty p;
  p.name = "cocolor";
  auto ok = [](const Graph& g, VertexMask m) {
    return induced_edge_count(g, m) == 0 || detail::is_clique(g, m);
  };
  p.checker = [ok](const Graph& g, ColorSpan c, int) {
    for (VertexMask m : detail::class_masks(c))
      if (!ok(g, m)) return false;
    return true;
  };
  p.dead_end = [ok](const Graph& g, ColorSpan c, int last) { return !ok(g, detail::assigned_class(c, last)); };
  return p;
}

/// Injective on every open neighbourhood; not necessarily proper.
inline ColoringProperty injective_property() {
  ColoringProperty p;
  p.name = "injective";
  p.checker = [](const Graph& g, ColorSpan c, int) {
    for (int v = 0; v < g.order(); ++v) {
      const auto& nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (c[nb[i]] == c[nb[j]]) return false;
    }
    return true;
  };
  p.dead_end = [](const Graph& g, ColorSpan c, int last) {
    for (int v : g.neighbors(last))
      for (int w : g.neighbors(v))
        if (w != last && w <= last && c[w] == c[last]) return true;
    return false;
  };
  return p;
}

/// Edge coloring: adjacent edges receive different colors.
inline ColoringProperty edge_proper_property() {
  ColoringProperty p;
  p.name = "edge";
  p.domain = Domain::edge;
  p.checker = [](const Graph& g, ColorSpan c, int) {
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (c[i] == c[j] && (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v))
          return false;
    return true;
  };
  p.dead_end = [](const Graph& g, ColorSpan c, int last) {
    const auto& es = g.edges();
    const auto& a = es[last];
    for (int i = 0; i < last; ++i) {
      const auto& b = es[i];
      if (c[i] == c[last] && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) return true;
    }
    return false;
  };
  return p;
}

namespace detail {

/// Every two vertices are joined by a path whose edges have distinct colors.
inline bool rainbow_connected(const Graph& g, ColorSpan c) {
  const int n = g.order();
  if (n <= 1) return true;
  if (!is_connected(g)) return false;
  std::vector<std::vector<std::pair<int, int>>> incident(n);
  for (int i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    incident[e.u].emplace_back(e.v, i);
    incident[e.v].emplace_back(e.u, i);
  }
  for (int s = 0; s + 1 < n; ++s) {
    std::vector<bool> reached(n, false);
    reached[s] = true;
    int missing = 0;
    for (int v = s + 1; v < n; ++v) ++missing;
    std::vector<std::vector<std::uint64_t>> visited(n);
    std::vector<std::pair<int, std::uint64_t>> stack{{s, 0}};
    visited[s].push_back(0);
    while (!stack.empty() && missing > 0) {
      auto [v, used] = stack.back();
      stack.pop_back();
      for (auto [w, idx] : incident[v]) {
        std::uint64_t bit = std::uint64_t{1} << (c[idx] - 1);
        if (used & bit) continue;
        std::uint64_t next = used | bit;
        auto& seen = visited[w];
        if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
        seen.push_back(next);
        if (!reached[w]) {
          reached[w] = true;
          if (w > s) --missing;
        }
        stack.emplace_back(w, next);
      }
    }
    if (missing > 0) return false;
  }
  return true;
}

}  // namespace detail

/// Edge coloring under which every two vertices are joined by a rainbow path.
inline ColoringProperty rainbow_property() {
  ColoringProperty p;
  p.name = "rainbow";
  p.domain = Domain::edge;
  p.checker = [](const Graph& g, ColorSpan c, int) {
    for (int col : c)
      if (col > 64) throw InputError("rainbow: more than 64 colors unsupported");
    return detail::rainbow_connected(g, c);
  };
  return p;
}

/// Proper and every color of the palette [k] is used. Violates (B).
inline ColoringProperty surjective_proper_property() {
  ColoringProperty p;
  p.name = "surjective-proper";
  p.zilber = false;
  p.checker = [](const Graph& g, ColorSpan c, int k) {
    for (const auto& e : g.edges())
      if (c[e.u] == c[e.v]) return false;
    std::vector<bool> used(k + 1, false);
    for (int col : c) used[col] = true;
    for (int i = 1; i <= k; ++i)
      if (!used[i]) return false;
    return true;
  };
  return p;
}

/// Proper and f(v) = deg(v) + 1 for every vertex. Violates (A), not (B).
inline ColoringProperty degree_forced_property() {
  ColoringProperty p;
  p.name = "degree-forced";
  p.zilber = false;
  p.checker = [](const Graph& g, ColorSpan c, int) {
    for (const auto& e : g.edges())
      if (c[e.u] == c[e.v]) return false;
    for (int v = 0; v < g.order(); ++v)
      if (c[v] != g.degree(v) + 1) return false;
    return true;
  };
  return p;
}

// ---------------------------------------------------------------------------
// P1/P2 framework.

struct GraphClass {
  std::string name;
  std::function<bool(const Graph&, VertexMask)> contains;  // judges G[mask]
};

inline GraphClass graph_class(std::string_view name) {
  std::string n(name);
  if (name == "all") return {n, [](const Graph&, VertexMask) { return true; }};
  if (name == "edgeless") return {n, [](const Graph& g, VertexMask m) { return induced_edge_count(g, m) == 0; }};
  if (name == "atmost1") return {n, [](const Graph& g, VertexMask m) { return induced_edge_count(g, m) <= 1; }};
  if (name == "connected") return {n, [](const Graph& g, VertexMask m) { return induced_connected(g, m); }};
  if (name == "forest") return {n, [](const Graph& g, VertexMask m) { return detail::is_forest(g, m); }};
  if (name == "clique_or_edgeless") {
    return {n, [](const Graph& g, VertexMask m) { return induced_edge_count(g, m) == 0 || detail::is_clique(g, m); }};
  }
  if (name.rfind("maxdeg", 0) == 0) {
    int t = parse_int(name.substr(6));
    return {n, [t](const Graph& g, VertexMask m) {
              for (VertexMask r = m; r; r &= r - 1)
                if (detail::class_degree(g, lowest_vertex(r), m) > t) return false;
              return true;
            }};
  }
  if (name.rfind("cc", 0) == 0) {
    int t = parse_int(name.substr(2));
    return {n, [t](const Graph& g, VertexMask m) {
              for (VertexMask comp : induced_components(g, m))
                if (popcount(comp) > t) return false;
              return true;
            }};
  }
  if (name.rfind("du", 0) == 0) {
    Graph h = named_graph(name.substr(2));
    if (!detail::is_connected_pattern(h)) throw InputError("du class needs a connected pattern");
    return {n, [h](const Graph& g, VertexMask m) {
              for (VertexMask comp : induced_components(g, m))
                if (!induced_isomorphic(g, comp, h)) return false;
              return true;
            }};
  }
  throw InputError("unknown graph class '" + n + "'");
}

struct PairProperty {
  GraphClass class_pred;  // P1: every single class
  GraphClass pair_pred;   // P2: every union of two distinct classes of [k]
};

inline bool pair_check(const PairProperty& pp, const Graph& g, ColorSpan colors, int k) {
  std::vector<VertexMask> masks(std::max(k, 0) + 1, 0);
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 1 || colors[v] > k) throw InputError("pair_check: color outside palette");
    masks[colors[v]] |= VertexMask{1} << v;
  }
  for (int i = 1; i <= k; ++i)
    if (!pp.class_pred.contains(g, masks[i])) return false;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (!pp.pair_pred.contains(g, masks[i] | masks[j])) return false;
  return true;
}

inline bool pair_check(const PairProperty& pp, const Graph& g, const Coloring& c) {
  if (c.domain != Domain::vertex) throw InputError("pair_check: vertex coloring required");
  if (static_cast<int>(c.colors.size()) != g.order()) throw InputError("coloring is not total on its domain");
  return pair_check(pp, g, c.colors, c.k);
}

/// Pair properties are audited before a polynomial is emitted, since an
/// arbitrary (P1, P2) choice need not satisfy (B).
inline ColoringProperty pair_property(const PairProperty& pp) {
  ColoringProperty p;
  p.name = "pair:p1=" + pp.class_pred.name + ",p2=" + pp.pair_pred.name;
  p.zilber = false;
  p.checker = [pp](const Graph& g, ColorSpan c, int k) { return pair_check(pp, g, c, k); };
  return p;
}

// ---------------------------------------------------------------------------
// Token parsing.

namespace detail {

inline std::string param_value(std::string_view params, std::string_view key) {
  std::string s(params);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    if (eq != std::string::npos && item.substr(0, eq) == key) return item.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  throw InputError("property parameter '" + std::string(key) + "' missing");
}

}  // namespace detail

/// Parses CLI tokens: proper, harmonious, convex, edge, mcc:t=2, du:H=K3,
/// hfree:H=P3, timp:t=1, acyclic, cocolor, injective, rainbow, trivial,
/// pair:p1=...,p2=..., surjective-proper, degree-forced.
inline ColoringProperty parse_property(std::string_view token) {
  auto ends_with = [&](std::string_view suffix) {
    return token.size() >= suffix.size() && token.substr(token.size() - suffix.size()) == suffix;
  };
  if (ends_with("surjective-proper")) return surjective_proper_property();
  if (ends_with("degree-forced")) return degree_forced_property();

  auto colon = token.find(':');
  std::string_view head = token.substr(0, colon);
  std::string_view params = colon == std::string_view::npos ? std::string_view{} : token.substr(colon + 1);
  auto needs_params = [&] {
    if (params.empty()) throw InputError("property '" + std::string(head) + "' requires parameters");
  };

  if (head == "proper") return proper_property();
  if (head == "harmonious") return harmonious_property();
  if (head == "convex") return convex_property();
  if (head == "edge") return edge_proper_property();
  if (head == "acyclic") return acyclic_property();
  if (head == "cocolor") return cocolor_property();
  if (head == "injective") return injective_property();
  if (head == "rainbow") return rainbow_property();
  if (head == "trivial") return trivial_property();
  if (head == "mcc") {
    needs_params();
    return mcc_property(parse_int(detail::param_value(params, "t")));
  }
  if (head == "timp") {
    needs_params();
    return timp_property(parse_int(detail::param_value(params, "t")));
  }
  if (head == "du") {
    needs_params();
    auto name = detail::param_value(params, "H");
    return du_property(named_graph(name), name);
  }
  if (head == "hfree") {
    needs_params();
    auto name = detail::param_value(params, "H");
    return hfree_property(named_graph(name), name);
  }
  if (head == "pair") {
    needs_params();
    return pair_property({graph_class(detail::param_value(params, "p1")), graph_class(detail::param_value(params, "p2"))});
  }
  throw InputError("unknown property token '" + std::string(token) + "'");
}

/// The thirteen named properties with their default parameters.
inline std::vector<ColoringProperty> named_properties() {
  return {proper_property(),
          harmonious_property(),
          convex_property(),
          edge_proper_property(),
          mcc_property(2),
          du_property(complete_graph(2), "K2"),
          hfree_property(path_graph(3), "P3"),
          timp_property(1),
          acyclic_property(),
          cocolor_property(),
          injective_property(),
          rainbow_property(),
          trivial_property()};
}

}  // namespace chromatic
