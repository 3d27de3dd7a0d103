#pragma once

// Brute-force isomorphism for tiny graphs: degree-sequence filter, then a
// backtracking vertex matching.

#include "chromatic/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace chromatic {

namespace detail {

inline bool match_masks(const std::vector<VertexMask>& adj_a, const std::vector<int>& verts_a,
                        const std::vector<VertexMask>& adj_b, const std::vector<int>& verts_b) {
  const std::size_t n = verts_a.size();
  if (n != verts_b.size()) return false;
  std::vector<int> deg_a(n);
  std::vector<int> deg_b(n);
  VertexMask set_a = vertices_mask(verts_a);
  VertexMask set_b = vertices_mask(verts_b);
  for (std::size_t i = 0; i < n; ++i) {
    deg_a[i] = popcount(adj_a[verts_a[i]] & set_a);
    deg_b[i] = popcount(adj_b[verts_b[i]] & set_b);
  }
  {
    auto sa = deg_a;
    auto sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || deg_a[i] != deg_b[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        bool ea = (adj_a[verts_a[i]] >> verts_a[p]) & 1;
        bool eb = (adj_b[verts_b[j]] >> verts_b[image[p]]) & 1;
        ok = ea == eb;
      }
      if (!ok) continue;
      used[j] = true;
      image[i] = static_cast<int>(j);
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

inline std::vector<VertexMask> mask_table(const Graph& g) {
  g.require_mask_capacity();
  std::vector<VertexMask> out(g.order());
  for (int v = 0; v < g.order(); ++v) out[v] = g.neighbor_mask(v);
  return out;
}

}  // namespace detail

/// Isomorphism of the underlying simple graphs.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> va(a.order());
  std::vector<int> vb(b.order());
  std::iota(va.begin(), va.end(), 0);
  std::iota(vb.begin(), vb.end(), 0);
  return detail::match_masks(detail::mask_table(a), va, detail::mask_table(b), vb);
}

/// Whether G[within] is isomorphic to pattern.
inline bool induced_isomorphic(const Graph& g, VertexMask within, const Graph& pattern) {
  if (popcount(within) != pattern.order()) return false;
  if (induced_edge_count(g, within) != pattern.size()) return false;
  std::vector<int> vp(pattern.order());
  std::iota(vp.begin(), vp.end(), 0);
  return detail::match_masks(detail::mask_table(g), mask_vertices(within), detail::mask_table(pattern), vp);
}

/// Lexicographically smallest upper-triangle adjacency string over all vertex
/// orders. Exhaustive; intended for n <= 8.
inline std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw InputError("canonical_form: graph too large for brute force");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) s.push_back(g.adjacent(perm[u], perm[v]) ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

/// Every automorphism of G as a vertex map. Exhaustive; intended for n <= 7.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (g.multiplicity(perm[e.u], perm[e.v]) != e.mult) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// One representative per isomorphism class of simple graphs on n vertices
/// with at most max_edges edges, in order of edge count then discovery.
/// Exhaustive over edge subsets; intended for n <= 6.
inline std::vector<Graph> unlabeled_graphs(int n, int max_edges = -1) {
  if (n < 0) throw InputError("unlabeled_graphs: negative order");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const int slots_n = static_cast<int>(slots.size());
  const int cap = max_edges < 0 ? slots_n : std::min(max_edges, slots_n);
  std::vector<Graph> out;
  std::set<std::string> seen;
  std::vector<int> pick;
  std::function<void(int, int)> choose = [&](int from, int left) {
    if (left == 0) {
      std::vector<std::pair<int, int>> edges;
      for (int i : pick) edges.push_back(slots[i]);
      Graph g = Graph::build(n, edges);
      if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
      return;
    }
    for (int i = from; i + left <= slots_n; ++i) {
      pick.push_back(i);
      choose(i + 1, left - 1);
      pick.pop_back();
    }
  };
  for (int m = 0; m <= cap; ++m) choose(0, m);
  return out;
}

}  // namespace chromatic
