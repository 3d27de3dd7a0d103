#pragma once

// Cuts and cocircuits by shore enumeration.
//
// A cut is an unordered bipartition {X, Y} of V with both shores nonempty.
// Vertex 0 is always placed in Y, so each cut is visited once.

#include "chromatic/graph.hpp"

#include <cstdint>
#include <algorithm>
#include <map>
#include <vector>

namespace chromatic {

struct CutReport {
  VertexMask x = 0;  // shore not containing vertex 0
  VertexMask y = 0;
  int crossing_size = 0;
  bool is_cocircuit = false;
};

struct CocircuitCensus {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> by_size;
  std::vector<CutReport> reports;  // filled on request
};

namespace detail {

inline int crossing_size(const Graph& g, VertexMask x) {
  int c = 0;
  for (const auto& e : g.edges())
    if (((x >> e.u) & 1) != ((x >> e.v) & 1)) c += e.mult;
  return c;
}

inline void require_cut_budget(const Graph& g, std::uint64_t budget) {
  if (g.order() > 40 || (std::uint64_t{1} << std::max(g.order() - 1, 0)) > budget) {
    throw BudgetExceeded("cut enumeration over 2^" + std::to_string(g.order() - 1) + " shores exceeds budget");
  }
}

template <typename Visit>
void for_each_cut(const Graph& g, Visit visit) {
  const int n = g.order();
  if (n < 2) return;
  const VertexMask all = g.all_vertices();
  const VertexMask top = VertexMask{1} << (n - 1);
  for (VertexMask s = 1; s < top; ++s) {
    VertexMask x = s << 1;
    visit(x, all & ~x);
  }
}

}  // namespace detail

inline CutReport make_cut_report(const Graph& g, VertexMask x) {
  g.require_mask_capacity();
  VertexMask y = g.all_vertices() & ~x;
  if (x == 0 || y == 0 || (x & ~g.all_vertices())) throw InputError("cut shores must be nonempty and cover V");
  return {x, y, detail::crossing_size(g, x), induced_connected(g, x) && induced_connected(g, y)};
}

namespace detail {

/// Calls visit(S) for every connected vertex set S containing vertex 0.
/// Each set is produced once: a branch either takes the next candidate or
/// bans it for all later branches.
template <typename Visit>
void for_each_rooted_connected_set(const Graph& g, VertexMask s, VertexMask cand, VertexMask banned, Visit& visit) {
  visit(s);
  VertexMask c = cand;
  while (c) {
    int w = lowest_vertex(c);
    VertexMask wb = VertexMask{1} << w;
    c &= ~wb;
    VertexMask next = (c | g.neighbor_mask(w)) & ~(s | wb | banned);
    for_each_rooted_connected_set(g, s | wb, next, banned, visit);
    banned |= wb;
  }
}

}  // namespace detail

/// Cocircuits of a connected simple graph: cuts whose shores both induce
/// connected subgraphs. Shores are found by growing connected sets around
/// vertex 0, so the work scales with the number of connected sets.
inline CocircuitCensus enumerate_cocircuits(const Graph& g, bool keep_reports = false,
                                            std::uint64_t budget = 100'000'000) {
  if (!g.is_simple()) throw InputError("cocircuits: simple graph required");
  if (!is_connected(g)) throw InputError("cocircuits: graph must be connected");
  g.require_mask_capacity();
  CocircuitCensus out;
  if (g.order() < 2) return out;
  const VertexMask all = g.all_vertices();
  std::uint64_t visited = 0;
  auto visit = [&](VertexMask y) {
    if (++visited > budget) throw BudgetExceeded("cocircuit search exceeded budget");
    VertexMask x = all & ~y;
    if (x == 0 || !induced_connected(g, x)) return;
    int size = detail::crossing_size(g, x);
    ++out.total;
    ++out.by_size[size];
    if (keep_reports) out.reports.push_back({x, y, size, true});
  };
  detail::for_each_rooted_connected_set(g, VertexMask{1}, g.neighbor_mask(0), 0, visit);
  if (keep_reports) {
    std::sort(out.reports.begin(), out.reports.end(), [](const CutReport& a, const CutReport& b) { return a.x < b.x; });
  }
  return out;
}

/// Every cut with its classification, by direct iteration over the
/// 2^(n-1)-1 shore bipartitions.
inline std::vector<CutReport> all_cut_reports(const Graph& g, std::uint64_t budget = 100'000'000) {
  g.require_mask_capacity();
  detail::require_cut_budget(g, budget);
  std::vector<CutReport> out;
  detail::for_each_cut(g, [&](VertexMask x, VertexMask y) {
    out.push_back({x, y, detail::crossing_size(g, x), induced_connected(g, x) && induced_connected(g, y)});
  });
  return out;
}

inline std::uint64_t count_cocircuits(const Graph& g) { return enumerate_cocircuits(g).total; }

/// Number of cuts (cocircuit or not) for each crossing size.
inline std::map<int, std::uint64_t> cut_size_census(const Graph& g, std::uint64_t budget = 100'000'000) {
  g.require_mask_capacity();
  detail::require_cut_budget(g, budget);
  std::map<int, std::uint64_t> out;
  detail::for_each_cut(g, [&](VertexMask x, VertexMask) { ++out[detail::crossing_size(g, x)]; });
  return out;
}

inline std::uint64_t count_cuts_of_size(const Graph& g, int size, std::uint64_t budget = 100'000'000) {
  auto census = cut_size_census(g, budget);
  auto it = census.find(size);
  return it == census.end() ? 0 : it->second;
}

}  // namespace chromatic
