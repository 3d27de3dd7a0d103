#pragma once

// Reduction graphs and their brute-force certification.
//
// Vertex layouts (all outputs are labelled):
//   nae_to_mcc            clause j occupies 2t consecutive vertices: its t+1
//                         literals in clause order, then t-1 clause vertices
//                         "c<j>.<i>"; bridge vertices follow, one per pair of
//                         equal literals in different clauses.
//   alpha_sat_to_du       clause cliques first (literal order), then for each
//                         variable x_t: alpha copies of x_t, alpha of ~x_t.
//   monotone2sat_to_maxcut  x = 0, x_i = i, then c_{j,1..6} per clause.
//   maxcut_to_cocircuits  G, then x = n, x' = n+1, pendants x_1..x_{n^2}.

#include "chromatic/cnf.hpp"
#include "chromatic/cocircuits.hpp"
#include "chromatic/counting.hpp"
#include "chromatic/graph.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromatic {

inline std::string literal_label(int lit) {
  return (lit < 0 ? "~x" : "x") + std::to_string(std::abs(lit));
}

struct MaxCutInstance {
  Graph graph;
  int k = 0;
};

inline Graph nae_to_mcc(const CnfInstance& cnf, int t) {
  if (t < 2) throw InputError("nae_to_mcc: t must be >= 2");
  if (cnf.semantics.kind != SemanticsKind::nae) throw InputError("nae_to_mcc: nae instance required");
  validate(cnf);
  const int width = t + 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> literal_vertex;
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const auto& c = cnf.clauses[j];
    if (static_cast<int>(c.size()) != width) {
      throw InputError("nae_to_mcc: clause " + std::to_string(j + 1) + " has width " + std::to_string(c.size()) +
                       ", t=" + std::to_string(t) + " needs " + std::to_string(width));
    }
    const int base = static_cast<int>(labels.size());
    for (int lit : c) labels.push_back(literal_label(lit));
    for (int i = 1; i < t; ++i) labels.push_back("c" + std::to_string(j + 1) + "." + std::to_string(i));
    for (int a = 0; a < 2 * t; ++a)
      for (int b = a + 1; b < 2 * t; ++b) edges.emplace_back(base + a, base + b);
    std::vector<int> verts;
    for (int i = 0; i < width; ++i) verts.push_back(base + i);
    literal_vertex.push_back(verts);
  }
  for (std::size_t a = 0; a < cnf.clauses.size(); ++a)
    for (std::size_t b = a + 1; b < cnf.clauses.size(); ++b)
      for (int i = 0; i < width; ++i)
        for (int j = 0; j < width; ++j)
          if (cnf.clauses[a][i] == cnf.clauses[b][j]) {
            const int bridge = static_cast<int>(labels.size());
            labels.push_back("b:" + literal_label(cnf.clauses[a][i]) + ":" + std::to_string(a + 1) + "-" +
                             std::to_string(b + 1));
            edges.emplace_back(literal_vertex[a][i], bridge);
            edges.emplace_back(bridge, literal_vertex[b][j]);
          }
  const int n = static_cast<int>(labels.size());
  return Graph::build(n, edges).with_labels(std::move(labels));
}

/// The graph whose DU(K_alpha) 2-colorings encode alpha-of-2alpha models.
inline Graph alpha_sat_to_du(const CnfInstance& cnf) {
  if (cnf.semantics.kind != SemanticsKind::alpha_of_2alpha) throw InputError("alpha_sat_to_du: alpha instance required");
  validate(cnf);
  const int alpha = cnf.semantics.param;
  if (alpha < 2) throw InputError("alpha_sat_to_du: alpha must be >= 2");
  const int w = 2 * alpha;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  std::vector<int> clause_literal;  // literal of each clause vertex
  for (const auto& c : cnf.clauses) {
    const int base = static_cast<int>(labels.size());
    for (int lit : c) {
      labels.push_back(literal_label(lit));
      clause_literal.push_back(lit);
    }
    for (int a = 0; a < w; ++a)
      for (int b = a + 1; b < w; ++b) edges.emplace_back(base + a, base + b);
  }
  const int d_start = static_cast<int>(labels.size());
  for (int t = 1; t <= cnf.num_vars; ++t) {
    const int base = static_cast<int>(labels.size());
    for (int i = 0; i < alpha; ++i) labels.push_back(literal_label(t));
    for (int i = 0; i < alpha; ++i) labels.push_back(literal_label(-t));
    for (int a = 0; a < w; ++a)
      for (int b = a + 1; b < w; ++b) edges.emplace_back(base + a, base + b);
  }
  for (std::size_t u = 0; u < clause_literal.size(); ++u) {
    const int lit = clause_literal[u];
    const int t = std::abs(lit);
    const int base = d_start + (t - 1) * w;
    const int offset = lit > 0 ? alpha : 0;  // vertices carrying the negation
    for (int i = 0; i < alpha; ++i) edges.emplace_back(static_cast<int>(u), base + offset + i);
  }
  const int n = static_cast<int>(labels.size());
  return Graph::build(n, edges).with_labels(std::move(labels));
}

/// M(I): one 9-edge circuit x c1 c2 x_u c3 c4 x_v c5 c6 x per clause; k = 8m.
inline MaxCutInstance monotone2sat_to_maxcut(const CnfInstance& cnf) {
  if (cnf.semantics.kind != SemanticsKind::monotone_2sat) throw InputError("monotone2sat_to_maxcut: monotone instance required");
  validate(cnf);
  const int n = cnf.num_vars;
  std::vector<std::string> labels{"x"};
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const int base = static_cast<int>(labels.size());
    for (int i = 1; i <= 6; ++i) labels.push_back("c" + std::to_string(j + 1) + "." + std::to_string(i));
    const int xu = cnf.clauses[j][0];
    const int xv = cnf.clauses[j][1];
    const int c[6] = {base, base + 1, base + 2, base + 3, base + 4, base + 5};
    edges.insert(edges.end(), {{0, c[0]}, {c[0], c[1]}, {c[1], xu}, {xu, c[2]}, {c[2], c[3]},
                               {c[3], xv}, {xv, c[4]}, {c[4], c[5]}, {c[5], 0}});
  }
  const int total = static_cast<int>(labels.size());
  return {Graph::build(total, edges).with_labels(std::move(labels)), 8 * static_cast<int>(cnf.clauses.size())};
}

/// G': add x, x' and n^2 pendant-pair vertices; x and x' see everything but each other.
inline MaxCutInstance maxcut_to_cocircuits(const Graph& g, int k) {
  if (!g.is_simple()) throw InputError("maxcut_to_cocircuits: simple graph required");
  if (k < 0) throw InputError("maxcut_to_cocircuits: k must be >= 0");
  const int n = g.order();
  const int x = n;
  const int xp = n + 1;
  const int total = n + 2 + n * n;
  auto edges = g.edge_pairs();
  for (int v = 0; v < total; ++v) {
    if (v == x || v == xp) continue;
    edges.emplace_back(v, x);
    edges.emplace_back(v, xp);
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(g.labels() ? (*g.labels())[v] : "v" + std::to_string(v));
  labels.push_back("x");
  labels.push_back("x'");
  for (int j = 1; j <= n * n; ++j) labels.push_back("x" + std::to_string(j));
  return {Graph::build(total, edges).with_labels(std::move(labels)), n * n + n + k};
}

// ---------------------------------------------------------------------------
// Consistency helpers for the alpha gadget.

/// Whether equal labels share a color and opposite labels differ.
inline bool consistent(const Graph& labelled, const std::vector<int>& colors) {
  if (!labelled.labels()) throw InputError("consistent: labelled graph required");
  std::map<std::string, int> seen;
  const auto& labels = *labelled.labels();
  for (int v = 0; v < labelled.order(); ++v) {
    auto [it, fresh] = seen.emplace(labels[v], colors[v]);
    if (!fresh && it->second != colors[v]) return false;
  }
  for (const auto& [label, color] : seen) {
    if (label.rfind("~", 0) == 0) continue;
    auto neg = seen.find("~" + label);
    if (neg != seen.end() && neg->second == color) return false;
  }
  return true;
}

/// Truth values read off a consistent coloring (color 1 = true); bit v-1 = x_v.
inline std::uint32_t induced_assignment(const Graph& labelled, const std::vector<int>& colors, int num_vars) {
  std::uint32_t a = 0;
  const auto& labels = *labelled.labels();
  for (int v = 0; v < labelled.order(); ++v) {
    const auto& l = labels[v];
    bool neg = l.rfind("~x", 0) == 0;
    if (!neg && l.rfind("x", 0) != 0) continue;
    int var = parse_int(l.substr(neg ? 2 : 1));
    if (var < 1 || var > num_vars) continue;
    bool value = (colors[v] == 1) != neg;
    if (value) a |= std::uint32_t{1} << (var - 1);
  }
  return a;
}

/// The coloring that colors a literal vertex 1 iff the literal is true.
inline std::vector<int> lift_assignment(const Graph& labelled, std::uint32_t assignment) {
  std::vector<int> colors;
  for (const auto& l : *labelled.labels()) {
    bool neg = l.rfind("~x", 0) == 0;
    int var = parse_int(l.substr(neg ? 2 : 1));
    bool value = ((assignment >> (var - 1)) & 1) != neg;
    colors.push_back(value ? 1 : 2);
  }
  return colors;
}

// ---------------------------------------------------------------------------
// Certification.

struct Certification {
  std::string kind;
  BigInt models = 0;
  BigInt colorings = 0;  // or cuts / cocircuits, depending on kind
  bool match = false;
  int vertices = 0;
  int edges = 0;
  std::optional<Rational> ratio;    // colorings / models
  std::optional<long long> per_clause;  // c with ratio = c^m, when it exists
};

inline Certification make_certification(std::string kind, BigInt models, BigInt colorings) {
  Certification c;
  c.kind = std::move(kind);
  c.models = std::move(models);
  c.colorings = std::move(colorings);
  return c;
}

inline Certification certify_nae_mcc(const CnfInstance& cnf, int t, const CountOptions& opt = {}) {
  Graph g = nae_to_mcc(cnf, t);
  auto c = make_certification("nae_mcc", count_models(cnf), brute_count_at(g, mcc_property(t), 2, opt));
  c.match = c.models == c.colorings;
  c.vertices = g.order();
  c.edges = g.size();
  if (c.models != 0) c.ratio = Rational(c.colorings) / Rational(c.models);
  return c;
}

inline Certification certify_alpha_du(const CnfInstance& cnf, const CountOptions& opt = {}) {
  Graph g = alpha_sat_to_du(cnf);
  const int alpha = cnf.semantics.param;
  auto c = make_certification("alpha_du", count_models(cnf),
                              brute_count_at(g, du_property(complete_graph(alpha), "K" + std::to_string(alpha)), 2, opt));
  c.match = c.models == c.colorings;
  c.vertices = g.order();
  c.edges = g.size();
  if (c.models != 0) c.ratio = Rational(c.colorings) / Rational(c.models);
  return c;
}

namespace detail {

inline std::optional<long long> integer_root(const Rational& r, int m) {
  if (m <= 0 || r <= 0 || boost::multiprecision::denominator(r) != 1) return std::nullopt;
  BigInt v = boost::multiprecision::numerator(r);
  for (long long c = 1; c <= 64; ++c) {
    BigInt p = boost::multiprecision::pow(BigInt(c), static_cast<unsigned>(m));
    if (p == v) return c;
    if (p > v) break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Cuts of size 8m in M(I) against models of I. `match` holds when the ratio
/// is c^m for an integer c; c is reported in per_clause.
inline Certification certify_maxcut(const CnfInstance& cnf, const CountOptions& opt = {}) {
  auto inst = monotone2sat_to_maxcut(cnf);
  auto c = make_certification("monotone_maxcut", count_models(cnf),
                              BigInt(count_cuts_of_size(inst.graph, inst.k, opt.budget)));
  c.vertices = inst.graph.order();
  c.edges = inst.graph.size();
  const int m = static_cast<int>(cnf.clauses.size());
  if (c.models != 0) {
    c.ratio = Rational(c.colorings) / Rational(c.models);
    c.per_clause = detail::integer_root(*c.ratio, m);
    c.match = m == 0 ? c.colorings == c.models : c.per_clause.has_value();
  } else {
    c.match = c.colorings == 0;
  }
  return c;
}

/// Unordered bipartitions {U, V-U} of crossing size k, U allowed empty. This
/// differs from count_cuts_of_size only at k = 0.
inline BigInt count_bipartitions_of_size(const Graph& g, int k, const CountOptions& opt = {}) {
  BigInt n = BigInt(count_cuts_of_size(g, k, opt.budget));
  if (k == 0 && g.order() > 0) n += 1;
  return n;
}

/// Cocircuits of size k' in G' against 2^(n^2+1) times the size-k
/// bipartitions of G.
inline Certification certify_cocircuits(const Graph& g, int k, const CountOptions& opt = {}) {
  auto inst = maxcut_to_cocircuits(g, k);
  auto census = enumerate_cocircuits(inst.graph, false, opt.budget);
  const int n = g.order();
  BigInt cuts = count_bipartitions_of_size(g, k, opt);
  auto c = make_certification("maxcut_cocircuits", cuts,
                              BigInt(census.by_size.count(inst.k) ? census.by_size[inst.k] : 0));
  c.vertices = inst.graph.order();
  c.edges = inst.graph.size();
  BigInt expected = cuts * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n * n + 1));
  c.match = c.colorings == expected;
  if (cuts != 0) c.ratio = Rational(c.colorings) / Rational(cuts);
  return c;
}

// ---------------------------------------------------------------------------
// The l-stretch cocircuit formula and its inversion.

struct StretchReport {
  int l = 0;
  int m = 0;
  int bridges = 0;
  BigInt lhs = 0;             // N(G_l), enumerated
  BigInt rhs = 0;             // sum_k l^k N_k(G) + C(l,2) m
  BigInt rhs_bridgeless = 0;  // same with m replaced by m - bridges
  bool holds = false;
  bool holds_bridgeless = false;
};

inline StretchReport stretch_identity_check(const Graph& g, int l, const CountOptions& opt = {}) {
  if (l < 1) throw InputError("stretch: l must be >= 1");
  StretchReport r;
  r.l = l;
  r.m = g.size();
  r.bridges = bridge_count(g);
  r.lhs = BigInt(enumerate_cocircuits(stretch(g, l), false, opt.budget).total);
  BigInt sum = 0;
  for (auto [size, count] : enumerate_cocircuits(g, false, opt.budget).by_size) {
    sum += boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(size)) * BigInt(count);
  }
  BigInt pairs = BigInt(l) * (l - 1) / 2;
  r.rhs = sum + pairs * r.m;
  r.rhs_bridgeless = sum + pairs * (r.m - r.bridges);
  r.holds = r.lhs == r.rhs;
  r.holds_bridgeless = r.lhs == r.rhs_bridgeless;
  return r;
}

/// Solves sum_k l^k N_k = N(G_l) - C(l,2) * offset_edges for l = 1..m by
/// exact elimination. offset_edges is m in the formula as printed.
inline std::vector<BigInt> gaussian_recover(const std::vector<BigInt>& stretch_counts, int m,
                                            std::optional<long long> offset_edges = std::nullopt) {
  if (m < 0) throw InputError("gaussian_recover: m must be >= 0");
  if (static_cast<int>(stretch_counts.size()) < m) {
    throw InputError("gaussian_recover: need N(G_l) for l = 1.." + std::to_string(m));
  }
  const long long offset = offset_edges.value_or(m);
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (int row = 0; row < m; ++row) {
    const long long l = row + 1;
    Rational power = 1;
    for (int col = 0; col < m; ++col) {
      power *= l;
      a[row][col] = power;
    }
    a[row][m] = Rational(stretch_counts[row]) - Rational(l * (l - 1) / 2 * offset);
  }
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw InputError("gaussian_recover: singular system");
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (int j = col; j <= m; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<BigInt> out;
  for (int k = 0; k < m; ++k) {
    Rational v = a[k][m] / a[k][k];
    if (boost::multiprecision::denominator(v) != 1 || v < 0) {
      throw InputError("gaussian_recover: inconsistent inputs (N_" + std::to_string(k + 1) + " = " + to_string(v) + ")");
    }
    out.push_back(boost::multiprecision::numerator(v));
  }
  return out;
}

/// N(G_l) for l = 1..m, by enumeration.
inline std::vector<BigInt> stretch_counts(const Graph& g, int max_l, const CountOptions& opt = {}) {
  std::vector<BigInt> out;
  for (int l = 1; l <= max_l; ++l) out.push_back(BigInt(enumerate_cocircuits(stretch(g, l), false, opt.budget).total));
  return out;
}

}  // namespace chromatic
