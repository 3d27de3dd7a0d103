#pragma once

// Exact counting of colorings.
//
// brute_count_at    every map domain -> [k], filtered by the property
// partition counts  set partitions of the domain as restricted-growth strings;
//                   c(i) = i! * #(admissible partitions into i blocks)
// zilber_audit      c(I,k) for every I subset of [k], k <= k_max
//
// All enumerators accept a node budget and a worker count. Work is split by
// fixing a prefix of the assignment; partial counts are summed in prefix
// order, so results never depend on the worker count.

#include "chromatic/cocircuits.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/poly.hpp"
#include "chromatic/properties.hpp"

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace chromatic {

struct CountOptions {
  std::uint64_t budget = 100'000'000;
  int workers = 1;
};

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

class NodeCounter {
 public:
  NodeCounter(std::atomic<std::uint64_t>& shared, std::uint64_t limit) : shared_(shared), limit_(limit) {}
  void tick() {
    if (++local_ == 4096) flush();
  }
  void flush() {
    std::uint64_t total = shared_.fetch_add(local_) + local_;
    local_ = 0;
    if (total > limit_) throw BudgetExceeded("enumeration exceeded budget of " + std::to_string(limit_) + " nodes");
  }

 private:
  std::atomic<std::uint64_t>& shared_;
  std::uint64_t limit_;
  std::uint64_t local_ = 0;
};

struct Prefix {
  std::vector<int> colors;
  int blocks = 0;  // partition walks only
};

/// Runs work(task, acc, counter) for each task on up to `workers` threads,
/// then folds the per-task accumulators in task order.
template <typename Acc, typename Work, typename Merge>
Acc run_tasks(const std::vector<Prefix>& tasks, int workers, const Acc& init, std::atomic<std::uint64_t>& nodes,
              std::uint64_t limit, Work work, Merge merge) {
  std::vector<Acc> parts(tasks.size(), init);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> stop{false};
  auto worker = [&] {
    NodeCounter counter(nodes, limit);
    try {
      for (std::size_t i = next++; i < tasks.size() && !stop; i = next++) work(tasks[i], parts[i], counter);
      counter.flush();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (nodes.load() > limit) throw BudgetExceeded("enumeration exceeded budget of " + std::to_string(limit) + " nodes");
  Acc total = init;
  for (const auto& p : parts) merge(total, p);
  return total;
}

inline int split_depth(std::uint64_t branching, int domain, int workers) {
  if (workers <= 1 || branching < 2) return 0;
  int depth = 0;
  std::uint64_t width = 1;
  while (depth < domain && width < static_cast<std::uint64_t>(8 * workers)) {
    width *= branching;
    ++depth;
  }
  return depth;
}

/// Depth-first walk over maps domain -> [k].
struct MapWalk {
  const Graph& g;
  const ColoringProperty& prop;
  int domain;
  int k;
  bool count_nodes;

  bool pruned(const std::vector<int>& colors, int pos) const {
    return prop.dead_end && prop.dead_end(g, colors, pos);
  }

  void prefixes(std::vector<int>& colors, int pos, int depth, std::vector<Prefix>& out, NodeCounter& counter) const {
    if (pos == depth) {
      out.push_back({std::vector<int>(colors.begin(), colors.begin() + pos), 0});
      return;
    }
    for (int c = 1; c <= k; ++c) {
      colors[pos] = c;
      if (count_nodes) counter.tick();
      if (pruned(colors, pos)) continue;
      prefixes(colors, pos + 1, depth, out, counter);
    }
  }

  template <typename Leaf>
  void walk(std::vector<int>& colors, int pos, NodeCounter& counter, Leaf& leaf) const {
    if (pos == domain) {
      if (prop.checker(g, colors, k)) leaf(colors);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      colors[pos] = c;
      if (count_nodes) counter.tick();
      if (pruned(colors, pos)) continue;
      walk(colors, pos + 1, counter, leaf);
    }
  }
};

/// Enumerates the maps, calling leaf(colors, acc) for each admissible one.
template <typename Acc, typename Leaf, typename Merge>
Acc enumerate_maps(const Graph& g, const ColoringProperty& prop, int k, const CountOptions& opt, const Acc& init,
                   Leaf leaf, Merge merge) {
  const int domain = domain_size(g, prop.domain);
  const bool count_nodes = static_cast<bool>(prop.dead_end);
  if (!count_nodes && saturating_pow(static_cast<std::uint64_t>(k), domain, opt.budget) > opt.budget) {
    throw BudgetExceeded(std::to_string(k) + "^" + std::to_string(domain) + " colorings exceed budget of " +
                         std::to_string(opt.budget));
  }
  MapWalk walker{g, prop, domain, k, count_nodes};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<Prefix> tasks;
  {
    NodeCounter counter(nodes, opt.budget);
    std::vector<int> colors(domain, 0);
    walker.prefixes(colors, 0, split_depth(k, domain, opt.workers), tasks, counter);
    counter.flush();
  }
  return run_tasks(tasks, opt.workers, init, nodes, opt.budget,
                   [&](const Prefix& p, Acc& acc, NodeCounter& counter) {
                     std::vector<int> colors(domain, 0);
                     std::copy(p.colors.begin(), p.colors.end(), colors.begin());
                     auto sink = [&](const std::vector<int>& c) { leaf(c, acc); };
                     walker.walk(colors, static_cast<int>(p.colors.size()), counter, sink);
                   },
                   merge);
}

/// Depth-first walk over restricted-growth strings: block labels 1..b, each
/// new position either joins a used block or opens block b+1.
struct PartitionWalk {
  const Graph& g;
  const ColoringProperty& prop;
  int domain;
  int max_blocks;    // never open more blocks than this
  int exact_blocks;  // if >= 0, only leaves with this many blocks count

  bool viable(int pos_next, int blocks) const {
    return exact_blocks < 0 || blocks + (domain - pos_next) >= exact_blocks;
  }

  void prefixes(std::vector<int>& colors, int pos, int blocks, int depth, std::vector<Prefix>& out,
                NodeCounter& counter) const {
    if (pos == depth) {
      out.push_back({std::vector<int>(colors.begin(), colors.begin() + pos), blocks});
      return;
    }
    for (int c = 1; c <= std::min(blocks + 1, max_blocks); ++c) {
      colors[pos] = c;
      int nb = std::max(blocks, c);
      counter.tick();
      if (!viable(pos + 1, nb)) continue;
      if (prop.dead_end && prop.dead_end(g, colors, pos)) continue;
      prefixes(colors, pos + 1, nb, depth, out, counter);
    }
  }

  void walk(std::vector<int>& colors, int pos, int blocks, NodeCounter& counter, std::vector<std::uint64_t>& acc) const {
    if (pos == domain) {
      if ((exact_blocks < 0 || blocks == exact_blocks) && prop.checker(g, colors, blocks)) ++acc[blocks];
      return;
    }
    for (int c = 1; c <= std::min(blocks + 1, max_blocks); ++c) {
      colors[pos] = c;
      int nb = std::max(blocks, c);
      counter.tick();
      if (!viable(pos + 1, nb)) continue;
      if (prop.dead_end && prop.dead_end(g, colors, pos)) continue;
      walk(colors, pos + 1, nb, counter, acc);
    }
  }
};

/// Admissible set partitions of the domain, tallied by block count.
inline std::vector<std::uint64_t> partition_tally(const Graph& g, const ColoringProperty& prop, const CountOptions& opt,
                                                  int exact_blocks = -1) {
  const int domain = domain_size(g, prop.domain);
  if (domain > 0 && !g.fits_mask() && prop.domain == Domain::vertex) g.require_mask_capacity();
  PartitionWalk walker{g, prop, domain, exact_blocks >= 0 ? exact_blocks : domain, exact_blocks};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<Prefix> tasks;
  {
    NodeCounter counter(nodes, opt.budget);
    std::vector<int> colors(domain, 0);
    int depth = opt.workers > 1 ? std::min(domain, 4 + opt.workers / 4) : 0;
    walker.prefixes(colors, 0, 0, depth, tasks, counter);
    counter.flush();
  }
  std::vector<std::uint64_t> init(domain + 1, 0);
  return run_tasks(tasks, opt.workers, init, nodes, opt.budget,
                   [&](const Prefix& p, std::vector<std::uint64_t>& acc, NodeCounter& counter) {
                     std::vector<int> colors(domain, 0);
                     std::copy(p.colors.begin(), p.colors.end(), colors.begin());
                     walker.walk(colors, static_cast<int>(p.colors.size()), p.blocks, counter, acc);
                   },
                   [](std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part) {
                     for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
                   });
}

inline BigInt big(std::uint64_t v) { return BigInt(v); }

}  // namespace detail

/// chi_Phi(G; k) by full enumeration of maps into [k].
inline BigInt brute_count_at(const Graph& g, const ColoringProperty& prop, int k, const CountOptions& opt = {}) {
  if (k < 0) throw InputError("palette size must be >= 0");
  if (prop.domain == Domain::vertex) g.require_mask_capacity();
  std::uint64_t total = detail::enumerate_maps<std::uint64_t>(
      g, prop, k, opt, 0, [](const std::vector<int>&, std::uint64_t& acc) { ++acc; },
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  return detail::big(total);
}

// ---------------------------------------------------------------------------
// Audit of conditions (A) and (B).

struct ZilberReport {
  int k_max = 0;
  bool condition_a = true;
  bool condition_b = true;
  std::string witness_a;
  std::string witness_b;
  /// totals[k] = chi_Phi(G; k) for k = 0..k_max.
  std::vector<BigInt> totals;
  /// by_set[k][I] = c(I, k), I a bitmask over [k] (bit j is color j+1).
  std::vector<std::vector<BigInt>> by_set;

  bool passed() const { return condition_a && condition_b; }
};

namespace detail {

inline std::string color_set_str(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if ((mask >> j) & 1) {
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace detail

inline ZilberReport zilber_audit(const Graph& g, const ColoringProperty& prop, int k_max = 4,
                                 const CountOptions& opt = {}) {
  if (k_max < 1 || k_max > 16) throw InputError("audit k_max must lie in 1..16");
  if (prop.domain == Domain::vertex) g.require_mask_capacity();
  const int domain = domain_size(g, prop.domain);
  ZilberReport rep;
  rep.k_max = k_max;
  rep.by_set.resize(k_max + 1);
  {
    std::vector<int> none;
    rep.totals.push_back(domain == 0 && prop.checker(g, none, 0) ? 1 : 0);
    rep.by_set[0] = {rep.totals[0]};
  }
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::uint64_t> init(std::size_t{1} << k, 0);
    auto buckets = detail::enumerate_maps<std::vector<std::uint64_t>>(
        g, prop, k, opt, init,
        [](const std::vector<int>& colors, std::vector<std::uint64_t>& acc) {
          std::uint32_t used = 0;
          for (int c : colors) used |= 1u << (c - 1);
          ++acc[used];
        },
        [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
          for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        });
    BigInt total = 0;
    for (auto v : buckets) {
      rep.by_set[k].push_back(v);
      total += v;
    }
    rep.totals.push_back(total);
  }
  // (A): within one k, equal-size color sets have equal counts.
  for (int k = 1; k <= k_max && rep.condition_a; ++k) {
    std::vector<std::optional<std::uint32_t>> first(k + 1);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      int size = std::popcount(mask);
      if (!first[size]) {
        first[size] = mask;
        continue;
      }
      if (rep.by_set[k][mask] != rep.by_set[k][*first[size]]) {
        rep.condition_a = false;
        rep.witness_a = "k=" + std::to_string(k) + ": I=" + detail::color_set_str(*first[size]) + " gives " +
                        to_string(rep.by_set[k][*first[size]]) + ", I=" + detail::color_set_str(mask) + " gives " +
                        to_string(rep.by_set[k][mask]);
        break;
      }
    }
  }
  // (B): a fixed color set has the same count under every palette containing it.
  for (std::uint32_t mask = 0; mask < (1u << k_max) && rep.condition_b; ++mask) {
    int lo = mask == 0 ? 1 : 32 - std::countl_zero(mask);
    for (int k = lo + 1; k <= k_max; ++k) {
      if (rep.by_set[k][mask] != rep.by_set[lo][mask]) {
        rep.condition_b = false;
        rep.witness_b = "I=" + detail::color_set_str(mask) + ": k=" + std::to_string(lo) + " gives " +
                        to_string(rep.by_set[lo][mask]) + ", k=" + std::to_string(k) + " gives " +
                        to_string(rep.by_set[k][mask]);
        break;
      }
    }
  }
  return rep;
}

class NotPolynomial : public std::runtime_error {
 public:
  explicit NotPolynomial(ZilberReport report)
      : std::runtime_error("property fails the polynomiality audit on this graph"), report_(std::move(report)) {}
  const ZilberReport& report() const { return report_; }

 private:
  ZilberReport report_;
};

// ---------------------------------------------------------------------------
// Exact-color counts and the polynomial.

struct CountProfile {
  std::string property;
  std::vector<BigInt> exact_counts;  // c(0..D)
};

namespace detail {

inline void require_polynomial(const Graph& g, const ColoringProperty& prop, const CountOptions& opt) {
  if (prop.zilber) return;
  auto rep = zilber_audit(g, prop, 4, opt);
  if (!rep.passed()) throw NotPolynomial(std::move(rep));
}

}  // namespace detail

inline CountProfile count_profile(const Graph& g, const ColoringProperty& prop, const CountOptions& opt = {}) {
  detail::require_polynomial(g, prop, opt);
  auto tally = detail::partition_tally(g, prop, opt);
  CountProfile out{prop.name, {}};
  for (std::size_t i = 0; i < tally.size(); ++i) {
    out.exact_counts.push_back(factorial(static_cast<unsigned>(i)) * BigInt(tally[i]));
  }
  return out;
}

/// chi_Phi(G; X) = sum_i c(i) C(X, i), binomial basis.
inline Poly chi_polynomial(const Graph& g, const ColoringProperty& prop, const CountOptions& opt = {}) {
  return Poly::from_integers(Basis::binomial, count_profile(g, prop, opt).exact_counts);
}

/// c_G(i): colorings in Phi using exactly the colors {1..i}. For properties
/// that fail the audit, counted directly as surjections onto [i].
inline BigInt exact_color_count(const Graph& g, const ColoringProperty& prop, int i, const CountOptions& opt = {}) {
  if (i < 0) throw InputError("color count must be >= 0");
  const int domain = domain_size(g, prop.domain);
  if (i > domain) return 0;
  bool partitions_valid = prop.zilber;
  if (!partitions_valid) partitions_valid = zilber_audit(g, prop, std::max(1, std::min(4, i + 1)), opt).passed();
  if (partitions_valid) {
    if (i == 0) {
      std::vector<int> none;
      return domain == 0 && prop.checker(g, none, 0) ? 1 : 0;
    }
    auto tally = detail::partition_tally(g, prop, opt, i);
    return factorial(static_cast<unsigned>(i)) * BigInt(tally[i]);
  }
  std::uint64_t n = detail::enumerate_maps<std::uint64_t>(
      g, prop, i, opt, 0,
      [i](const std::vector<int>& colors, std::uint64_t& acc) {
        std::uint64_t used = 0;
        for (int c : colors) used |= std::uint64_t{1} << (c - 1);
        if (std::popcount(used) == i) ++acc;
      },
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  return BigInt(n);
}

/// Colorings in Phi that use exactly k colors, counted as maps onto [k].
inline BigInt hat_chi(const Graph& g, const ColoringProperty& prop, int k, const CountOptions& opt = {}) {
  return exact_color_count(g, prop, k, opt);
}

// ---------------------------------------------------------------------------
// Special-case evaluators.

/// Harmonious count by edge bound, isolated-vertex stripping and enumeration
/// on the remaining core.
inline BigInt harmonious_fast(const Graph& g, int k, const CountOptions& opt = {}) {
  if (k < 0) throw InputError("palette size must be >= 0");
  const long long pairs = static_cast<long long>(k) * (k - 1) / 2;
  if (g.size() > pairs) return 0;
  auto [core, isolated] = strip_isolated(g);
  BigInt scale = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(isolated));
  if (scale == 0) return 0;
  return scale * brute_count_at(core, harmonious_property(), k, opt);
}

/// Convex colorings with at most two colors, from connectivity and cocircuits.
inline BigInt convex_fast(const Graph& g, int k, const CountOptions& opt = {}) {
  if (k < 0 || k > 2) throw InputError("convex_fast handles k in {0,1,2}");
  if (g.order() == 0) return 1;
  if (k == 0) return 0;
  const int comps = component_count(g);
  if (k == 1) return comps == 1 ? 1 : 0;
  if (comps >= 3) return 0;
  if (comps == 2) return 2;
  return 2 + 2 * BigInt(enumerate_cocircuits(g, false, opt.budget).total);
}

inline BigInt edge_chi(const Graph& g, int k, const CountOptions& opt = {}) {
  return brute_count_at(line_graph(g), proper_property(), k, opt);
}

inline Poly edge_chi_polynomial(const Graph& g, const CountOptions& opt = {}) {
  return chi_polynomial(line_graph(g), proper_property(), opt);
}

// ---------------------------------------------------------------------------
// Recovering a polynomial from one evaluation point and a graph family.

enum class Chain { join_Kn, box_join_H, disjoint_star };

inline std::string to_string(Chain c) {
  switch (c) {
    case Chain::join_Kn: return "join_Kn";
    case Chain::box_join_H: return "box_join_H";
    case Chain::disjoint_star: return "disjoint_star";
  }
  return "?";
}

inline Chain parse_chain(std::string_view s) {
  if (s == "join_Kn" || s == "join") return Chain::join_Kn;
  if (s == "box_join_H" || s == "box_join" || s == "box") return Chain::box_join_H;
  if (s == "disjoint_star" || s == "star") return Chain::disjoint_star;
  throw InputError("unknown construction '" + std::string(s) + "'");
}

struct ChainSample {
  int n = 0;
  Rational graph_value;  // count on the constructed graph
  Rational cofactor;
  Rational x;  // argument recovered for G
  Rational y;  // chi(G; x)
};

struct ChainResult {
  Poly poly;
  long long point = 0;
  std::vector<ChainSample> samples;
  int fallback_evaluations = 0;  // evaluations taken from a polynomial instead of enumeration
};

namespace detail {

inline Rational chain_value(const Graph& h, const ColoringProperty& prop, long long k, const CountOptions& opt,
                            int& fallbacks) {
  if (k < 0) throw InputError("chain evaluation at negative palette");
  try {
    return Rational(brute_count_at(h, prop, static_cast<int>(k), opt));
  } catch (const BudgetExceeded&) {
    ++fallbacks;
    return chi_polynomial(h, prop, opt)(Rational(k));
  }
}

}  // namespace detail

/// Recovers chi_Phi(G; X) by evaluating a family of constructed graphs at one
/// point, dividing out the known cofactor and interpolating.
///  join_Kn       proper:  chi(G join K_n; a) = a_(n) chi(G; a-n)
///  box_join_H    DU(H):   iterated Box_{H,0}, same falling-factorial cofactor
///  disjoint_star proper:  chi(G + K_{1,n}; a-e-n) = (a-e-n)(a-e-n-1)^n chi(G; a-e-n)
inline ChainResult interpolation_chain(const Graph& g, const ColoringProperty& prop, Chain chain,
                                       std::optional<int> max_n = std::nullopt,
                                       std::optional<long long> point = std::nullopt, const CountOptions& opt = {}) {
  const int deg = domain_size(g, prop.domain);
  const int top = max_n.value_or(deg);
  if (top < deg) throw InputError("chain needs at least deg+1 = " + std::to_string(deg + 1) + " points");
  if (chain == Chain::join_Kn || chain == Chain::disjoint_star) {
    if (prop.name != "proper") throw InputError(to_string(chain) + " applies to the proper property");
    if (!g.is_simple()) throw InputError("chain constructions need a simple graph");
  }
  if (chain == Chain::box_join_H && !prop.pattern) throw InputError("box_join_H needs a DU(H) property");
  const long long e = g.size();

  auto cofactors_ok = [&](long long a) {
    for (int n = 0; n <= top; ++n) {
      if (chain == Chain::disjoint_star) {
        long long y = a - e - n;
        if (y < 0 || y == 0 || (n > 0 && y == 1)) return false;
      } else if (a < n) {
        return false;
      }
    }
    return true;
  };
  long long a = point.value_or(deg + 1);
  if (point) {
    if (!cofactors_ok(a)) throw InputError("a cofactor vanishes at the requested point " + std::to_string(a));
  } else {
    while (!cofactors_ok(a)) ++a;
  }

  ChainResult out;
  out.point = a;
  std::vector<std::pair<Rational, Rational>> pts;
  Graph current = g;
  for (int n = 0; n <= top; ++n) {
    ChainSample s;
    s.n = n;
    if (chain == Chain::join_Kn) {
      Graph h = join(g, complete_graph(n));
      s.graph_value = detail::chain_value(h, prop, a, opt, out.fallback_evaluations);
      s.cofactor = falling_factorial(n)(Rational(a));
      s.x = Rational(a - n);
    } else if (chain == Chain::box_join_H) {
      if (n > 0) current = box_join(current, *prop.pattern, 0);
      s.graph_value = detail::chain_value(current, prop, a, opt, out.fallback_evaluations);
      s.cofactor = falling_factorial(n)(Rational(a));
      s.x = Rational(a - n);
    } else {
      Graph h = disjoint_union(g, star_graph(n));
      long long arg = a - e - n;
      s.graph_value = detail::chain_value(h, prop, arg, opt, out.fallback_evaluations);
      Rational y = arg;
      s.cofactor = y;
      for (int j = 0; j < n; ++j) s.cofactor *= y - 1;
      s.x = Rational(arg);
    }
    s.y = s.graph_value / s.cofactor;
    pts.emplace_back(s.x, s.y);
    out.samples.push_back(s);
  }
  out.poly = lagrange_interpolate(pts).to_binomial();
  return out;
}

}  // namespace chromatic
