#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace chromatic;
using testutil::g;

namespace {

std::vector<Graph> small_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n)
    for (auto& h : unlabeled_graphs(n)) out.push_back(h);
  return out;
}

Poly from_monomial(const std::vector<long long>& c) {
  std::vector<Rational> r;
  for (auto v : c) r.emplace_back(v);
  return Poly(Basis::monomial, r);
}

Graph random_connected(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 3 == 0 && std::find(edges.begin(), edges.end(), std::pair{u, v}) == edges.end())
        edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace

TEST(Counting, ReferenceValues) {
  EXPECT_EQ(chi_polynomial(complete_graph(3), proper_property()), from_monomial({0, 2, -3, 1}));
  EXPECT_EQ(chi_polynomial(edgeless_graph(2), trivial_property()), from_monomial({0, 0, 1}));
  EXPECT_EQ(chi_polynomial(complete_graph(2), harmonious_property()).coeffs(), (std::vector<Rational>{0, 0, 2}));
  EXPECT_EQ(brute_count_at(cycle_graph(7), proper_property(), 3), 126);
  EXPECT_EQ(brute_count_at(path_graph(3), convex_property(), 2), 6);
  EXPECT_EQ(harmonious_fast(disjoint_union(complete_graph(2), edgeless_graph(5)), 3), 1458);
  EXPECT_EQ(brute_count_at(Graph(), proper_property(), 0), 1);
  EXPECT_EQ(brute_count_at(complete_graph(1), proper_property(), 0), 0);
}

TEST(Counting, ProperMatchesDeletionContraction) {
  for (const auto& h : small_graphs(6)) {
    auto dc = oracle::chromatic_dc(testutil::to_oracle(h));
    EXPECT_EQ(chi_polynomial(h, proper_property()), from_monomial(dc)) << fingerprint(h);
  }
}

// eval(chi_polynomial) against the oracle counter, k <= 4.
TEST(Counting, PolynomialMatchesOracleEverywhere) {
  std::mt19937_64 rng(5);
  for (const auto& prop : named_properties()) {
    for (int i = 0; i < 12; ++i) {
      Graph h = testutil::random_graph(i % 6, rng);
      if (prop.domain == Domain::edge && h.size() > 7) continue;
      Poly p = chi_polynomial(h, prop);
      for (int k = 0; k <= 4; ++k)
        EXPECT_EQ(p(Rational(k)), Rational(testutil::oracle_count(h, prop.name, k))) << prop.name << " k=" << k;
    }
  }
}

TEST(Counting, DegreeBound) {
  std::mt19937_64 rng(6);
  for (const auto& prop : named_properties()) {
    for (int i = 0; i < 10; ++i) {
      Graph h = testutil::random_graph(1 + i % 5, rng);
      auto profile = count_profile(h, prop);
      const int domain = domain_size(h, prop.domain);
      Poly p = Poly::from_integers(Basis::binomial, profile.exact_counts);
      EXPECT_LE(p.degree(), domain);
      const bool all_distinct = static_cast<int>(profile.exact_counts.size()) == domain + 1 &&
                                profile.exact_counts.back() > 0;
      EXPECT_EQ(p.degree() == domain, all_distinct) << prop.name;
    }
  }
}

TEST(Counting, ZilberPropertiesPassAudit) {
  const std::vector<ColoringProperty> props{proper_property(),   harmonious_property(),
                                            convex_property(),   mcc_property(2),
                                            du_property(complete_graph(2), "K2"), hfree_property(path_graph(3), "P3")};
  for (const auto& prop : props)
    for (const auto& h : small_graphs(4)) EXPECT_TRUE(zilber_audit(h, prop, 3).passed()) << prop.name;
}

TEST(Counting, CounterexamplePropertiesFailAudit) {
  auto phi1 = zilber_audit(complete_graph(3), surjective_proper_property(), 4);
  EXPECT_TRUE(phi1.condition_a);
  EXPECT_FALSE(phi1.condition_b);
  EXPECT_EQ(phi1.by_set[3][0b111], 6);
  EXPECT_EQ(phi1.by_set[4][0b111], 0);
  auto phi2 = zilber_audit(path_graph(3), degree_forced_property(), 3);
  EXPECT_FALSE(phi2.condition_a);
  EXPECT_THROW(chi_polynomial(complete_graph(3), surjective_proper_property()), NotPolynomial);
  try {
    chi_polynomial(path_graph(3), degree_forced_property());
    FAIL();
  } catch (const NotPolynomial& e) {
    EXPECT_FALSE(e.report().condition_a);
  }
  EXPECT_THROW(zilber_audit(path_graph(3), proper_property(), 0), InputError);
}

TEST(Counting, ExactColorCountFallsBackToSurjections) {
  // Surjective-proper colorings of K3 onto exactly [3]: all 6 bijections.
  EXPECT_EQ(exact_color_count(complete_graph(3), surjective_proper_property(), 3), 6);
  EXPECT_EQ(exact_color_count(complete_graph(3), proper_property(), 3), 6);
  EXPECT_EQ(exact_color_count(complete_graph(3), proper_property(), 4), 0);
  EXPECT_THROW(exact_color_count(complete_graph(3), proper_property(), -1), InputError);
}

TEST(Counting, HatChiSummation) {
  std::mt19937_64 rng(8);
  for (const auto& prop : {proper_property(), convex_property(), mcc_property(2), acyclic_property()}) {
    for (int i = 0; i < 8; ++i) {
      Graph h = testutil::random_graph(1 + i % 5, rng);
      for (int k = 0; k <= 4; ++k) {
        BigInt sum = 0;
        for (int j = 0; j <= k; ++j)
          sum += boost::multiprecision::numerator(binomial(Rational(k), j)) * hat_chi(h, prop, j);
        EXPECT_EQ(sum, brute_count_at(h, prop, k)) << prop.name;
      }
    }
  }
}

TEST(Counting, HarmoniousFastPath) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    Graph core = testutil::random_graph(2 + i % 5, rng);
    Graph h = disjoint_union(core, edgeless_graph(i % 6));
    for (int k = 0; k <= 3; ++k)
      EXPECT_EQ(harmonious_fast(h, k), brute_count_at(h, harmonious_property(), k)) << fingerprint(h);
  }
  EXPECT_THROW(harmonious_fast(complete_graph(2), -1), InputError);
}

TEST(Counting, ConvexFastPath) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 60; ++i) {
    Graph h = random_connected(1 + i % 8, rng);
    EXPECT_EQ(convex_fast(h, 2), brute_count_at(h, convex_property(), 2)) << fingerprint(h);
  }
  for (const auto& h : small_graphs(4))
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(convex_fast(h, k), brute_count_at(h, convex_property(), k));
  EXPECT_THROW(convex_fast(path_graph(3), 3), InputError);
}

TEST(Counting, StructuralIdentities) {
  for (const auto& h : small_graphs(4)) {
    Poly chi = chi_polynomial(h, proper_property());
    EXPECT_EQ(chi_polynomial(h, mcc_property(1)), chi);
    EXPECT_EQ(chi_polynomial(h, timp_property(0)), chi);
    EXPECT_EQ(chi_polynomial(h, timp_property(1)), chi_polynomial(h, mcc_property(2)));
    EXPECT_EQ(edge_chi_polynomial(h), chi_polynomial(h, edge_proper_property()));
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(edge_chi(h, k), brute_count_at(h, edge_proper_property(), k));
  }
}

TEST(Counting, Multiplicativity) {
  auto graphs = small_graphs(3);
  for (const auto& prop : {proper_property(), du_property(complete_graph(2), "K2"), mcc_property(2)})
    for (const auto& a : graphs)
      for (const auto& b : graphs)
        EXPECT_EQ(chi_polynomial(disjoint_union(a, b), prop), chi_polynomial(a, prop) * chi_polynomial(b, prop))
            << prop.name;
}

// Measured, not assumed: neither convex nor harmonious counts factor over
// disjoint unions.
TEST(Counting, NonMultiplicativeProperties) {
  Graph k1 = complete_graph(1);
  auto convex = convex_property();
  EXPECT_NE(chi_polynomial(disjoint_union(k1, k1), convex), chi_polynomial(k1, convex) * chi_polynomial(k1, convex));
  EXPECT_EQ(brute_count_at(disjoint_union(k1, k1), convex, 2), 2);
  Graph k2 = complete_graph(2);
  auto harm = harmonious_property();
  EXPECT_NE(chi_polynomial(disjoint_union(k2, k2), harm), chi_polynomial(k2, harm) * chi_polynomial(k2, harm));
}

TEST(Counting, DuVanishesOffDivisibility) {
  for (const auto& h : small_graphs(5)) {
    if (h.order() % 2 == 1) EXPECT_TRUE(chi_polynomial(h, du_property(complete_graph(2), "K2")).is_zero());
    if (h.order() % 3 != 0) EXPECT_TRUE(chi_polynomial(h, du_property(complete_graph(3), "K3")).is_zero());
  }
}

// hat_chi(G, DU(K_a), n/a) = (n/a)! times the partitions of V into a-cliques.
TEST(Counting, CliqueCoverRelation) {
  auto clique_partitions = [](const Graph& h, int a) {
    long long total = 0;
    std::function<void(VertexMask)> rec = [&](VertexMask left) {
      if (!left) {
        ++total;
        return;
      }
      const int first = lowest_vertex(left);
      for (VertexMask s = left; s; s = (s - 1) & left) {
        if (!((s >> first) & 1) || popcount(s) != a) continue;
        if (induced_edge_count(h, s) != a * (a - 1) / 2) continue;
        rec(left & ~s);
      }
    };
    rec(h.all_vertices());
    return total;
  };
  for (int a : {2, 3}) {
    for (const auto& h : small_graphs(6)) {
      if (h.order() == 0 || h.order() % a) continue;
      const int blocks = h.order() / a;
      EXPECT_EQ(hat_chi(h, du_property(complete_graph(a), "K" + std::to_string(a)), blocks),
                factorial(blocks) * clique_partitions(h, a));
    }
  }
}

TEST(Counting, BudgetIsEnforced) {
  CountOptions tight{10'000, 1};
  EXPECT_THROW(brute_count_at(edgeless_graph(14), trivial_property(), 3, tight), BudgetExceeded);
  EXPECT_THROW(brute_count_at(complete_graph(9), proper_property(), 9, tight), BudgetExceeded);
  EXPECT_THROW(chi_polynomial(edgeless_graph(12), trivial_property(), tight), BudgetExceeded);
  EXPECT_EQ(brute_count_at(edgeless_graph(8), trivial_property(), 3, tight), 6561);
}

TEST(Counting, WorkerCountDoesNotChangeResults) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 6; ++i) {
    Graph h = testutil::random_graph(6 + i % 3, rng);
    for (const auto& prop : {proper_property(), convex_property(), acyclic_property()}) {
      const BigInt base = brute_count_at(h, prop, 4, {100'000'000, 1});
      const Poly poly = chi_polynomial(h, prop, {100'000'000, 1});
      const auto audit = zilber_audit(h, prop, 3, {100'000'000, 1});
      for (int workers : {2, 3, 8}) {
        CountOptions opt{100'000'000, workers};
        EXPECT_EQ(brute_count_at(h, prop, 4, opt), base);
        EXPECT_EQ(chi_polynomial(h, prop, opt), poly);
        EXPECT_EQ(zilber_audit(h, prop, 3, opt).by_set, audit.by_set);
      }
    }
  }
}

TEST(Counting, InterpolationChains) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 8; ++i) {
    Graph h = testutil::random_graph(1 + i % 4, rng);
    Poly chi = chi_polynomial(h, proper_property());
    EXPECT_EQ(interpolation_chain(h, proper_property(), Chain::join_Kn).poly, chi) << fingerprint(h);
    EXPECT_EQ(interpolation_chain(h, proper_property(), Chain::disjoint_star).poly, chi) << fingerprint(h);
  }
  auto du = du_property(complete_graph(2), "K2");
  for (const auto& h : small_graphs(4))
    EXPECT_EQ(interpolation_chain(h, du, Chain::box_join_H).poly, chi_polynomial(h, du)) << fingerprint(h);
}

TEST(Counting, InterpolationChainDetails) {
  auto r = interpolation_chain(path_graph(3), proper_property(), Chain::join_Kn);
  EXPECT_EQ(r.point, 4);
  EXPECT_EQ(r.samples.size(), 4u);
  EXPECT_EQ(r.samples[2].cofactor, 12);
  auto star = interpolation_chain(path_graph(3), proper_property(), Chain::disjoint_star);
  for (const auto& s : star.samples) EXPECT_GE(s.x, 2);
  auto box = interpolation_chain(complete_graph(3), du_property(complete_graph(3), "K3"), Chain::box_join_H);
  EXPECT_EQ(box.poly.to_monomial(), from_monomial({0, 1}));
  EXPECT_THROW(interpolation_chain(path_graph(3), proper_property(), Chain::join_Kn, 1), InputError);
  EXPECT_THROW(interpolation_chain(path_graph(3), proper_property(), Chain::join_Kn, std::nullopt, 2), InputError);
  EXPECT_THROW(interpolation_chain(path_graph(3), convex_property(), Chain::join_Kn), InputError);
  EXPECT_THROW(interpolation_chain(path_graph(3), proper_property(), Chain::box_join_H), InputError);
  EXPECT_EQ(parse_chain("star"), Chain::disjoint_star);
  EXPECT_THROW(parse_chain("spiral"), InputError);
}
