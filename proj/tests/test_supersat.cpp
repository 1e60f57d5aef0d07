#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace rhc;

namespace {

SetFamily all_sets_of_size(unsigned n, unsigned k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (set_size(m) == k) out.push_back(m);
  return SetFamily(n, out);
}

}  // namespace

TEST(Kneser, Examples) {
  auto petersen = kneser_graph(5, 2);
  EXPECT_EQ(petersen.vertex_count(), 10u);
  EXPECT_EQ(petersen.edge_count(), 15u);
  EXPECT_EQ(regular_degree(petersen), 3u);
  EXPECT_EQ(kneser_graph(4, 2).edge_count(), 3u);
  auto single = kneser_graph(2, 1);
  ASSERT_EQ(single.edge_count(), 1u);
  EXPECT_TRUE(single.has_edge(0, 1));
  EXPECT_THROW(kneser_graph(3, 2), std::invalid_argument);
  EXPECT_THROW(kneser_graph(4, 0), std::invalid_argument);

  auto labels = kneser_labels(5, 2);
  ASSERT_EQ(labels.size(), 10u);
  for (const auto& e : petersen.edges()) EXPECT_EQ(labels[e.u] & labels[e.v], 0u);
}

TEST(Kneser, StatsMatchTheGraph) {
  for (unsigned m = 2; m <= 12; ++m)
    for (unsigned k = 1; 2 * k <= m; ++k) {
      if (binomial(m, k) > 300) continue;
      auto g = kneser_graph(m, k);
      auto s = kneser_stats(m, k);
      EXPECT_EQ(g.vertex_count(), s.N);
      EXPECT_EQ(regular_degree(g), s.D);
    }
}

TEST(Spectrum, KnownMinimumEigenvalues) {
  EXPECT_NEAR(min_eigenvalue(kneser_graph(5, 2)), -2.0, 1e-9);
  EXPECT_NEAR(min_eigenvalue(kneser_graph(4, 2)), -1.0, 1e-9);
  for (unsigned d = 1; d <= 12; ++d) EXPECT_NEAR(min_eigenvalue(kneser_graph(d + 1, 1)), -1.0, 1e-9) << d;
  // C5
  EXPECT_NEAR(min_eigenvalue(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})), 2 * std::cos(4 * M_PI / 5), 1e-9);
}

TEST(Spectrum, FormulaMatchesEigensolver) {
  for (unsigned m = 2; m <= 40; ++m)
    for (unsigned k = 1; 2 * k <= m; ++k) {
      if (binomial(m, k) > 300) continue;
      EXPECT_NEAR(min_eigenvalue(kneser_graph(m, k)), kneser_stats(m, k).lambda_formula, 1e-6) << m << ' ' << k;
    }
}

TEST(Mixing, BoundValues) {
  EXPECT_DOUBLE_EQ(eml_lower_bound(3, 10, -2, 5), 1.25);
  EXPECT_DOUBLE_EQ(eml_lower_bound(3, 10, -2, 10), 15.0);
  EXPECT_DOUBLE_EQ(eml_lower_bound(3, 10, -2, 0), 0.0);
  EXPECT_THROW(eml_lower_bound(3, 10, -2, 11), std::invalid_argument);
}

TEST(Mixing, ExhaustiveOnKneserGraphs) {
  for (auto [m, k] : {std::pair{5U, 2U}, {4U, 2U}, {6U, 2U}, {6U, 3U}, {7U, 1U}}) {
    auto g = kneser_graph(m, k);
    auto s = kneser_stats(m, k);
    auto check = verify_eml_exhaustive(g, static_cast<double>(s.D), s.lambda_formula);
    EXPECT_TRUE(check.holds) << m << ' ' << k << " slack " << check.worst_slack;
    EXPECT_EQ(check.subsets_checked, std::size_t{1} << g.vertex_count());
    EXPECT_GE(check.worst_slack, -eml_tolerance);
  }
}

TEST(Mixing, FailsWithAWrongEigenvalue) {
  // pretending lambda is 0 overstates the bound on an independent set
  auto g = kneser_graph(5, 2);
  EXPECT_FALSE(verify_eml_exhaustive(g, 3, 0).holds);
}

TEST(Mixing, RandomRegularGraphs) {
  SeededRng rng(5);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 10 + 2 * rng.below(20);
    const std::size_t d = 2 + rng.below(5);
    auto g = random_regular_graph(n, d, rng.next());
    ASSERT_EQ(regular_degree(g), d);
    ASSERT_TRUE(g.is_simple());
    auto check = verify_eml_sampled(g, static_cast<double>(d), min_eigenvalue(g), 400, rng.next());
    EXPECT_TRUE(check.holds) << n << ' ' << d;
    if (n <= max_exhaustive_eml_vertices) {
      EXPECT_TRUE(verify_eml_exhaustive(g, static_cast<double>(d), min_eigenvalue(g)).holds);
    }
  }
  EXPECT_THROW(random_regular_graph(5, 3, 1), std::invalid_argument);
}

TEST(Mixing, KneserInducedBound) {
  EXPECT_NEAR(kneser_induced_bound(5, 2, 10), 13.5, 1e-9);
  EXPECT_NEAR(kneser_induced_bound(4, 2, 6), 2.5, 1e-9);
  EXPECT_THROW(kneser_induced_bound(5, 2, 4), std::domain_error);
  // the whole graph has at least this many edges
  for (unsigned m = 4; m <= 9; ++m)
    for (unsigned k = 1; 2 * k <= m; ++k) {
      auto s = kneser_stats(m, k);
      if (binomial(m - 1, k - 1) >= s.N) continue;
      auto g = kneser_graph(m, k);
      EXPECT_LE(kneser_induced_bound(m, k, s.N), static_cast<double>(g.edge_count()) + 1e-9) << m << ' ' << k;
    }
}

TEST(UnionPairGraph, PowerSetGivesKneserGraph) {
  const unsigned n = 6;
  std::vector<Mask> all(1U << n);
  std::iota(all.begin(), all.end(), Mask{0});
  SetFamily power(n, all);
  for (Mask a : {Mask{0b111111}, Mask{0b101101}, Mask{0b011110}})
    for (unsigned k = 1; 2 * k <= set_size(a); ++k) {
      auto pg = union_pair_graph(power, a, k);
      auto kg = kneser_graph(set_size(a), k);
      ASSERT_EQ(pg.graph.vertex_count(), kg.vertex_count());
      ASSERT_EQ(pg.graph.edge_count(), kg.edge_count());
      // map B to the Kneser index of its complement inside A
      std::vector<unsigned> position(n, 0);
      unsigned next = 0;
      for (unsigned e = 0; e < n; ++e)
        if ((a >> e) & 1U) position[e] = next++;
      const auto subsets = kneser_subsets(set_size(a), k);
      std::map<std::vector<unsigned>, Vertex> index;
      for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<Vertex>(i);
      std::vector<Vertex> to_kneser;
      for (auto b : pg.labels) {
        std::vector<unsigned> missing;
        for (unsigned e = 0; e < n; ++e)
          if (((a & ~b) >> e) & 1U) missing.push_back(position[e]);
        to_kneser.push_back(index.at(missing));
      }
      for (const auto& e : pg.graph.edges()) EXPECT_TRUE(kg.has_edge(to_kneser[e.u], to_kneser[e.v]));
    }
}

TEST(UnionPairGraph, OnlyMembersAppear) {
  SetFamily f(3, {set_of({1}), set_of({2}), set_of({1, 2}), set_of({3})});
  auto g = union_pair_graph(f, set_of({1, 2}), 1);
  EXPECT_EQ(g.labels, (std::vector<std::uint64_t>{set_of({1}), set_of({2})}));
  EXPECT_EQ(g.graph.edge_count(), 1u);
  EXPECT_EQ(union_pair_graph(f, set_of({1, 2, 3}), 1).graph.vertex_count(), 1u);
}

TEST(Embedding, Examples) {
  Graph c8(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}});
  auto path = embed_bounded_subgraph(c8, 2);
  EXPECT_EQ(path, Graph(8, {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}));

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto star = embed_bounded_subgraph(k4, 1);
  ASSERT_EQ(star.edge_count(), 1u);
  EXPECT_TRUE(star.has_edge(0, 1));

  Graph k15(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  EXPECT_THROW(embed_bounded_subgraph(k15, 1), EmbeddingError);
  EXPECT_THROW(embed_bounded_subgraph(k4, 0), EmbeddingError);
}

TEST(Embedding, TopDegreeTiesByIdentifier) {
  Graph g(5, {{0, 4}, {1, 4}, {2, 3}, {1, 3}});
  EXPECT_EQ(top_degree_vertices(g, 3), (std::vector<Vertex>{1, 3, 4}));
}

TEST(Embedding, RandomGraphs) {
  SeededRng rng(31);
  int embedded = 0, rejected = 0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 6 + rng.below(30);
    auto g = oracle::random_graph(n, 0.05 + 0.6 * rng.uniform(), rng);
    const std::size_t m = 1 + rng.below(5);
    if (n < m) continue;
    const auto top = top_degree_vertices(g, m);
    const bool enough = g.without(VertexSet::from(n, top)).edge_count() >= m * m;
    if (!enough) {
      EXPECT_THROW(embed_bounded_subgraph(g, m), EmbeddingError);
      ++rejected;
      continue;
    }
    auto h = embed_bounded_subgraph(g, m);
    ++embedded;
    EXPECT_LE(h.max_degree(), m);
    EXPECT_GE(2 * h.edge_count(), m * m);
    EXPECT_TRUE(h.is_simple());
    for (const auto& e : h.edges()) EXPECT_TRUE(g.has_edge(e.u, e.v));
  }
  EXPECT_GT(embedded, 100);
  EXPECT_GT(rejected, 10);
}

TEST(Permutations, Classification) {
  SetFamily f(2, {0, set_of({1}), set_of({1, 2})});
  const std::vector<unsigned> id{0, 1}, swapped{1, 0};
  EXPECT_EQ(classify_permutation(id, 0, f), PairClass::good);
  EXPECT_EQ(classify_permutation(id, set_of({1}), f), PairClass::bad);
  EXPECT_EQ(classify_permutation(swapped, set_of({1}), f), PairClass::not_a_pair);
  EXPECT_EQ(classify_permutation(id, set_of({1, 2}), f), PairClass::bad);
  EXPECT_EQ(classify_permutation(id, set_of({1, 2}), f, PairRules{true, 2}), PairClass::horrible);
  EXPECT_EQ(classify_permutation(swapped, set_of({1, 2}), f, PairRules{true, 2}), PairClass::horrible);
  EXPECT_EQ(classify_permutation(swapped, set_of({1, 2}), f, PairRules{false, 2}), PairClass::good);
  EXPECT_STREQ(to_string(PairClass::not_a_pair), "not-a-pair");

  EXPECT_THROW(classify_permutation(id, set_of({2}), f), std::invalid_argument);
  const std::vector<unsigned> repeated{0, 0};
  EXPECT_THROW(classify_permutation(repeated, 0, f), std::invalid_argument);
}

TEST(Permutations, TightCase) {
  auto audit = audit_counting_identity(all_sets_of_size(3, 2));
  EXPECT_EQ(audit.permutations, 6u);
  EXPECT_EQ(audit.good_total, 6u);
  EXPECT_EQ(audit.max_good_per_permutation, 1u);
  EXPECT_TRUE(audit.passed());
}

TEST(Permutations, AuditAgainstRecount) {
  SeededRng rng(17);
  for (int round = 0; round < 200; ++round) {
    const unsigned n = static_cast<unsigned>(rng.below(6));
    std::vector<Mask> members;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (rng.chance(0.35)) members.push_back(m);
    SetFamily f(n, members);
    AuditOptions options;
    options.threads = 1 + static_cast<unsigned>(rng.below(4));
    auto audit = audit_counting_identity(f, options);
    EXPECT_TRUE(audit.passed()) << round;
    EXPECT_EQ(audit.good_total, oracle::good_pairs_brute(f, true)) << round;
    EXPECT_EQ(audit.permutations, factorial(n));
  }
}

TEST(Permutations, EmptyPrefixOffCanBreakUniqueness) {
  SetFamily f(2, {0, set_of({1})});
  AuditOptions options;
  options.rules.include_empty = false;
  auto audit = audit_counting_identity(f, options);
  EXPECT_FALSE(audit.at_most_one_good);
  EXPECT_EQ(audit.good_total, oracle::good_pairs_brute(f, false));
  EXPECT_TRUE(audit_counting_identity(f).passed());
}

TEST(Permutations, HorriblePrefixes) {
  SetFamily f(4, {set_of({1, 2}), set_of({1, 2, 3, 4})});
  AuditOptions options;
  options.rules.horrible_gap = 2;
  options.delta = 1;
  auto audit = audit_counting_identity(f, options);
  ASSERT_EQ(audit.sets.size(), 2u);
  const auto& small = audit.sets[0];
  const auto& full = audit.sets[1];
  EXPECT_EQ(full.horrible, 4u);
  EXPECT_EQ(full.horrible_prefixes, 2u);
  EXPECT_NEAR(*full.alpha, -1.0 / 3, 1e-12);
  EXPECT_EQ(small.horrible_prefixes, 0u);
  EXPECT_DOUBLE_EQ(*small.alpha, -1.0);
  EXPECT_TRUE(audit.alpha_at_least_minus_one);

  options.delta = 2;
  EXPECT_THROW(audit_counting_identity(f, options), std::invalid_argument);
  EXPECT_THROW(audit_counting_identity(SetFamily(9, {0})), std::out_of_range);
}

TEST(Supersat, Config) {
  auto c = supersat_config(make_rational(1, 100), 16);
  EXPECT_DOUBLE_EQ(c.delta, 0.0);  // 8 - sqrt(16 * 4)
  EXPECT_DOUBLE_EQ(c.delta1, 4.0);
  EXPECT_DOUBLE_EQ(c.delta2, 12.0);
  EXPECT_EQ(c.s, 16);
  EXPECT_EQ(c.t * Rational(boost::multiprecision::pow(BigInt(10), 44)), 256);
  EXPECT_THROW(supersat_config(make_rational(1, 100), 1), std::invalid_argument);
}

TEST(Supersat, EligibilityExamples) {
  SetFamily p2(2, {0, 1, 2, 3});
  auto w = eligibility_from_supersat(p2, make_rational(1, 10), Rational(1), Rational(1));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->set, 3u);
  EXPECT_EQ(w->edge_count, 1u);

  EXPECT_FALSE(eligibility_from_supersat(middle_layer(6), make_rational(1, 10)).has_value());

  for (unsigned d = 3; d <= 7; ++d) {
    const Mask a = (Mask{1} << d) - 1;
    std::vector<Mask> members{a};
    for (unsigned e = 0; e < d; ++e) members.push_back(a & ~(Mask{1} << e));
    SetFamily f(d, members);
    auto found = eligibility_from_supersat(f, make_rational(1, 10), Rational(d - 1), Rational(d * (d - 1) / 2));
    ASSERT_TRUE(found.has_value()) << d;
    EXPECT_EQ(found->set, a);
    EXPECT_EQ(found->edge_count, d * (d - 1) / 2);
    EXPECT_EQ(found->max_degree, d - 1);
    EXPECT_FALSE(eligibility_from_supersat(f, make_rational(1, 10), Rational(d - 2), Rational(d * (d - 1) / 2)).has_value());
  }
}

TEST(Supersat, LinkGraphMatchesHypergraphLink) {
  SeededRng rng(3);
  const unsigned n = 4;
  auto h = build_union_hypergraph(n);
  for (int round = 0; round < 100; ++round) {
    std::vector<Mask> members;
    for (Mask m = 0; m < 16; ++m)
      if (rng.chance(0.5)) members.push_back(m);
    SetFamily f(n, members);
    const auto avail = family_vertices(f);
    for (Mask a : f) {
      auto mine = union_link_graph(f, a);
      auto theirs = head_link_graph(h, a, avail);
      EXPECT_EQ(mine.graph.edge_count(), theirs.edge_count());
      for (const auto& e : mine.graph.edges()) EXPECT_TRUE(theirs.has_edge(mine.labels[e.u], mine.labels[e.v]));
    }
  }
}
