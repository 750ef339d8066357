#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "wclust/analysis.hpp"
#include "wclust/compare.hpp"

namespace wclust {
namespace {

WeightedDigraph pvalue_graph() {
  EdgeList l;
  std::vector<double> p;
  for (NodeId i = 0; i < 10; ++i) {
    l.edges.push_back({i, static_cast<NodeId>((i + 1) % 10), 1.0 + i});
    p.push_back(i < 5 ? 0.001 : 0.5);
  }
  l.edge_attrs["pvalue"] = p;
  return build_graph(l, true);
}

TEST(ThresholdTest, Examples) {
  auto g = pvalue_graph();
  auto all = threshold(g, "pvalue", std::numeric_limits<double>::infinity());
  EXPECT_EQ(all.n_edges(), 10u);
  for (std::size_t e = 0; e < 10; ++e) EXPECT_EQ(all.edges()[e].weight, g.edges()[e].weight);
  auto kept = threshold(g, "pvalue", 0.01);
  EXPECT_EQ(kept.n_edges(), 5u);
  for (const auto& e : kept.edges()) EXPECT_LT(e.source, 5u);
  EXPECT_EQ(kept.normalization_scale(), 10.0);
  EXPECT_EQ(threshold(g, "pvalue", 0.01, true).normalization_scale(), 5.0);
  EXPECT_THROW(threshold(g, "qvalue", 0.01), InputError);
}

TEST(ThresholdTest, PipelineConsistency) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto base = testing::random_graph(seed, 30, 0.25, seed % 2 == 0);
    std::vector<double> p;
    Rng r(seed + 100);
    for (std::size_t e = 0; e < base.n_edges(); ++e) p.push_back(r.uniform());
    auto el = base.to_edge_list();
    el.edge_attrs["pvalue"] = p;
    auto g = build_graph(el, base.directed());

    auto sub = threshold(g, "pvalue", 0.4);

    EdgeList hand;
    hand.n_nodes = g.n_nodes();
    double scale = 0.0;
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
      scale = std::max(scale, g.edges()[e].weight);
      if (p[e] < 0.4) hand.edges.push_back(g.edges()[e]);
    }
    hand.pinned_scale = scale;
    auto expected = build_graph(hand, g.directed());

    const Mode mode = natural_mode(g);
    for (Method m : g.directed() ? std::vector<Method>(std::begin(kDirectedMethods),
                                                       std::end(kDirectedMethods))
                                 : std::vector<Method>(std::begin(kAllMethods),
                                                       std::end(kAllMethods)))
      EXPECT_EQ(coefficients(sub, m, mode), coefficients(expected, m, mode));
  }
}

OptionalValues uniform_values(std::uint64_t seed, std::size_t n) {
  Rng r(seed);
  OptionalValues v(n);
  for (auto& x : v) x = r.uniform();
  return v;
}

TEST(CompareTest, IdenticalVectors) {
  auto a = uniform_values(1, 200);
  auto r = compare(a, a);
  EXPECT_NEAR(r.r_squared, 1.0, 1e-12);
  EXPECT_EQ(r.n_pairs, 200u);
  for (int k : kTopKPercents) EXPECT_EQ(r.topk_retention.at(k), 1.0);
}

TEST(CompareTest, IndependentVectors) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = compare(uniform_values(2 * seed, 1000), uniform_values(2 * seed + 1, 1000));
    EXPECT_LT(r.r_squared, 0.05);
    EXPECT_GE(r.r_squared, 0.0);
  }
}

TEST(CompareTest, RSquaredMatchesClosedForm) {
  OptionalValues a = {1.0, 2.0, 3.0, 4.0, std::nullopt};
  OptionalValues b = {2.0, 1.0, 4.0, 3.0, 7.0};
  // r = 0.6 for these four pairs
  auto r = compare(a, b);
  EXPECT_EQ(r.n_pairs, 4u);
  EXPECT_NEAR(r.r_squared, 0.36, 1e-12);
  EXPECT_NEAR(compare(b, a).r_squared, 0.36, 1e-12);
}

TEST(CompareTest, SymmetricRSquaredAsymmetricTopK) {
  // a ranks nodes 0..9 descending by index; b agrees on the first five and
  // puts ten extra nodes that a leaves undefined ahead of everything.
  OptionalValues a(20), b(20);
  for (int i = 0; i < 10; ++i) {
    a[i] = 10.0 - i;
    b[i] = 10.0 - i;
  }
  for (int i = 10; i < 20; ++i) b[i] = 100.0 + i;
  auto ab = compare(a, b), ba = compare(b, a);
  EXPECT_EQ(ab.r_squared, ba.r_squared);
  EXPECT_EQ(ab.topk_retention.at(25), 1.0);
  EXPECT_LT(ba.topk_retention.at(25), 1.0);
  EXPECT_EQ(ab.topk_retention.at(100), 1.0);
  EXPECT_EQ(ba.topk_retention.at(100), 1.0);
}

TEST(CompareTest, SpearmanAndErrors) {
  OptionalValues a = {1.0, 2.0, 3.0, 4.0, 5.0};
  OptionalValues b = {1.0, 8.0, 27.0, 64.0, 125.0};
  EXPECT_LT(compare(a, b).r_squared, 1.0);
  EXPECT_NEAR(compare(a, b, {true}).r_squared, 1.0, 1e-12);
  EXPECT_THROW(compare({1.0, 2.0, std::nullopt}, {1.0, 2.0, 3.0}), InputError);
  EXPECT_THROW(compare({1.0, 2.0, 3.0}, {1.0, 2.0}), InputError);
}

TEST(CompareTest, RankTable) {
  OptionalValues a = {4.0, 3.0, 2.0, 1.0};
  OptionalValues b = {1.0, 2.0, 3.0, 4.0};
  std::vector<std::string> groups = {"x", "x", "y", "y"};
  CompareOptions o;
  o.groups = &groups;
  auto r = compare(a, b, o);
  ASSERT_EQ(r.rank_table.size(), 2u);
  EXPECT_EQ(r.rank_table.at("x").size, 2u);
  EXPECT_LT(r.rank_table.at("x").median_rank_a, r.rank_table.at("y").median_rank_a);
  EXPECT_GT(r.rank_table.at("x").median_rank_b, r.rank_table.at("y").median_rank_b);
}

ScenarioConfig small_scenario(const std::string& noise) {
  ScenarioConfig c;
  c.generator = "watts_strogatz_directed";
  c.seed = 4;
  c.weight_law = WeightLaw::uniform(0.5, 1.5);
  c.params = {{"N", "100"}, {"k", "10"}, {"p", "0.05"}, {"r", "1"}, {"realizations", "3"},
              {"noise.generator", noise},  {"noise.density", "0.01"},
              {"noise.weights", "constant:1e-6"}};
  return c;
}

TEST(SpuriousTest, ZeroNoiseGivesPerfectCorrelation) {
  auto rep = run_spurious_experiment(small_scenario("none"));
  EXPECT_EQ(rep.realizations, 3u);
  EXPECT_EQ(rep.mean_noise_edges, 0.0);
  for (const auto& m : rep.methods) EXPECT_NEAR(m.mean_r_squared, 1.0, 1e-12);
}

TEST(SpuriousTest, TinyNoiseLeavesFullyWeightedMethodsIntact) {
  auto rep = run_spurious_experiment(small_scenario("erdos_renyi"));
  EXPECT_GT(rep.mean_noise_edges, 0.0);
  for (const auto& m : rep.methods) {
    if (m.method == Method::zhang || m.method == Method::continuous)
      EXPECT_GT(m.mean_r_squared, 0.99);
  }
  auto again = run_spurious_experiment(small_scenario("erdos_renyi"));
  for (std::size_t i = 0; i < rep.methods.size(); ++i)
    EXPECT_EQ(rep.methods[i].r_squared, again.methods[i].r_squared);
}

TEST(ShuffleExperimentTest, NullVersusNull) {
  auto g = shuffle_weights(testing::random_graph(21, 80, 0.1, true), ShuffleScope::global, 1);
  auto rep = run_shuffle_experiment(g, ShuffleScope::global, 30, 2, {Method::continuous},
                                    {Mode::total, Mode::cycle});
  for (const auto& c : rep.cells) {
    EXPECT_GT(c.n_points, 50u);
    EXPECT_GT(c.frac_above, 0.25);
    EXPECT_LT(c.frac_above, 0.75);
    EXPECT_EQ(c.label, "");
  }
}

TEST(ShuffleExperimentTest, Labels) {
  EXPECT_EQ(shuffle_label(0.74, 0.26), "");
  EXPECT_EQ(shuffle_label(0.75, 0.25), "+");
  EXPECT_EQ(shuffle_label(0.96, 0.04), "+*");
  EXPECT_EQ(shuffle_label(0.2, 0.8), "-");
  EXPECT_EQ(shuffle_label(0.0, 1.0), "-*");
}

}  // namespace
}  // namespace wclust
