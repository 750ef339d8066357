#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "test_util.hpp"
#include "wclust/directed.hpp"

namespace wclust {
namespace {

using testing::make_graph;
using testing::random_graph;
using testing::unit_weights;

NormalizedWeights raw_directed(std::vector<Edge> edges, std::size_t n = 0) {
  return normalize_by(make_graph(std::move(edges), true, n), 1.0);
}

NormalizedWeights three_cycle(double w_jk = 1.0) {
  return raw_directed({{0, 1, 1.0}, {1, 2, w_jk}, {2, 0, 1.0}});
}

NormalizedWeights reciprocal_triangle() {
  return raw_directed(
      {{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}, {2, 0, 1.0}});
}

constexpr Method kWeighted[] = {Method::barrat, Method::onnela, Method::zhang,
                                Method::continuous};

TEST(DirectedClusteringTest, ThreeCycle) {
  auto w = three_cycle();
  EXPECT_EQ(directed_clustering(w, 0, Method::binary, Mode::cycle), 1.0);
  EXPECT_EQ(directed_clustering(w, 0, Method::binary, Mode::middleman), 0.0);
  EXPECT_FALSE(directed_clustering(w, 0, Method::binary, Mode::fan_in).has_value());
  EXPECT_FALSE(directed_clustering(w, 0, Method::binary, Mode::fan_out).has_value());
  for (Method m : kWeighted) {
    EXPECT_DOUBLE_EQ(*directed_clustering(w, 0, m, Mode::cycle), 1.0) << to_string(m);
    EXPECT_DOUBLE_EQ(*directed_clustering(w, 0, m, Mode::total), 0.5) << to_string(m);
  }
}

TEST(DirectedClusteringTest, ReciprocalTriangleSaturates) {
  auto w = reciprocal_triangle();
  for (Method m : kDirectedMethods)
    for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total})
      EXPECT_DOUBLE_EQ(*directed_clustering(w, 1, m, mode), 1.0);
  EXPECT_DOUBLE_EQ(*total_clustering_zhang(w, 0), 1.0);
  EXPECT_DOUBLE_EQ(*total_clustering_continuous(w, 0), 1.0);
}

TEST(DirectedClusteringTest, ThreeCycleClosedForms) {
  auto w = three_cycle();
  auto z = total_intensities_zhang(w, 0);
  EXPECT_DOUBLE_EQ(z.triangle, 1.0);
  EXPECT_DOUBLE_EQ(z.triplet, 2.0);
  EXPECT_DOUBLE_EQ(*total_clustering_continuous(w, 0), 0.5);
}

TEST(DirectedClusteringTest, WeakCycleEdgeVanishes) {
  const double eps = 1e-9;
  auto w = three_cycle(eps);
  const double c = *total_clustering_continuous(w, 0);
  EXPECT_NEAR(c, 0.5 * std::pow(eps, 2.0 / 3.0), 1e-15);
  EXPECT_LT(c, 1e-5);
}

TEST(DirectedClusteringTest, ReciprocalDyadsOnly) {
  auto w = raw_directed({{0, 1, 0.5}, {1, 0, 0.8}, {1, 2, 0.3}, {2, 1, 1.0}});
  for (Method m : kDirectedMethods)
    for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total})
      for (NodeId i = 0; i < 3; ++i) {
        auto c = directed_clustering(w, i, m, mode);
        if (c) EXPECT_EQ(*c, 0.0);
      }
}

TEST(DirectedGlobalTest, Examples) {
  auto w = raw_directed({{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, 1}, {2, 0, 1},
                         {3, 4, 1}, {4, 3, 1}, {4, 5, 1}, {5, 4, 1}, {3, 5, 1}, {5, 3, 1}});
  for (Method m : {Method::zhang, Method::continuous})
    for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total})
      EXPECT_DOUBLE_EQ(*directed_global(w, m, mode), 1.0);
  EXPECT_EQ(directed_global(three_cycle(), Method::continuous, Mode::middleman), 0.0);
  EXPECT_THROW(directed_global(w, Method::onnela, Mode::cycle), InputError);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = normalize(random_graph(seed, 20, 0.2, true));
    oracle::DenseWeights dense(r);
    for (Method m : {Method::zhang, Method::continuous})
      for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total}) {
        auto got = directed_global(r, m, mode);
        auto want = oracle::global_oracle(dense, m, mode);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (want) EXPECT_NEAR(*got, *want, 1e-12);
      }
  }
}

TEST(DirectedPropertyTest, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto w = normalize(random_graph(seed, 18, 0.1 + 0.005 * static_cast<double>(seed), true));
    oracle::DenseWeights dense(w);
    for (auto fan : {BarratFanDenominator::consistent, BarratFanDenominator::literal}) {
      DirectedOptions opts{fan};
      for (Method m : kDirectedMethods)
        for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total}) {
          auto r = local_clustering(w, m, mode, opts);
          for (NodeId i = 0; i < w.n_nodes(); ++i) {
            auto want = oracle::directed_oracle(dense, i, m, mode, opts);
            ASSERT_EQ(r.values[i].has_value(), want.has_value())
                << to_string(m) << "/" << to_string(mode) << " seed " << seed << " node " << i;
            if (want) EXPECT_NEAR(*r.values[i], *want, 1e-12) << to_string(m) << "/" << to_string(mode);
          }
        }
    }
  }
}

TEST(DirectedPropertyTest, ValuesInUnitInterval) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto w = normalize(random_graph(seed, 25, 0.25, true));
    for (Method m : kDirectedMethods)
      for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total})
        for (const auto& v : local_clustering(w, m, mode).values)
          if (v) {
            EXPECT_GE(*v, 0.0);
            EXPECT_LE(*v, 1.0 + 1e-15);
          }
  }
}

TEST(DirectedPropertyTest, ModeDecomposition) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto w = normalize(random_graph(seed, 25, 0.2, true));
    for (NodeId i = 0; i < w.n_nodes(); ++i) {
      for (Method m : {Method::zhang, Method::continuous}) {
        IntensityPair sum;
        for (Mode mode : kPartialModes) sum += directed_intensities(w, i, m, mode);
        auto total = directed_intensities(w, i, m, Mode::total);
        auto closed = m == Method::zhang ? total_intensities_zhang(w, i)
                                         : total_intensities_continuous(w, i);
        EXPECT_NEAR(total.triangle, sum.triangle, 1e-12);
        EXPECT_NEAR(total.triplet, sum.triplet, 1e-12);
        EXPECT_NEAR(closed.triangle, sum.triangle, 1e-12 * (1 + sum.triangle));
        EXPECT_NEAR(closed.triplet, sum.triplet, 1e-12 * (1 + sum.triplet));
        auto a = total.ratio(), b = closed.ratio();
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) EXPECT_NEAR(*a, *b, 1e-12);
      }
    }
  }
}

TEST(DirectedPropertyTest, SymmetricWeightsReduceToUndirected) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto u = random_graph(seed, 20, 0.3, false);
    std::vector<Edge> both;
    for (const auto& e : u.edges()) {
      both.push_back(e);
      both.push_back({e.target, e.source, e.weight});
    }
    auto wu = normalize(u);
    auto wd = normalize(make_graph(both, true, u.n_nodes()));
    for (Method m : {Method::zhang, Method::continuous}) {
      auto ref = local_clustering(wu, m);
      for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total}) {
        auto r = local_clustering(wd, m, mode);
        for (NodeId i = 0; i < wu.n_nodes(); ++i) {
          ASSERT_EQ(r.values[i].has_value(), ref.values[i].has_value());
          if (ref.values[i]) EXPECT_NEAR(*r.values[i], *ref.values[i], 1e-12);
        }
      }
    }
  }
}

TEST(DirectedPropertyTest, TransposeDuality) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = random_graph(seed, 20, 0.25, true);
    auto w = normalize(g);
    auto t = normalize(transpose(g));
    for (Method m : kDirectedMethods) {
      auto fi = local_clustering(w, m, Mode::fan_in);
      auto fo_t = local_clustering(t, m, Mode::fan_out);
      auto c = local_clustering(w, m, Mode::cycle);
      auto c_t = local_clustering(t, m, Mode::cycle);
      for (NodeId i = 0; i < w.n_nodes(); ++i) {
        ASSERT_EQ(fi.values[i].has_value(), fo_t.values[i].has_value());
        if (fi.values[i]) EXPECT_NEAR(*fi.values[i], *fo_t.values[i], 1e-12);
        ASSERT_EQ(c.values[i].has_value(), c_t.values[i].has_value());
        if (c.values[i]) EXPECT_NEAR(*c.values[i], *c_t.values[i], 1e-12);
      }
    }
  }
}

TEST(DirectedPropertyTest, UnitWeightsMatchBinary) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto w = normalize(unit_weights(random_graph(seed, 20, 0.25, true)));
    for (Mode mode : {Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out, Mode::total}) {
      auto bin = local_clustering(w, Method::binary, mode);
      for (Method m : kWeighted) {
        auto r = local_clustering(w, m, mode);
        for (NodeId i = 0; i < w.n_nodes(); ++i) {
          ASSERT_EQ(r.values[i].has_value(), bin.values[i].has_value());
          if (bin.values[i]) EXPECT_NEAR(*r.values[i], *bin.values[i], 1e-14);
        }
      }
    }
  }
}

TEST(DirectedPropertyTest, BarratLiteralFanDiffersOffUnitWeights) {
  auto w = raw_directed({{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 1.0}});
  DirectedOptions lit{BarratFanDenominator::literal};
  EXPECT_DOUBLE_EQ(*directed_clustering(w, 0, Method::barrat, Mode::fan_out), 0.5);
  // Literal s(s - 1) is zero for s = 1, so the ratio is undefined.
  EXPECT_FALSE(directed_clustering(w, 0, Method::barrat, Mode::fan_out, lit).has_value());
}

}  // namespace
}  // namespace wclust
