#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "test_util.hpp"
#include "wclust/clustering.hpp"

namespace wclust {
namespace {

using testing::make_graph;
using testing::random_graph;
using testing::unit_weights;

// Raw weights are used as-is (scale pinned to 1).
NormalizedWeights raw(std::vector<Edge> edges, std::size_t n = 0) {
  return normalize_by(make_graph(std::move(edges), false, n), 1.0);
}

NormalizedWeights eps_triangle(double eps) {
  return raw({{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, eps}});
}

TEST(BinaryClusteringTest, SmallGraphs) {
  auto tri = raw({{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  for (NodeId i = 0; i < 3; ++i) EXPECT_EQ(clustering_binary(tri, i), 1.0);
  auto path = raw({{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(clustering_binary(path, 1), 0.0);
  EXPECT_FALSE(clustering_binary(path, 0).has_value());
  // 4-clique without the edge 2-3.
  auto k4 = raw({{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
  EXPECT_DOUBLE_EQ(*clustering_binary(k4, 0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*clustering_binary(k4, 1), 2.0 / 3.0);
  EXPECT_EQ(clustering_binary(k4, 2), 1.0);
}

TEST(ClusteringTest, DirectedInputRejected) {
  auto w = normalize(make_graph({{0, 1, 1.0}}, true));
  EXPECT_THROW(clustering_zhang(w, 0), InputError);
}

TEST(BarratTest, Examples) {
  auto w = raw({{0, 1, 0.3}, {0, 2, 0.3}, {1, 2, 0.3}, {2, 3, 0.3}});
  for (NodeId i = 0; i < 4; ++i)
    EXPECT_EQ(clustering_barrat(w, i).has_value(), clustering_binary(w, i).has_value());
  EXPECT_DOUBLE_EQ(*clustering_barrat(w, 2), *clustering_binary(w, 2));
  for (double eps : {1e-9, 1e-3, 0.5}) EXPECT_EQ(clustering_barrat(eps_triangle(eps), 0), 1.0);
}

TEST(OnnelaTest, Examples) {
  EXPECT_DOUBLE_EQ(*clustering_onnela(eps_triangle(1.0), 0), 1.0);
  for (double eps : {1e-9, 1e-3, 0.5})
    EXPECT_NEAR(*clustering_onnela(eps_triangle(eps), 0), std::cbrt(eps), 1e-15);
}

TEST(ZhangTest, Examples) {
  for (double eps : {1e-9, 1e-3, 0.5})
    EXPECT_NEAR(*clustering_zhang(eps_triangle(eps), 0), eps, 1e-15);
  auto star = raw({{0, 1, 0.4}, {0, 2, 0.7}, {0, 3, 1.0}});
  EXPECT_EQ(clustering_zhang(star, 0), 0.0);
}

TEST(ContinuousTest, Examples) {
  for (double eps : {1e-9, 1e-3, 0.5})
    EXPECT_NEAR(*clustering_continuous(eps_triangle(eps), 0), std::pow(eps, 2.0 / 3.0),
                1e-15);
  EXPECT_DOUBLE_EQ(*clustering_continuous(eps_triangle(1.0), 0), 1.0);
  // Numerator 2 * (0.5^3)^(2/3) = 0.5, denominator 2 * sqrt(0.5)^2 = 1.
  auto half = raw({{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}});
  EXPECT_DOUBLE_EQ(*clustering_continuous(half, 0), 0.5);
}

TEST(MiyajimaTest, Examples) {
  // Closing edge weak: h(1, eps) / h(1, 1).
  const double eps = 1e-6;
  EXPECT_NEAR(*clustering_miyajima_hm(eps_triangle(eps), 0), 2 * eps / (1 + eps), 1e-18);
  // One weak spoke: both Zhang and Miyajima stay at 1.
  auto spoke = raw({{0, 1, eps}, {0, 2, 1.0}, {1, 2, 1.0}});
  EXPECT_DOUBLE_EQ(*clustering_zhang(spoke, 0), 1.0);
  EXPECT_DOUBLE_EQ(*clustering_miyajima_hm(spoke, 0), 1.0);
}

TEST(MiyajimaTest, NotLocallyLinear) {
  auto a = raw({{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  auto b = raw({{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}});
  const double ratio = *clustering_miyajima_hm(b, 0) / *clustering_miyajima_hm(a, 0);
  EXPECT_DOUBLE_EQ(ratio, 0.75);
  EXPECT_GT(std::abs(ratio - 0.5), 0.1);
}

TEST(ClusteringTest, EmptyGraphIsUndefined) {
  auto w = normalize(make_graph({{0, 1, 1.0}}, false, 4));
  for (Method m : kAllMethods) {
    auto r = local_clustering(w, m);
    for (NodeId i = 0; i < 4; ++i) {
      EXPECT_FALSE(r.values[i].has_value());
      EXPECT_FALSE(oracle::clustering_oracle(w, i, m).has_value());
    }
  }
}

TEST(GlobalClusteringTest, Examples) {
  EXPECT_EQ(global_clustering(eps_triangle(1.0), Method::continuous), 1.0);
  auto w = raw({{0, 1, 0.9}, {1, 2, 0.4}, {0, 2, 0.6}, {3, 4, 0.7}, {4, 5, 0.2}});
  for (Method m : {Method::binary, Method::zhang, Method::continuous}) {
    auto got = global_clustering(w, m);
    auto want = oracle::global_oracle(oracle::DenseWeights(w), m);
    ASSERT_TRUE(got && want);
    EXPECT_NEAR(*got, *want, 1e-12);
    EXPECT_GT(*got, 0.0);
    EXPECT_LT(*got, 1.0);
  }
  EXPECT_THROW(global_clustering(w, Method::onnela), InputError);
}

TEST(GlobalClusteringTest, UnitWeightsGiveTransitivity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = unit_weights(random_graph(seed, 20, 0.25, false));
    auto w = normalize(g);
    std::size_t closed = 0, triples = 0;
    for (NodeId i = 0; i < 20; ++i)
      for (NodeId j = 0; j < 20; ++j)
        for (NodeId k = 0; k < 20; ++k) {
          if (i == j || j == k || i == k) continue;
          if (g.has_edge(i, j) && g.has_edge(i, k)) {
            ++triples;
            closed += g.has_edge(j, k);
          }
        }
    const double t = static_cast<double>(closed) / static_cast<double>(triples);
    for (Method m : {Method::binary, Method::zhang, Method::continuous})
      EXPECT_NEAR(*global_clustering(w, m), t, 1e-14);
  }
}

TEST(ClusteringPropertyTest, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto w = normalize(random_graph(seed, 25, 0.05 + 0.01 * static_cast<double>(seed), false));
    oracle::DenseWeights dense(w);
    for (Method m : kAllMethods) {
      auto r = local_clustering(w, m);
      for (NodeId i = 0; i < w.n_nodes(); ++i) {
        auto want = oracle::clustering_oracle(dense, i, m);
        ASSERT_EQ(r.values[i].has_value(), want.has_value())
            << to_string(m) << " seed " << seed << " node " << i;
        if (want) EXPECT_NEAR(*r.values[i], *want, 1e-12) << to_string(m);
      }
    }
  }
}

TEST(ClusteringPropertyTest, ValuesInUnitInterval) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    auto w = normalize(random_graph(seed, 30, 0.2, false));
    for (Method m : kAllMethods) {
      for (const auto& v : local_clustering(w, m).values) {
        if (!v) continue;
        EXPECT_GE(*v, 0.0);
        EXPECT_LE(*v, 1.0 + 1e-15);
      }
    }
  }
}

TEST(ClusteringPropertyTest, UnitWeightsMatchBinary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto w = normalize(unit_weights(random_graph(seed, 25, 0.2, false)));
    auto bin = local_clustering(w, Method::binary);
    for (Method m : kAllMethods) {
      auto r = local_clustering(w, m);
      for (NodeId i = 0; i < w.n_nodes(); ++i) {
        ASSERT_EQ(r.values[i].has_value(), bin.values[i].has_value());
        if (bin.values[i]) EXPECT_NEAR(*r.values[i], *bin.values[i], 1e-14) << to_string(m);
      }
    }
  }
}

TEST(ClusteringPropertyTest, BarratMeanRatioForm) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto w = normalize(random_graph(seed, 25, 0.25, false));
    for (NodeId i = 0; i < w.n_nodes(); ++i) {
      auto a = clustering_barrat(w, i);
      auto b = clustering_barrat_mean_ratio(w, i);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) EXPECT_NEAR(*a, *b, 1e-12);
    }
  }
}

// Scale every edge at i and every edge between two neighbors of i.
WeightedDigraph scale_locally(const WeightedDigraph& g, NodeId i, double alpha) {
  std::vector<double> ws;
  for (const auto& e : g.edges()) {
    const bool at_i = e.source == i || e.target == i;
    const bool among = g.has_edge(i, e.source) && g.has_edge(i, e.target);
    ws.push_back(at_i || among ? alpha * e.weight : e.weight);
  }
  return with_weights(g, ws);
}

TEST(ClusteringPropertyTest, LocalLinearity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_graph(seed, 20, 0.3, false);
    for (NodeId i = 0; i < g.n_nodes(); ++i) {
      for (double alpha : {0.25, 0.7}) {
        auto base = normalize_by(g, 1.0);
        auto scaled = normalize_by(scale_locally(g, i, alpha), 1.0);
        for (Method m : {Method::onnela, Method::zhang, Method::continuous}) {
          auto c0 = clustering(base, i, m);
          auto c1 = clustering(scaled, i, m);
          ASSERT_EQ(c0.has_value(), c1.has_value());
          if (c0) EXPECT_NEAR(*c1, alpha * *c0, 1e-12) << to_string(m);
        }
      }
    }
  }
}

TEST(ClusteringPropertyTest, VarianceDecomposition) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto w = normalize(random_graph(seed, 20, 0.35, false));
    for (NodeId i = 0; i < w.n_nodes(); ++i) {
      auto ids = w.out().row(i);
      std::vector<double> tri, trip;
      for (NodeId j : ids)
        for (NodeId k : ids) {
          if (j == k) continue;
          trip.push_back(std::sqrt(w.weight(i, j) * w.weight(i, k)));
          if (w.graph().has_edge(j, k))
            tri.push_back(std::cbrt(w.weight(i, j) * w.weight(i, k) * w.weight(j, k)));
        }
      auto c = clustering_continuous(w, i);
      if (!c || tri.empty()) continue;
      auto mean = [](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
      };
      const double mu = mean(tri);
      double var = 0;
      for (double x : tri) var += (x - mu) * (x - mu);
      var /= static_cast<double>(tri.size());
      const double want = (var + mu * mu) / mean(trip) * *clustering_binary(w, i);
      EXPECT_NEAR(*c, want, 1e-10);
    }
  }
}

// Base graph with an extra isolated node that receives the epsilon edge, so
// the new neighbor shares no triangles with i.
struct EpsilonSetup {
  WeightedDigraph g;
  NodeId v;
  double scale;
};

EpsilonSetup epsilon_setup(std::uint64_t seed) {
  auto base = random_graph(seed, 25, 0.3, false);
  auto edges = base.edges();
  EpsilonSetup s{make_graph(edges, false, base.n_nodes() + 1),
                 static_cast<NodeId>(base.n_nodes()), base.max_weight()};
  s.g = s.g.with_pinned_scale(s.scale);
  return s;
}

std::optional<double> with_eps(const EpsilonSetup& s, NodeId i, double eps, Method m) {
  return clustering(normalize(with_edge(s.g, i, s.v, eps * s.scale)), i, m);
}

double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    mx += std::log(xs[t]);
    my += std::log(ys[t]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    sxy += (std::log(xs[t]) - mx) * (std::log(ys[t]) - my);
    sxx += (std::log(xs[t]) - mx) * (std::log(xs[t]) - mx);
  }
  return sxy / sxx;
}

TEST(ContinuityTest, ContinuousDeviationScalesAsSqrtEps) {
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto s = epsilon_setup(seed);
    auto w0 = normalize(s.g);
    for (NodeId i = 0; i < s.v; ++i) {
      auto c0 = clustering_continuous(w0, i);
      if (!c0 || *c0 == 0.0) continue;
      std::vector<double> dev;
      for (double e : eps) dev.push_back(std::abs(*with_eps(s, i, e, Method::continuous) - *c0));
      const double slope = fitted_slope(eps, dev);
      EXPECT_NEAR(slope, 0.5, 0.1) << "seed " << seed << " node " << i;
      EXPECT_LE(dev.back(), 10.0 * std::sqrt(eps.back()));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(ContinuityTest, ZhangDeviationIsLinear) {
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  auto s = epsilon_setup(7);
  auto w0 = normalize(s.g);
  for (NodeId i = 0; i < s.v; ++i) {
    auto c0 = clustering_zhang(w0, i);
    if (!c0 || *c0 == 0.0) continue;
    std::vector<double> dev;
    for (double e : eps) dev.push_back(std::abs(*with_eps(s, i, e, Method::zhang) - *c0));
    EXPECT_NEAR(fitted_slope(eps, dev), 1.0, 0.1) << "node " << i;
  }
}

TEST(ContinuityTest, HybridDefinitionsJump) {
  constexpr double eps = 1e-10;
  auto s = epsilon_setup(3);
  auto w0 = normalize(s.g);
  for (NodeId i = 0; i < s.v; ++i) {
    auto o0 = clustering_onnela(w0, i);
    if (!o0) continue;
    const double d = static_cast<double>(w0.out().degree(i));
    EXPECT_NEAR(*with_eps(s, i, eps, Method::onnela), (d - 1) / (d + 1) * *o0, 1e-6);
    EXPECT_NEAR(*with_eps(s, i, eps, Method::barrat),
                (d - 1) / d * *clustering_barrat(w0, i), 1e-6);
  }
}

}  // namespace
}  // namespace wclust
