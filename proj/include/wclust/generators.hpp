// Copyright 2026 The wclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wclust/error.hpp"
#include "wclust/graph.hpp"
#include "wclust/rng.hpp"

namespace wclust {

// Distribution of raw edge weights.
struct WeightLaw {
  enum class Kind { constant, uniform, exponential };
  Kind kind = Kind::uniform;
  double a = 0.0;  // constant value, lower bound, or rate
  double b = 1.0;  // upper bound (uniform only)

  static WeightLaw constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InputError("constant weight must be > 0");
    return {Kind::constant, c, c};
  }
  static WeightLaw uniform(double lo, double hi) {
    if (!(lo >= 0.0) || !(hi >= lo) || !std::isfinite(hi))
      throw InputError("uniform weight law needs 0 <= a <= b");
    return {Kind::uniform, lo, hi};
  }
  static WeightLaw exponential(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw InputError("exponential rate must be > 0");
    return {Kind::exponential, lambda, 0.0};
  }

  double sample(Rng& rng) const {
    switch (kind) {
      case Kind::constant: return a;
      case Kind::uniform: return rng.uniform(a, b);
      case Kind::exponential: return rng.exponential(a);
    }
    return a;
  }

  std::string to_string() const {
    char buf[96];
    switch (kind) {
      case Kind::constant: std::snprintf(buf, sizeof buf, "constant:%.17g", a); break;
      case Kind::uniform: std::snprintf(buf, sizeof buf, "uniform:%.17g,%.17g", a, b); break;
      case Kind::exponential: std::snprintf(buf, sizeof buf, "exponential:%.17g", a); break;
    }
    return buf;
  }
};

// "constant:C", "uniform:A,B" or "exponential:LAMBDA".
inline WeightLaw parse_weight_law(const std::string& s) {
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto number = [&](const std::string& t) {
    try {
      std::size_t used = 0;
      double x = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return x;
    } catch (const std::exception&) {
      throw InputError("bad number '" + t + "' in weight law '" + s + "'");
    }
  };
  if (kind == "constant") return WeightLaw::constant(number(args));
  if (kind == "exponential") return WeightLaw::exponential(number(args));
  if (kind == "uniform") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw InputError("uniform law needs 'uniform:A,B'");
    return WeightLaw::uniform(number(args.substr(0, comma)), number(args.substr(comma + 1)));
  }
  throw InputError("unknown weight law '" + s + "'");
}

namespace detail {

inline std::uint64_t pair_key(NodeId u, NodeId v, bool directed) {
  if (!directed && u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

inline WeightedDigraph assemble(std::vector<Edge> edges, std::size_t n, bool directed) {
  EdgeList l;
  l.edges = std::move(edges);
  l.n_nodes = n;
  return build_graph(std::move(l), directed, BuildOptions::strict());
}

inline void draw_weights(std::vector<Edge>& edges, const WeightLaw& law, Rng rng) {
  for (auto& e : edges) e.weight = law.sample(rng);
}

}  // namespace detail

inline constexpr std::size_t kCoreOuterNodes = 10;
inline constexpr std::size_t kPeripheryNodes = 20;

// Core-periphery benchmark: node 0 is the central core node (CCN), nodes
// 1..10 the outer-core ring (OCN), nodes 11..30 the periphery (PN). Roles
// are stored in node attribute "role".
//
// OCN o receives an edge from every PN p with p % 2 == o % 2 (ring and
// periphery indices counted from 0); each such edge is reciprocated with
// probability 0.5. Core weights ~ U(5, 10), periphery weights ~ U(0.05, 0.5).
inline WeightedDigraph gen_core_periphery(std::uint64_t seed) {
  const std::size_t n_ocn = kCoreOuterNodes, n_pn = kPeripheryNodes;
  const std::size_t n = 1 + n_ocn + n_pn;
  auto ocn = [](std::size_t o) { return static_cast<NodeId>(1 + o); };
  auto pn = [&](std::size_t p) { return static_cast<NodeId>(1 + n_ocn + p); };

  Rng root(seed);
  Rng topo = root.child("topology");
  std::vector<Edge> core, periphery;
  for (std::size_t o = 0; o < n_ocn; ++o) {
    for (std::size_t step : {std::size_t{1}, std::size_t{2}}) {
      const std::size_t q = (o + step) % n_ocn;
      core.push_back({ocn(o), ocn(q), 0.0});
      core.push_back({ocn(q), ocn(o), 0.0});
    }
    core.push_back({ocn(o), 0, 0.0});
    core.push_back({0, ocn(o), 0.0});
  }
  for (std::size_t o = 0; o < n_ocn; ++o) {
    for (std::size_t p = o % 2; p < n_pn; p += 2) {
      periphery.push_back({pn(p), ocn(o), 0.0});
      if (topo.bernoulli(0.5)) periphery.push_back({ocn(o), pn(p), 0.0});
    }
  }
  for (std::size_t p = 0; p < n_pn; ++p)
    for (std::size_t q = 0; q < n_pn; ++q)
      if (p != q && topo.bernoulli(0.05)) periphery.push_back({pn(p), pn(q), 0.0});

  Rng weights = root.child("weights");
  for (auto& e : core) e.weight = weights.uniform(5.0, 10.0);
  for (auto& e : periphery) e.weight = weights.uniform(0.05, 0.5);

  EdgeList l;
  l.edges = std::move(core);
  l.edges.insert(l.edges.end(), periphery.begin(), periphery.end());
  l.n_nodes = n;
  auto& role = l.node_attrs["role"];
  role.assign(n, "PN");
  role[0] = "CCN";
  for (std::size_t o = 0; o < n_ocn; ++o) role[ocn(o)] = "OCN";
  return build_graph(std::move(l), true, BuildOptions::strict());
}

// Watts-Strogatz small world. Directed: ring lattice with coordination k
// where a fraction r of the N k / 2 lattice pairs is reciprocated (exactly
// round(r N k / 2) pairs, chosen at random) and the others get a random
// orientation, giving N k (1 + r) / 2 edges. Each edge is then rewired with
// probability p: its target moves to a node drawn uniformly among those the
// source does not already reach. Undirected: N k / 2 edges, r ignored.
inline WeightedDigraph gen_watts_strogatz(std::size_t n, std::size_t k, double p, double r,
                                          std::uint64_t seed,
                                          const WeightLaw& law = WeightLaw::uniform(0, 1),
                                          bool directed = true) {
  if (k == 0 || k % 2 != 0) throw InputError("Watts-Strogatz needs an even k > 0");
  if (k >= n) throw InputError("Watts-Strogatz needs k < N");
  if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0))
    throw InputError("Watts-Strogatz probabilities must lie in [0, 1]");

  Rng root(seed);
  Rng topo = root.child("topology");
  std::vector<Edge> edges;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= k / 2; ++d)
      pairs.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + d) % n));

  if (directed) {
    std::vector<std::size_t> order(pairs.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    topo.shuffle(order);
    const auto n_recip = static_cast<std::size_t>(std::llround(r * static_cast<double>(pairs.size())));
    std::vector<char> recip(pairs.size(), 0);
    for (std::size_t t = 0; t < n_recip; ++t) recip[order[t]] = 1;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      auto [u, v] = pairs[t];
      if (recip[t]) {
        edges.push_back({u, v, 0.0});
        edges.push_back({v, u, 0.0});
      } else if (topo.bernoulli(0.5)) {
        edges.push_back({u, v, 0.0});
      } else {
        edges.push_back({v, u, 0.0});
      }
    }
  } else {
    for (auto [u, v] : pairs) edges.push_back({u, v, 0.0});
  }

  Rng rewire = root.child("rewiring");
  std::unordered_set<std::uint64_t> present;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    present.insert(detail::pair_key(e.source, e.target, directed));
    ++degree[e.source];
    if (!directed) ++degree[e.target];
  }
  for (auto& e : edges) {
    if (!rewire.bernoulli(p)) continue;
    if (degree[e.source] >= n - 1) continue;
    NodeId t;
    do {
      t = static_cast<NodeId>(rewire.below(n));
    } while (t == e.source || present.count(detail::pair_key(e.source, t, directed)));
    present.erase(detail::pair_key(e.source, e.target, directed));
    present.insert(detail::pair_key(e.source, t, directed));
    if (!directed) {
      --degree[e.target];
      ++degree[t];
    }
    e.target = t;
  }

  detail::draw_weights(edges, law, root.child("weights"));
  return detail::assemble(std::move(edges), n, directed);
}

// Erdos-Renyi: each ordered pair (unordered when undirected) is present
// independently with probability `density`.
inline WeightedDigraph gen_er(std::size_t n, double density, std::uint64_t seed,
                              const WeightLaw& law = WeightLaw::uniform(0, 1),
                              bool directed = true) {
  if (!(density > 0.0 && density <= 1.0)) throw InputError("density must lie in (0, 1]");
  if (n < 2) throw InputError("Erdos-Renyi needs at least 2 nodes");
  Rng root(seed);
  Rng topo = root.child("topology");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j && topo.bernoulli(density))
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), 0.0});
  detail::draw_weights(edges, law, root.child("weights"));
  return detail::assemble(std::move(edges), n, directed);
}

// Preferential attachment: nodes m..N-1 arrive in order and each sends m
// edges to distinct earlier nodes chosen with probability proportional to
// (in-degree + 1) (degree + 1 when undirected).
inline WeightedDigraph gen_scale_free(std::size_t n, std::size_t m, std::uint64_t seed,
                                      const WeightLaw& law = WeightLaw::uniform(0, 1),
                                      bool directed = true) {
  if (m == 0) throw InputError("scale-free generator needs m >= 1");
  if (n <= m) throw InputError("scale-free generator needs N > m");
  Rng root(seed);
  Rng topo = root.child("topology");
  std::vector<NodeId> urn;
  for (std::size_t i = 0; i < m; ++i) urn.push_back(static_cast<NodeId>(i));
  std::vector<Edge> edges;
  std::vector<NodeId> picked;
  for (std::size_t t = m; t < n; ++t) {
    picked.clear();
    while (picked.size() < m) {
      const NodeId c = urn[topo.below(urn.size())];
      if (std::find(picked.begin(), picked.end(), c) == picked.end()) picked.push_back(c);
    }
    for (NodeId c : picked) {
      edges.push_back({static_cast<NodeId>(t), c, 0.0});
      urn.push_back(c);
      if (!directed) urn.push_back(static_cast<NodeId>(t));
    }
    urn.push_back(static_cast<NodeId>(t));
  }
  detail::draw_weights(edges, law, root.child("weights"));
  return detail::assemble(std::move(edges), n, directed);
}

// Union of a ground-truth graph and a noise graph. Noise edges absent from
// the ground truth get weights drawn from `law` (the noise graph's own
// weights are ignored); shared edges keep the ground-truth weight. Edge
// attribute "noise" is 1 for added edges and 0 otherwise.
inline WeightedDigraph overlay_noise(const WeightedDigraph& truth, const WeightedDigraph& noise,
                                     const WeightLaw& law, std::uint64_t seed) {
  if (truth.n_nodes() != noise.n_nodes())
    throw InputError("noise graph has " + std::to_string(noise.n_nodes()) +
                     " nodes, ground truth has " + std::to_string(truth.n_nodes()));
  if (truth.directed() != noise.directed())
    throw InputError("noise graph and ground truth differ in directedness");
  EdgeList l = truth.to_edge_list();
  for (auto& [name, column] : l.edge_attrs) column.reserve(column.size() + noise.n_edges());
  std::vector<double> flag(truth.n_edges(), 0.0);
  Rng rng = Rng(seed).child("weights");
  for (const auto& e : noise.edges()) {
    if (truth.has_edge(e.source, e.target)) continue;
    l.edges.push_back({e.source, e.target, law.sample(rng)});
    flag.push_back(1.0);
    for (auto& [name, column] : l.edge_attrs) column.push_back(0.0);
  }
  l.edge_attrs["noise"] = std::move(flag);
  return build_graph(std::move(l), truth.directed(), BuildOptions::strict());
}

enum class ShuffleScope { global, per_node_out };

inline std::string_view to_string(ShuffleScope s) {
  return s == ShuffleScope::global ? "global" : "per_node_out";
}

inline ShuffleScope parse_shuffle_scope(std::string_view s) {
  if (s == "global") return ShuffleScope::global;
  if (s == "per_node_out" || s == "per-node-out") return ShuffleScope::per_node_out;
  throw InputError("unknown shuffle scope '" + std::string(s) + "'");
}

// Same adjacency, permuted weights. per_node_out permutes among each node's
// outgoing edges and therefore keeps every out-strength; it needs a directed
// graph because an undirected edge belongs to two nodes.
inline WeightedDigraph shuffle_weights(const WeightedDigraph& g, ShuffleScope scope,
                                       std::uint64_t seed) {
  if (g.n_edges() == 0) throw DegenerateGraphError("cannot shuffle a graph without edges");
  Rng rng = Rng(seed).child("weights");
  std::vector<double> w(g.n_edges());
  for (std::size_t e = 0; e < w.size(); ++e) w[e] = g.edges()[e].weight;
  if (scope == ShuffleScope::global) {
    rng.shuffle(w);
  } else {
    if (!g.directed())
      throw InputError("per_node_out shuffling requires a directed graph");
    std::vector<double> local;
    for (NodeId i = 0; i < g.n_nodes(); ++i) {
      auto ids = g.out().row_edges(i);
      local.clear();
      for (auto e : ids) local.push_back(w[e]);
      rng.shuffle(local);
      for (std::size_t t = 0; t < ids.size(); ++t) w[ids[t]] = local[t];
    }
  }
  return with_weights(g, std::move(w));
}

// Adds edge (i, v) whose normalized weight is epsilon. The parent's
// normalization scale is pinned so existing normalized weights are untouched.
inline WeightedDigraph perturb_epsilon(const WeightedDigraph& g, NodeId i, NodeId v,
                                       double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InputError("epsilon must lie in (0, 1]");
  if (g.n_edges() == 0) throw DegenerateGraphError("cannot perturb a graph without edges");
  const double scale = g.normalization_scale();
  return with_edge(g.with_pinned_scale(scale), i, v, epsilon * scale);
}

}  // namespace wclust
