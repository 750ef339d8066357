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
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wclust/error.hpp"

namespace wclust {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  double weight = 0.0;
};

// Raw construction input. Attribute columns are aligned with `edges`.
struct EdgeList {
  std::vector<Edge> edges;
  std::map<std::string, std::vector<double>> edge_attrs;
  // 0 means "max node id + 1".
  std::size_t n_nodes = 0;
  std::vector<std::string> node_names;
  std::map<std::string, std::vector<std::string>> node_attrs;
  // Normalization scale to use instead of the maximum weight.
  std::optional<double> pinned_scale;
};

enum class SelfLoopPolicy { drop, reject };
enum class DuplicatePolicy { keep_first, reject };

struct BuildOptions {
  SelfLoopPolicy self_loops = SelfLoopPolicy::drop;
  DuplicatePolicy duplicates = DuplicatePolicy::keep_first;

  static BuildOptions strict() {
    return {SelfLoopPolicy::reject, DuplicatePolicy::reject};
  }
};

// Compressed row storage. Rows are sorted by neighbor id; `edge_ids` maps
// each slot back to the graph's canonical edge index.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> nodes;
  std::vector<std::size_t> edge_ids;

  std::span<const NodeId> row(NodeId i) const {
    return {nodes.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  std::span<const std::size_t> row_edges(NodeId i) const {
    return {edge_ids.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  std::size_t begin(NodeId i) const { return offsets[i]; }
  std::size_t end(NodeId i) const { return offsets[i + 1]; }
  std::size_t degree(NodeId i) const { return offsets[i + 1] - offsets[i]; }

  // Slot of `j` in row `i`, if present.
  std::optional<std::size_t> find(NodeId i, NodeId j) const {
    auto r = row(i);
    auto it = std::lower_bound(r.begin(), r.end(), j);
    if (it == r.end() || *it != j) return std::nullopt;
    return offsets[i] + static_cast<std::size_t>(it - r.begin());
  }
};

// Immutable weighted graph with raw (unnormalized) weights.
//
// Directed graphs keep one edge per ordered pair. Undirected graphs keep one
// edge per unordered pair with source < target; both CSR views then list the
// pair in both directions. Self-loops are never stored.
class WeightedDigraph {
 public:
  WeightedDigraph() {
    auto d = std::make_shared<Data>();
    finish(*d);
    data_ = std::move(d);
  }

  std::size_t n_nodes() const { return data_->n_nodes; }
  std::size_t n_edges() const { return data_->edges.size(); }
  bool directed() const { return data_->directed; }
  const std::vector<Edge>& edges() const { return data_->edges; }

  const Adjacency& out() const { return data_->out; }
  const Adjacency& in() const {
    return data_->directed ? data_->in : data_->out;
  }

  std::optional<std::size_t> edge_index(NodeId u, NodeId v) const {
    if (u >= n_nodes() || v >= n_nodes()) return std::nullopt;
    auto slot = out().find(u, v);
    if (!slot) return std::nullopt;
    return out().edge_ids[*slot];
  }
  bool has_edge(NodeId u, NodeId v) const { return edge_index(u, v).has_value(); }
  std::optional<double> weight(NodeId u, NodeId v) const {
    auto e = edge_index(u, v);
    if (!e) return std::nullopt;
    return data_->edges[*e].weight;
  }

  const std::map<std::string, std::vector<double>>& edge_attrs() const {
    return data_->edge_attrs;
  }
  const std::vector<double>* edge_attr(const std::string& name) const {
    auto it = data_->edge_attrs.find(name);
    return it == data_->edge_attrs.end() ? nullptr : &it->second;
  }

  const std::vector<std::string>& node_names() const { return data_->node_names; }
  std::string node_label(NodeId i) const {
    if (i < data_->node_names.size()) return data_->node_names[i];
    return std::to_string(i);
  }
  const std::map<std::string, std::vector<std::string>>& node_attrs() const {
    return data_->node_attrs;
  }
  const std::vector<std::string>* node_attr(const std::string& name) const {
    auto it = data_->node_attrs.find(name);
    return it == data_->node_attrs.end() ? nullptr : &it->second;
  }

  double max_weight() const {
    double m = 0.0;
    for (const auto& e : data_->edges) m = std::max(m, e.weight);
    return m;
  }

  // Scale used by normalize(): a pinned value (inherited from a parent graph)
  // or the maximum raw weight.
  std::optional<double> pinned_scale() const { return data_->pinned_scale; }
  double normalization_scale() const {
    return data_->pinned_scale ? *data_->pinned_scale : max_weight();
  }

  WeightedDigraph with_pinned_scale(std::optional<double> scale) const {
    auto d = std::make_shared<Data>(*data_);
    d->pinned_scale = scale;
    return WeightedDigraph(std::move(d));
  }

  EdgeList to_edge_list() const {
    EdgeList l;
    l.edges = data_->edges;
    l.edge_attrs = data_->edge_attrs;
    l.n_nodes = data_->n_nodes;
    l.node_names = data_->node_names;
    l.node_attrs = data_->node_attrs;
    l.pinned_scale = data_->pinned_scale;
    return l;
  }

  friend WeightedDigraph build_graph(EdgeList input, bool directed,
                                     const BuildOptions& options);
  friend WeightedDigraph with_weights(const WeightedDigraph& g,
                                      std::vector<double> weights);
  friend WeightedDigraph filter_edges(const WeightedDigraph& g,
                                      const std::vector<bool>& keep);

 private:
  struct Data {
    std::size_t n_nodes = 0;
    bool directed = true;
    std::vector<Edge> edges;
    std::map<std::string, std::vector<double>> edge_attrs;
    std::vector<std::string> node_names;
    std::map<std::string, std::vector<std::string>> node_attrs;
    std::optional<double> pinned_scale;
    Adjacency out;
    Adjacency in;
  };

  explicit WeightedDigraph(std::shared_ptr<Data> d) : data_(std::move(d)) {}

  static void fill_csr(Adjacency& adj, std::size_t n,
                       const std::vector<std::pair<NodeId, NodeId>>& arcs,
                       const std::vector<std::size_t>& ids) {
    adj.offsets.assign(n + 1, 0);
    for (const auto& [a, b] : arcs) ++adj.offsets[a + 1];
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.nodes.assign(arcs.size(), 0);
    adj.edge_ids.assign(arcs.size(), 0);
    std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto slot = cursor[arcs[a].first]++;
      adj.nodes[slot] = arcs[a].second;
      adj.edge_ids[slot] = ids[a];
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<NodeId, std::size_t>> row;
      for (auto s = adj.offsets[i]; s < adj.offsets[i + 1]; ++s)
        row.emplace_back(adj.nodes[s], adj.edge_ids[s]);
      std::sort(row.begin(), row.end());
      for (std::size_t r = 0; r < row.size(); ++r) {
        adj.nodes[adj.offsets[i] + r] = row[r].first;
        adj.edge_ids[adj.offsets[i] + r] = row[r].second;
      }
    }
  }

  // Builds both CSR views from canonical, sorted, deduplicated edges.
  static void finish(Data& d) {
    std::vector<std::pair<NodeId, NodeId>> out_arcs;
    std::vector<std::size_t> out_ids;
    std::vector<std::pair<NodeId, NodeId>> in_arcs;
    std::vector<std::size_t> in_ids;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      const auto& ed = d.edges[e];
      out_arcs.emplace_back(ed.source, ed.target);
      out_ids.push_back(e);
      if (d.directed) {
        in_arcs.emplace_back(ed.target, ed.source);
        in_ids.push_back(e);
      } else {
        out_arcs.emplace_back(ed.target, ed.source);
        out_ids.push_back(e);
      }
    }
    fill_csr(d.out, d.n_nodes, out_arcs, out_ids);
    if (d.directed) {
      fill_csr(d.in, d.n_nodes, in_arcs, in_ids);
    } else {
      d.in = Adjacency{};
    }
  }

  std::shared_ptr<const Data> data_;
};

inline std::string describe_edge(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.source << ", " << e.target << ", " << e.weight << ")";
  return os.str();
}

// Validates, canonicalizes and deduplicates an edge list.
inline WeightedDigraph build_graph(EdgeList input, bool directed,
                                   const BuildOptions& options = {}) {
  const std::size_t m = input.edges.size();
  for (const auto& [name, column] : input.edge_attrs) {
    if (column.size() != m)
      throw InputError("edge attribute '" + name + "' has " +
                       std::to_string(column.size()) + " values for " +
                       std::to_string(m) + " edges");
  }

  std::size_t n = std::max(input.n_nodes, input.node_names.size());
  for (const auto& e : input.edges) {
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw InputError("invalid weight on edge " + describe_edge(e) +
                       ": weights must be finite and non-negative");
    const std::size_t hi = std::max<std::size_t>(e.source, e.target) + 1;
    if (input.n_nodes != 0 && hi > input.n_nodes)
      throw InputError("edge " + describe_edge(e) + " references node outside [0, " +
                       std::to_string(input.n_nodes) + ")");
    n = std::max(n, hi);
  }
  for (const auto& [name, column] : input.node_attrs) {
    if (column.size() != n)
      throw InputError("node attribute '" + name + "' must have one value per node");
  }

  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    auto& ed = input.edges[e];
    if (ed.source == ed.target) {
      if (options.self_loops == SelfLoopPolicy::reject)
        throw InputError("self-loop " + describe_edge(ed) + " rejected");
      continue;
    }
    if (!directed && ed.source > ed.target) std::swap(ed.source, ed.target);
    order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = input.edges[a];
    const auto& y = input.edges[b];
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });

  if (input.pinned_scale && !(std::isfinite(*input.pinned_scale) && *input.pinned_scale > 0.0))
    throw InputError("normalization scale must be finite and positive");

  auto d = std::make_shared<WeightedDigraph::Data>();
  d->pinned_scale = input.pinned_scale;
  d->n_nodes = n;
  d->directed = directed;
  d->node_names = std::move(input.node_names);
  d->node_attrs = std::move(input.node_attrs);
  for (const auto& [name, column] : input.edge_attrs) d->edge_attrs[name];

  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& ed = input.edges[order[r]];
    if (!d->edges.empty() && d->edges.back().source == ed.source &&
        d->edges.back().target == ed.target) {
      if (options.duplicates == DuplicatePolicy::reject &&
          d->edges.back().weight != ed.weight)
        throw InputError("duplicate edge " + describe_edge(ed) +
                         " conflicts with " + describe_edge(d->edges.back()));
      continue;
    }
    d->edges.push_back(ed);
    for (auto& [name, column] : d->edge_attrs)
      column.push_back(input.edge_attrs.at(name)[order[r]]);
  }
  WeightedDigraph::finish(*d);
  return WeightedDigraph(std::move(d));
}

// Same topology and attributes, new weights (aligned with g.edges()).
inline WeightedDigraph with_weights(const WeightedDigraph& g,
                                    std::vector<double> weights) {
  if (weights.size() != g.n_edges())
    throw InputError("weight vector size does not match edge count");
  auto d = std::make_shared<WeightedDigraph::Data>(*g.data_);
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (!std::isfinite(weights[e]) || weights[e] < 0.0)
      throw InputError("invalid weight " + std::to_string(weights[e]));
    d->edges[e].weight = weights[e];
  }
  return WeightedDigraph(std::move(d));
}

// Subgraph on the same node set keeping edges where keep[e] is true.
inline WeightedDigraph filter_edges(const WeightedDigraph& g,
                                    const std::vector<bool>& keep) {
  if (keep.size() != g.n_edges())
    throw InputError("edge mask size does not match edge count");
  auto d = std::make_shared<WeightedDigraph::Data>(*g.data_);
  d->edges.clear();
  for (auto& [name, column] : d->edge_attrs) column.clear();
  for (std::size_t e = 0; e < keep.size(); ++e) {
    if (!keep[e]) continue;
    d->edges.push_back(g.edges()[e]);
    for (auto& [name, column] : d->edge_attrs)
      column.push_back(g.edge_attrs().at(name)[e]);
  }
  WeightedDigraph::finish(*d);
  return WeightedDigraph(std::move(d));
}

inline WeightedDigraph transpose(const WeightedDigraph& g) {
  if (!g.directed()) return g;
  EdgeList l = g.to_edge_list();
  for (auto& e : l.edges) std::swap(e.source, e.target);
  return build_graph(std::move(l), true).with_pinned_scale(g.pinned_scale());
}

// Adds one edge. Attribute columns get `fill` for the new edge.
inline WeightedDigraph with_edge(const WeightedDigraph& g, NodeId u, NodeId v,
                                 double w, double fill = 0.0) {
  if (u == v) throw InputError("cannot add self-loop on node " + std::to_string(u));
  if (u >= g.n_nodes() || v >= g.n_nodes())
    throw InputError("edge endpoint outside node range");
  if (g.has_edge(u, v))
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") already exists");
  EdgeList l = g.to_edge_list();
  l.edges.push_back({u, v, w});
  for (auto& [name, column] : l.edge_attrs) column.push_back(fill);
  return build_graph(std::move(l), g.directed(), BuildOptions::strict())
      .with_pinned_scale(g.pinned_scale());
}

inline WeightedDigraph without_edge(const WeightedDigraph& g, NodeId u, NodeId v) {
  auto e = g.edge_index(u, v);
  if (!e)
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") does not exist");
  std::vector<bool> keep(g.n_edges(), true);
  keep[*e] = false;
  return filter_edges(g, keep);
}

}  // namespace wclust
