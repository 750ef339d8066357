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

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "wclust/error.hpp"
#include "wclust/graph.hpp"

namespace wclust {

// Weights divided by a positive scale (by default the maximum raw weight), so
// every entry lies in [0, 1]. Shares topology with the source graph.
class NormalizedWeights {
 public:
  const WeightedDigraph& graph() const { return graph_; }
  std::size_t n_nodes() const { return graph_.n_nodes(); }
  bool directed() const { return graph_.directed(); }
  double max_raw() const { return scale_; }

  const Adjacency& out() const { return graph_.out(); }
  const Adjacency& in() const { return graph_.in(); }

  // Indexed like graph().edges().
  const std::vector<double>& edge_weights() const { return edge_w_; }
  // Indexed like the out()/in() CSR slots.
  const std::vector<double>& out_slots() const { return out_w_; }
  const std::vector<double>& in_slots() const {
    return graph_.directed() ? in_w_ : out_w_;
  }
  std::span<const double> out_weights(NodeId i) const {
    return {out_w_.data() + out().begin(i), out().degree(i)};
  }
  std::span<const double> in_weights(NodeId i) const {
    return {in_slots().data() + in().begin(i), in().degree(i)};
  }

  // 0 when the edge is absent.
  double weight(NodeId u, NodeId v) const {
    auto slot = out().find(u, v);
    return slot ? out_w_[*slot] : 0.0;
  }

  // The normalized weights as a plain graph (pinned scale cleared).
  WeightedDigraph to_graph() const {
    return with_weights(graph_, edge_w_).with_pinned_scale(std::nullopt);
  }

  friend NormalizedWeights normalize_by(const WeightedDigraph& g, double scale);

 private:
  WeightedDigraph graph_;
  double scale_ = 1.0;
  std::vector<double> edge_w_;
  std::vector<double> out_w_;
  std::vector<double> in_w_;
};

// Divides every weight by `scale`; all raw weights must be <= scale.
inline NormalizedWeights normalize_by(const WeightedDigraph& g, double scale) {
  if (g.n_edges() == 0)
    throw DegenerateGraphError("degenerate weight matrix: graph has no edges");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw DegenerateGraphError("degenerate weight matrix: all weights are zero");
  NormalizedWeights nw;
  nw.graph_ = g;
  nw.scale_ = scale;
  nw.edge_w_.resize(g.n_edges());
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    const double raw = g.edges()[e].weight;
    if (raw > scale)
      throw InputError("weight " + std::to_string(raw) +
                       " exceeds normalization scale " + std::to_string(scale));
    nw.edge_w_[e] = raw == scale ? 1.0 : raw / scale;
  }
  nw.out_w_.resize(g.out().edge_ids.size());
  for (std::size_t s = 0; s < nw.out_w_.size(); ++s)
    nw.out_w_[s] = nw.edge_w_[g.out().edge_ids[s]];
  if (g.directed()) {
    nw.in_w_.resize(g.in().edge_ids.size());
    for (std::size_t s = 0; s < nw.in_w_.size(); ++s)
      nw.in_w_[s] = nw.edge_w_[g.in().edge_ids[s]];
  }
  return nw;
}

// w_ij = raw_ij / scale, where scale is the pinned scale if the graph carries
// one and the maximum raw weight otherwise.
inline NormalizedWeights normalize(const WeightedDigraph& g) {
  if (g.n_edges() == 0)
    throw DegenerateGraphError("degenerate weight matrix: graph has no edges");
  return normalize_by(g, g.normalization_scale());
}

// w^alpha on normalized weights, with 0^alpha = 0 for alpha > 0.
inline double weight_pow(double w, double alpha) {
  if (w == 0.0) return 0.0;
  if (alpha == 1.0) return w;
  if (alpha == 0.5) return std::sqrt(w);
  return std::pow(w, alpha);
}

}  // namespace wclust
