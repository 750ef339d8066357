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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wclust/analysis.hpp"
#include "wclust/closure.hpp"
#include "wclust/compare.hpp"
#include "wclust/export.hpp"
#include "wclust/io.hpp"
#include "wclust/method.hpp"

namespace wclust {

// Builders turning results into export tables.

inline void add_graph_metadata(Table& t, const WeightedDigraph& g,
                               std::optional<std::uint64_t> seed) {
  t.metadata.emplace_back("graph_hash", hex64(graph_hash(g)));
  t.metadata.emplace_back("seed", seed ? std::to_string(*seed) : "none");
}

// One row per (node, method, mode); columns node,method,mode,value.
inline Table metric_table(const WeightedDigraph& g, const std::vector<ClusteringResult>& results,
                          std::optional<std::uint64_t> seed = std::nullopt) {
  Table t;
  t.kind = "clustering";
  add_graph_metadata(t, g, seed);
  t.columns = {"node", "method", "mode", "value"};
  for (NodeId i = 0; i < g.n_nodes(); ++i)
    for (const auto& r : results)
      t.add_row({g.node_label(i), std::string(to_string(r.method)), std::string(to_string(r.mode)),
                 r.values.at(i)});
  return t;
}

struct ClosureColumn {
  ClosureVariant variant;
  std::vector<std::optional<double>> values;
};

inline Table closure_table(const WeightedDigraph& g, const std::vector<ClosureColumn>& cols,
                           std::optional<std::uint64_t> seed = std::nullopt) {
  Table t;
  t.kind = "closure";
  add_graph_metadata(t, g, seed);
  t.columns = {"node", "style", "pattern", "value"};
  for (NodeId i = 0; i < g.n_nodes(); ++i)
    for (const auto& c : cols)
      t.add_row({g.node_label(i), std::string(to_string(c.variant.style)),
                 std::string(to_string(c.variant.pattern)), c.values.at(i)});
  return t;
}

// Global statistics: intensity-ratio global coefficient where defined and
// the mean of local values for every method.
inline Table global_table(const WeightedDigraph& g, const std::vector<ClusteringResult>& results,
                          std::optional<std::uint64_t> seed = std::nullopt) {
  Table t;
  t.kind = "clustering_global";
  add_graph_metadata(t, g, seed);
  t.columns = {"method", "mode", "global", "mean_local"};
  for (const auto& r : results)
    t.add_row({std::string(to_string(r.method)), std::string(to_string(r.mode)), r.global_value,
               mean_local(r)});
  return t;
}

inline Table comparison_table(const ComparisonReport& r) {
  Table t;
  t.kind = "comparison";
  t.metadata.emplace_back("correlation", r.spearman ? "spearman" : "pearson");
  t.metadata.emplace_back("n_pairs", std::to_string(r.n_pairs));
  t.columns = {"statistic", "group", "value_a", "value_b"};
  t.add_row({std::string("r_squared"), std::string(""), std::optional<double>(r.r_squared),
             std::optional<double>()});
  for (const auto& [pct, frac] : r.topk_retention)
    t.add_row({"top" + std::to_string(pct) + "_retention", std::string(""),
               std::optional<double>(frac), std::optional<double>()});
  for (const auto& [group, ranks] : r.rank_table)
    t.add_row({std::string("median_rank"), group, std::optional<double>(ranks.median_rank_a),
               std::optional<double>(ranks.median_rank_b)});
  return t;
}

inline Table spurious_table(const SpuriousReport& r, const ScenarioConfig& c) {
  Table t;
  t.kind = "spurious";
  t.metadata.emplace_back("seed", std::to_string(c.seed));
  t.metadata.emplace_back("generator", c.generator);
  t.metadata.emplace_back("mode", std::string(to_string(r.mode)));
  t.metadata.emplace_back("realizations", std::to_string(r.realizations));
  t.metadata.emplace_back("truth_edges", std::to_string(r.truth_edges));
  t.metadata.emplace_back("mean_noise_edges", format_double(r.mean_noise_edges));
  t.columns = {"method", "realization", "r_squared"};
  for (const auto& m : r.methods) {
    for (std::size_t k = 0; k < m.r_squared.size(); ++k)
      t.add_row({std::string(to_string(m.method)), static_cast<std::int64_t>(k),
                 std::optional<double>(m.r_squared[k])});
    t.add_row({std::string(to_string(m.method)), std::string("mean"),
               std::optional<double>(m.mean_r_squared)});
  }
  return t;
}

// Per-node samples (original, shuffled mean) followed by one summary row per
// (method, mode) with node "*summary*".
inline Table shuffle_table(const WeightedDigraph& g, const ShuffleReport& r) {
  Table t;
  t.kind = "shuffle";
  add_graph_metadata(t, g, r.seed);
  t.metadata.emplace_back("scope", std::string(to_string(r.scope)));
  t.metadata.emplace_back("realizations", std::to_string(r.realizations));
  t.columns = {"node", "method", "mode", "original", "shuffled_mean", "label"};
  for (const auto& c : r.cells)
    for (NodeId i = 0; i < g.n_nodes(); ++i)
      t.add_row({g.node_label(i), std::string(to_string(c.method)),
                 std::string(to_string(c.mode)), c.original[i], c.shuffled_mean[i],
                 std::string("")});
  for (const auto& c : r.cells)
    t.add_row({std::string("*summary*"), std::string(to_string(c.method)),
               std::string(to_string(c.mode)), std::optional<double>(c.frac_above),
               std::optional<double>(c.frac_below), c.label});
  return t;
}

}  // namespace wclust
