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
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wclust/compare.hpp"
#include "wclust/directed.hpp"
#include "wclust/error.hpp"
#include "wclust/generators.hpp"
#include "wclust/graph.hpp"
#include "wclust/method.hpp"
#include "wclust/normalized.hpp"
#include "wclust/scenario.hpp"

namespace wclust {

// Keeps edges whose attribute `attr` is strictly below `max_value`. Unless
// `renormalize` is set, the subgraph keeps the parent's normalization scale
// so its coefficients stay comparable with the parent's.
inline WeightedDigraph threshold(const WeightedDigraph& g, const std::string& attr,
                                 double max_value, bool renormalize = false) {
  const auto* column = g.edge_attr(attr);
  if (!column) throw InputError("edge attribute '" + attr + "' not present");
  std::vector<bool> keep(g.n_edges());
  for (std::size_t e = 0; e < keep.size(); ++e) keep[e] = (*column)[e] < max_value;
  auto sub = filter_edges(g, keep);
  if (renormalize) return sub.with_pinned_scale(std::nullopt);
  if (g.n_edges() == 0) return sub;
  return sub.with_pinned_scale(g.normalization_scale());
}

// Local coefficients on raw graph g for any (method, mode).
inline OptionalValues coefficients(const WeightedDigraph& g, Method m, Mode mode,
                                   const DirectedOptions& opts = {}) {
  return local_clustering(normalize(g), m, mode, opts).values;
}

inline Mode natural_mode(const WeightedDigraph& g) {
  return g.directed() ? Mode::total : Mode::undirected;
}

// ---------------------------------------------------------------------------
// Spurious-edge experiment: ground truth vs ground truth + noise edges.

struct SpuriousMethodResult {
  Method method = Method::continuous;
  std::vector<double> r_squared;  // one per realization
  double mean_r_squared = 0.0;
  double sd_r_squared = 0.0;
  OptionalValues truth;
  OptionalValues last_measured;  // values of the final realization
};

struct SpuriousReport {
  Mode mode = Mode::total;
  std::size_t realizations = 0;
  std::size_t truth_edges = 0;
  double mean_noise_edges = 0.0;
  std::vector<SpuriousMethodResult> methods;
};

inline constexpr Method kSpuriousMethods[] = {Method::barrat, Method::onnela, Method::zhang,
                                              Method::continuous};

// Ground truth from the scenario's generator; each realization overlays a
// fresh noise graph from the "noise." block (noise.generator = none disables
// noise). R^2 compares ground-truth and measured coefficients node by node.
inline SpuriousReport run_spurious_experiment(
    const ScenarioConfig& config,
    const std::vector<Method>& methods = {std::begin(kSpuriousMethods),
                                          std::end(kSpuriousMethods)},
    bool spearman = false) {
  const auto truth = generate(config);
  const bool no_noise =
      !config.has("noise.generator") || config.params.at("noise.generator") == "none";
  ScenarioConfig noise_cfg;
  if (!no_noise) {
    noise_cfg = config.noise();
    noise_cfg.params["N"] = std::to_string(truth.n_nodes());
    noise_cfg.params["directed"] = truth.directed() ? "true" : "false";
  }

  SpuriousReport report;
  report.mode = natural_mode(truth);
  report.realizations = config.count("realizations", 10);
  if (report.realizations == 0) throw InputError("realizations must be >= 1");
  report.truth_edges = truth.n_edges();

  for (Method m : methods) {
    SpuriousMethodResult r;
    r.method = m;
    r.truth = coefficients(truth, m, report.mode);
    report.methods.push_back(std::move(r));
  }

  const Rng root(config.seed);
  double noise_edges = 0.0;
  for (std::size_t t = 0; t < report.realizations; ++t) {
    WeightedDigraph measured = truth;
    if (!no_noise) {
      const auto tag = std::to_string(t);
      auto noise = generate(noise_cfg, root.child("noise-topology-" + tag).seed());
      measured = overlay_noise(truth, noise, noise_cfg.weight_law,
                               root.child("noise-weights-" + tag).seed());
    }
    noise_edges += static_cast<double>(measured.n_edges() - truth.n_edges());
    for (auto& r : report.methods) {
      auto values = coefficients(measured, r.method, report.mode);
      r.r_squared.push_back(compare(r.truth, values, {spearman}).r_squared);
      if (t + 1 == report.realizations) r.last_measured = std::move(values);
    }
  }
  report.mean_noise_edges = noise_edges / static_cast<double>(report.realizations);
  for (auto& r : report.methods) {
    double s = 0, ss = 0;
    for (double x : r.r_squared) s += x;
    const double n = static_cast<double>(r.r_squared.size());
    r.mean_r_squared = s / n;
    for (double x : r.r_squared) ss += (x - r.mean_r_squared) * (x - r.mean_r_squared);
    r.sd_r_squared = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Weight-shuffle null model.

struct ShuffleCell {
  Method method = Method::continuous;
  Mode mode = Mode::total;
  OptionalValues original;
  OptionalValues shuffled_mean;
  std::size_t n_points = 0;
  double frac_above = 0.0;  // original > shuffled mean
  double frac_below = 0.0;
  std::string label;        // "+", "-", "+*", "-*" or empty
};

struct ShuffleReport {
  ShuffleScope scope = ShuffleScope::global;
  std::size_t realizations = 0;
  std::uint64_t seed = 0;
  std::vector<ShuffleCell> cells;
};

// Significance label: "+" ("-") when at least 75% of the nodes lie above
// (below) the identity line, with "*" added beyond 95%.
inline std::string shuffle_label(double above, double below) {
  if (above >= 0.75) return above > 0.95 ? "+*" : "+";
  if (below >= 0.75) return below > 0.95 ? "-*" : "-";
  return "";
}

inline ShuffleReport run_shuffle_experiment(const WeightedDigraph& g, ShuffleScope scope,
                                            std::size_t realizations, std::uint64_t seed,
                                            const std::vector<Method>& methods,
                                            const std::vector<Mode>& modes) {
  if (realizations == 0) throw InputError("realizations must be >= 1");
  ShuffleReport report{scope, realizations, seed, {}};
  std::vector<std::vector<double>> sums;
  std::vector<std::vector<std::size_t>> counts;
  for (Method m : methods)
    for (Mode mode : modes) {
      ShuffleCell c;
      c.method = m;
      c.mode = mode;
      c.original = coefficients(g, m, mode);
      report.cells.push_back(std::move(c));
      sums.emplace_back(g.n_nodes(), 0.0);
      counts.emplace_back(g.n_nodes(), 0);
    }

  const Rng root(seed);
  for (std::size_t t = 0; t < realizations; ++t) {
    auto shuffled = shuffle_weights(g, scope, root.child("shuffle-" + std::to_string(t)).seed());
    auto w = normalize(shuffled);
    for (std::size_t c = 0; c < report.cells.size(); ++c) {
      auto v = local_clustering(w, report.cells[c].method, report.cells[c].mode).values;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) {
          sums[c][i] += *v[i];
          ++counts[c][i];
        }
    }
  }

  for (std::size_t c = 0; c < report.cells.size(); ++c) {
    auto& cell = report.cells[c];
    cell.shuffled_mean.resize(g.n_nodes());
    std::size_t above = 0, below = 0;
    for (std::size_t i = 0; i < g.n_nodes(); ++i) {
      if (counts[c][i] == 0) continue;
      cell.shuffled_mean[i] = sums[c][i] / static_cast<double>(counts[c][i]);
      if (!cell.original[i]) continue;
      ++cell.n_points;
      above += *cell.original[i] > *cell.shuffled_mean[i];
      below += *cell.original[i] < *cell.shuffled_mean[i];
    }
    if (cell.n_points > 0) {
      cell.frac_above = static_cast<double>(above) / static_cast<double>(cell.n_points);
      cell.frac_below = static_cast<double>(below) / static_cast<double>(cell.n_points);
    }
    cell.label = shuffle_label(cell.frac_above, cell.frac_below);
  }
  return report;
}

}  // namespace wclust
