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
#include <optional>
#include <string>

#include "wclust/detail/kernels.hpp"
#include "wclust/error.hpp"
#include "wclust/method.hpp"
#include "wclust/normalized.hpp"

namespace wclust {

namespace detail {

inline void require_undirected(const NormalizedWeights& w) {
  if (w.directed())
    throw InputError(
        "undirected clustering requested on a directed graph; use a directed "
        "mode (cycle, middleman, fan-in, fan-out, total)");
}

inline void require_node(const NormalizedWeights& w, NodeId i) {
  if (i >= w.n_nodes())
    throw InputError("node " + std::to_string(i) + " out of range");
}

inline double harmonic(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return 2.0 / (1.0 / a + 1.0 / b);
}

// Miyajima-Sakuragawa intensities with the harmonic mean h:
//   triangle h(h(w_ij, w_ik), w_jk), triplet h(h(w_ij, w_ik), 1).
inline IntensityPair miyajima_intensities(Kernels& k, NodeId i) {
  const auto& w = k.weights();
  const auto& out = w.out();
  auto& mark = k.scratch();
  auto ids = out.row(i);
  auto ws = w.out_weights(i);
  for (std::size_t p = 0; p < ids.size(); ++p) mark[ids[p]] = ws[p];

  Accumulator tri;
  for (std::size_t p = 0; p < ids.size(); ++p) {
    const NodeId j = ids[p];
    const double wij = ws[p];
    if (wij == 0.0) continue;
    auto jn = out.row(j);
    auto jw = w.out_weights(j);
    for (std::size_t t = 0; t < jn.size(); ++t) {
      const double wik = mark[jn[t]];
      if (wik != 0.0) tri.add(harmonic(harmonic(wij, wik), jw[t]));
    }
  }
  for (NodeId j : ids) mark[j] = 0.0;

  Accumulator trip;
  for (std::size_t p = 0; p < ids.size(); ++p)
    for (std::size_t q = 0; q < ids.size(); ++q)
      if (p != q) trip.add(harmonic(harmonic(ws[p], ws[q]), 1.0));
  return {tri.sum(), trip.sum()};
}

inline IntensityPair undirected_intensities(Kernels& k, NodeId i, Method m) {
  const auto& w = k.weights();
  auto ids = w.out().row(i);
  const auto& ones = k.indicator();
  auto pair_sum = [&](const SlotView& a, const SlotView& b) {
    return excluded_pair_sum(ids, k.out_row(a, i), ids, k.out_row(b, i));
  };
  switch (m) {
    case Method::binary:
      return {k.cycle(i, ones, ones, ones), pair_sum(ones, ones)};
    case Method::barrat: {
      // (W A^2)_ii over s_i (d_i - 1).
      const auto& wv = k.power(1.0);
      return {k.cycle(i, wv, ones, ones), pair_sum(wv, ones)};
    }
    case Method::onnela: {
      const auto& c = k.power(1.0 / 3.0);
      return {k.cycle(i, c, c, c), pair_sum(ones, ones)};
    }
    case Method::zhang: {
      const auto& wv = k.power(1.0);
      return {k.cycle(i, wv, wv, wv), pair_sum(wv, wv)};
    }
    case Method::continuous: {
      const auto& t = k.power(2.0 / 3.0);
      const auto& r = k.power(0.5);
      return {k.cycle(i, t, t, t), pair_sum(r, r)};
    }
    case Method::miyajima:
      return miyajima_intensities(k, i);
  }
  return {};
}

}  // namespace detail

// Per-node (triangle, triplet) intensities for an undirected definition.
inline IntensityPair local_intensities(const NormalizedWeights& w, NodeId i,
                                       Method m) {
  detail::require_undirected(w);
  detail::require_node(w, i);
  detail::Kernels k(w);
  return detail::undirected_intensities(k, i, m);
}

inline std::optional<double> clustering(const NormalizedWeights& w, NodeId i,
                                        Method m) {
  return local_intensities(w, i, m).ratio();
}

inline std::optional<double> clustering_binary(const NormalizedWeights& w, NodeId i) {
  return clustering(w, i, Method::binary);
}
inline std::optional<double> clustering_barrat(const NormalizedWeights& w, NodeId i) {
  return clustering(w, i, Method::barrat);
}
inline std::optional<double> clustering_onnela(const NormalizedWeights& w, NodeId i) {
  return clustering(w, i, Method::onnela);
}
inline std::optional<double> clustering_zhang(const NormalizedWeights& w, NodeId i) {
  return clustering(w, i, Method::zhang);
}
inline std::optional<double> clustering_continuous(const NormalizedWeights& w, NodeId i) {
  return clustering(w, i, Method::continuous);
}
inline std::optional<double> clustering_miyajima_hm(const NormalizedWeights& w, NodeId i) {
  return clustering(w, i, Method::miyajima);
}

// Barrat's coefficient written as C_bin * mean(triangle edge weight) /
// mean(edge weight). Same value as clustering_barrat up to rounding.
inline std::optional<double> clustering_barrat_mean_ratio(const NormalizedWeights& w,
                                                          NodeId i) {
  detail::require_undirected(w);
  detail::require_node(w, i);
  const std::size_t d = w.out().degree(i);
  if (d < 2) return std::nullopt;
  double s = 0.0;
  for (double x : w.out_weights(i)) s += x;
  if (s == 0.0) return std::nullopt;
  double n_tri = 0.0;
  double tri_weight = 0.0;
  auto ids = w.out().row(i);
  auto ws = w.out_weights(i);
  for (std::size_t p = 0; p < ids.size(); ++p) {
    for (std::size_t q = 0; q < ids.size(); ++q) {
      if (p == q || !w.graph().has_edge(ids[p], ids[q])) continue;
      n_tri += 1.0;
      tri_weight += 0.5 * (ws[p] + ws[q]);
    }
  }
  const double c_bin = n_tri / (static_cast<double>(d) * static_cast<double>(d - 1));
  if (n_tri == 0.0) return 0.0;
  const double mean_tri = tri_weight / n_tri;
  const double mean_all = s / static_cast<double>(d);
  return c_bin * mean_tri / mean_all;
}

// Local coefficients of every node.
inline ClusteringResult local_clustering(const NormalizedWeights& w, Method m) {
  detail::require_undirected(w);
  detail::Kernels k(w);
  ClusteringResult r;
  r.method = m;
  r.mode = Mode::undirected;
  r.values.resize(w.n_nodes());
  for (NodeId i = 0; i < w.n_nodes(); ++i)
    r.values[i] = detail::undirected_intensities(k, i, m).ratio();
  return r;
}

// sum_i I_triangle,i / sum_i I_triplet,i. Defined for the intensity-ratio
// definitions only (binary, zhang, continuous).
inline std::optional<double> global_clustering(const NormalizedWeights& w, Method m) {
  detail::require_undirected(w);
  if (m != Method::binary && m != Method::zhang && m != Method::continuous)
    throw InputError("global clustering is only defined for binary, zhang and "
                     "continuous; got " + std::string(to_string(m)));
  detail::Kernels k(w);
  Accumulator tri, trip;
  for (NodeId i = 0; i < w.n_nodes(); ++i) {
    auto p = detail::undirected_intensities(k, i, m);
    tri.add(p.triangle);
    trip.add(p.triplet);
  }
  return IntensityPair{tri.sum(), trip.sum()}.ratio();
}

}  // namespace wclust
