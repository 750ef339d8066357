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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wclust/clustering.hpp"
#include "wclust/detail/kernels.hpp"
#include "wclust/error.hpp"
#include "wclust/method.hpp"
#include "wclust/normalized.hpp"

namespace wclust {

// Denominator of Barrat's fan-in/fan-out modes. `consistent` is
// s_dir (d_dir - 1), which reduces to d(d - 1) on 0/1 weights; `literal` is
// s_dir (s_dir - 1).
enum class BarratFanDenominator { consistent, literal };

struct DirectedOptions {
  BarratFanDenominator barrat_fan = BarratFanDenominator::consistent;
};

namespace detail {

inline double mode_triangle(Kernels& k, NodeId i, Mode mode, const SlotView& x,
                            const SlotView& y, const SlotView& z) {
  switch (mode) {
    case Mode::cycle: return k.cycle(i, x, y, z);
    case Mode::middleman: return k.middleman(i, x, y, z);
    case Mode::fan_in: return k.fan_in(i, x, y, z);
    case Mode::fan_out: return k.fan_out(i, x, y, z);
    default: break;
  }
  throw InputError("not a partial directed mode");
}

// sum_{j != k} a_(i-edge 1) b_(i-edge 2) over the mode's triplets.
inline double mode_triplet(Kernels& k, NodeId i, Mode mode, const SlotView& a,
                           const SlotView& b) {
  const auto& w = k.weights();
  switch (mode) {
    case Mode::cycle:
    case Mode::middleman:
      return excluded_pair_sum(w.out().row(i), k.out_row(a, i), w.in().row(i),
                               k.in_row(b, i));
    case Mode::fan_in:
      return excluded_pair_sum(w.in().row(i), k.in_row(a, i), w.in().row(i),
                               k.in_row(b, i));
    case Mode::fan_out:
      return excluded_pair_sum(w.out().row(i), k.out_row(a, i), w.out().row(i),
                               k.out_row(b, i));
    default: break;
  }
  throw InputError("not a partial directed mode");
}

inline IntensityPair partial_intensities(Kernels& k, NodeId i, Method m, Mode mode,
                                         const DirectedOptions& opts) {
  const auto& ones = k.indicator();
  switch (m) {
    case Method::binary:
      return {mode_triangle(k, i, mode, ones, ones, ones),
              mode_triplet(k, i, mode, ones, ones)};
    case Method::onnela: {
      const auto& c = k.power(1.0 / 3.0);
      return {mode_triangle(k, i, mode, c, c, c), mode_triplet(k, i, mode, ones, ones)};
    }
    case Method::zhang: {
      const auto& wv = k.power(1.0);
      return {mode_triangle(k, i, mode, wv, wv, wv), mode_triplet(k, i, mode, wv, wv)};
    }
    case Method::continuous: {
      const auto& t = k.power(2.0 / 3.0);
      const auto& r = k.power(0.5);
      return {mode_triangle(k, i, mode, t, t, t), mode_triplet(k, i, mode, r, r)};
    }
    case Method::barrat: {
      // Each triangle contributes the mean weight of its two edges at i.
      const auto& wv = k.power(1.0);
      const double tri = 0.5 * (mode_triangle(k, i, mode, wv, ones, ones) +
                                mode_triangle(k, i, mode, ones, ones, wv));
      double trip = 0.5 * (mode_triplet(k, i, mode, wv, ones) +
                           mode_triplet(k, i, mode, ones, wv));
      if (opts.barrat_fan == BarratFanDenominator::literal &&
          (mode == Mode::fan_in || mode == Mode::fan_out)) {
        Accumulator s;
        auto row = mode == Mode::fan_in ? k.in_row(wv, i) : k.out_row(wv, i);
        for (double x : row) s.add(x);
        trip = s.sum() * (s.sum() - 1.0);
      }
      return {tri, trip};
    }
    case Method::miyajima:
      break;
  }
  throw InputError("method '" + std::string(to_string(m)) +
                   "' has no directed definition");
}

inline IntensityPair directed_intensities(Kernels& k, NodeId i, Method m, Mode mode,
                                          const DirectedOptions& opts) {
  if (mode == Mode::undirected)
    throw InputError("directed clustering needs a directed mode");
  if (m == Method::miyajima)
    throw InputError("method 'miyajima' has no directed definition");
  if (mode != Mode::total) return partial_intensities(k, i, m, mode, opts);
  IntensityPair total;
  for (Mode pm : kPartialModes) total += partial_intensities(k, i, m, pm, opts);
  return total;
}

inline IntensityPair symmetrized_total(Kernels& k, NodeId i, double tri_alpha,
                                       double trip_alpha) {
  auto tri = k.symmetrized_cube_half(i, k.power(tri_alpha));
  auto u = k.union_row(i, k.power(trip_alpha));
  std::vector<NodeId> ids;
  std::vector<double> vals;
  for (const auto& [j, v] : u) {
    ids.push_back(j);
    vals.push_back(v);
  }
  return {tri, excluded_pair_sum(ids, vals, ids, vals)};
}

}  // namespace detail

// Mode intensities (sum of the four partial modes for Mode::total).
inline IntensityPair directed_intensities(const NormalizedWeights& w, NodeId i,
                                          Method m, Mode mode,
                                          const DirectedOptions& opts = {}) {
  detail::require_node(w, i);
  detail::Kernels k(w);
  return detail::directed_intensities(k, i, m, mode, opts);
}

inline std::optional<double> directed_clustering(const NormalizedWeights& w, NodeId i,
                                                 Method m, Mode mode,
                                                 const DirectedOptions& opts = {}) {
  return directed_intensities(w, i, m, mode, opts).ratio();
}

// Closed form 1/2 (W + W^T)^3_ii / sum_{j != k} (w_ij + w_ji)(w_ik + w_ki).
inline IntensityPair total_intensities_zhang(const NormalizedWeights& w, NodeId i) {
  detail::require_node(w, i);
  detail::Kernels k(w);
  return detail::symmetrized_total(k, i, 1.0, 1.0);
}

// Closed form 1/2 (W' + W'^T)^3_ii / ((s^[1/2]_tot)^2 - s_tot - 2 s_recip)
// with W' = W^[2/3]; the denominator is evaluated as the equivalent
// sum_{j != k} (sqrt w_ij + sqrt w_ji)(sqrt w_ik + sqrt w_ki).
inline IntensityPair total_intensities_continuous(const NormalizedWeights& w, NodeId i) {
  detail::require_node(w, i);
  detail::Kernels k(w);
  return detail::symmetrized_total(k, i, 2.0 / 3.0, 0.5);
}

inline std::optional<double> total_clustering_zhang(const NormalizedWeights& w, NodeId i) {
  return total_intensities_zhang(w, i).ratio();
}
inline std::optional<double> total_clustering_continuous(const NormalizedWeights& w,
                                                         NodeId i) {
  return total_intensities_continuous(w, i).ratio();
}

// Local coefficients of every node for any (method, mode). Mode::undirected
// dispatches to the undirected definitions.
inline ClusteringResult local_clustering(const NormalizedWeights& w, Method m, Mode mode,
                                         const DirectedOptions& opts = {}) {
  if (mode == Mode::undirected) return local_clustering(w, m);
  detail::Kernels k(w);
  ClusteringResult r;
  r.method = m;
  r.mode = mode;
  r.values.resize(w.n_nodes());
  for (NodeId i = 0; i < w.n_nodes(); ++i)
    r.values[i] = detail::directed_intensities(k, i, m, mode, opts).ratio();
  return r;
}

// sum_i I_triangle,i / sum_i I_triplet,i for one directed mode.
inline std::optional<double> directed_global(const NormalizedWeights& w, Method m,
                                             Mode mode) {
  if (m != Method::binary && m != Method::zhang && m != Method::continuous)
    throw InputError("global clustering is only defined for binary, zhang and "
                     "continuous; got " + std::string(to_string(m)));
  if (mode == Mode::undirected) return global_clustering(w, m);
  detail::Kernels k(w);
  Accumulator tri, trip;
  for (NodeId i = 0; i < w.n_nodes(); ++i) {
    auto p = detail::directed_intensities(k, i, m, mode, {});
    tri.add(p.triangle);
    trip.add(p.triplet);
  }
  return IntensityPair{tri.sum(), trip.sum()}.ratio();
}

// Mean of the defined local values. Offered for every method as a separate
// statistic from the intensity-ratio global coefficient.
inline std::optional<double> mean_local(const ClusteringResult& r) {
  double s = 0.0;
  std::size_t n = 0;
  for (const auto& v : r.values) {
    if (!v) continue;
    s += *v;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return s / static_cast<double>(n);
}

}  // namespace wclust
