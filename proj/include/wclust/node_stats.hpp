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

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "wclust/error.hpp"
#include "wclust/normalized.hpp"
#include "wclust/summation.hpp"

namespace wclust {

// Exponents for which NodeStats caches fractional strengths.
inline constexpr std::array<double, 4> kStrengthExponents = {0.5, 2.0 / 3.0, 1.0, 2.0};

enum class Direction { out, in };

// s^[alpha]_i = sum_j w_ij^alpha over outgoing (or incoming) edges.
inline double fractional_strength(const NormalizedWeights& w, NodeId i,
                                  double alpha, Direction dir = Direction::out) {
  auto ws = dir == Direction::out ? w.out_weights(i) : w.in_weights(i);
  Accumulator acc;
  for (double x : ws) acc.add(weight_pow(x, alpha));
  return acc.sum();
}

// Degrees and strengths of one node on normalized weights. For undirected
// graphs in/out coincide and the totals equal the plain degree and strength.
struct NodeStats {
  std::size_t d_in = 0;
  std::size_t d_out = 0;
  std::size_t d_tot = 0;
  std::size_t d_recip = 0;
  double s_in = 0.0;
  double s_out = 0.0;
  double s_tot = 0.0;
  // sum_j sqrt(w_ij w_ji)
  double s_recip = 0.0;
  // sum_j w_ij w_ji
  double s_recip_sq = 0.0;
  // sum_j (w_ij + w_ji) / 2 over reciprocated pairs
  double s_recip_barrat = 0.0;
  std::array<double, 4> s_alpha_in{};
  std::array<double, 4> s_alpha_out{};

  double strength_pow(double alpha, Direction dir = Direction::out) const {
    for (std::size_t a = 0; a < kStrengthExponents.size(); ++a) {
      if (kStrengthExponents[a] == alpha)
        return dir == Direction::out ? s_alpha_out[a] : s_alpha_in[a];
    }
    throw InputError("fractional strength not cached for alpha = " +
                     std::to_string(alpha) + "; use fractional_strength()");
  }
};

inline NodeStats node_stats(const NormalizedWeights& w, NodeId i) {
  if (i >= w.n_nodes())
    throw InputError("node " + std::to_string(i) + " out of range");
  NodeStats st;
  auto out_n = w.out().row(i);
  auto in_n = w.in().row(i);
  auto out_w = w.out_weights(i);
  auto in_w = w.in_weights(i);
  st.d_out = out_n.size();
  st.d_in = in_n.size();

  for (std::size_t a = 0; a < kStrengthExponents.size(); ++a) {
    st.s_alpha_out[a] = fractional_strength(w, i, kStrengthExponents[a], Direction::out);
    st.s_alpha_in[a] = fractional_strength(w, i, kStrengthExponents[a], Direction::in);
  }
  st.s_out = st.s_alpha_out[2];
  st.s_in = st.s_alpha_in[2];

  // Merge the sorted rows to find reciprocated neighbors.
  Accumulator recip, recip_sq, recip_b;
  std::size_t p = 0, q = 0;
  while (p < out_n.size() && q < in_n.size()) {
    if (out_n[p] < in_n[q]) {
      ++p;
    } else if (in_n[q] < out_n[p]) {
      ++q;
    } else {
      ++st.d_recip;
      recip.add(std::sqrt(out_w[p] * in_w[q]));
      recip_sq.add(out_w[p] * in_w[q]);
      recip_b.add(0.5 * (out_w[p] + in_w[q]));
      ++p;
      ++q;
    }
  }
  st.s_recip = recip.sum();
  st.s_recip_sq = recip_sq.sum();
  st.s_recip_barrat = recip_b.sum();

  if (w.directed()) {
    st.d_tot = st.d_in + st.d_out;
    st.s_tot = st.s_in + st.s_out;
  } else {
    st.d_tot = st.d_out;
    st.s_tot = st.s_out;
  }
  return st;
}

}  // namespace wclust
