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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wclust/normalized.hpp"
#include "wclust/summation.hpp"

namespace wclust::detail {

// Transformed weights aligned with the out/in CSR slots.
struct SlotView {
  std::vector<double> out;
  std::vector<double> in;
};

// Per-graph scratch state for the sparse kernels: cached weight transforms
// and a dense marker row. Not thread-safe; use one per thread.
class Kernels {
 public:
  explicit Kernels(const NormalizedWeights& w)
      : w_(w), mark_(w.n_nodes(), 0.0) {}

  const NormalizedWeights& weights() const { return w_; }

  // Dense per-node row for callers with their own kernels. Must be left
  // all-zero after use.
  std::vector<double>& scratch() { return mark_; }

  // Adjacency indicator: 1 on every stored edge, including zero weights.
  const SlotView& indicator() {
    if (!indicator_) {
      indicator_ = SlotView{std::vector<double>(w_.out_slots().size(), 1.0),
                            std::vector<double>(w_.in_slots().size(), 1.0)};
    }
    return *indicator_;
  }

  const SlotView& power(double alpha) {
    auto it = powers_.find(alpha);
    if (it != powers_.end()) return it->second;
    SlotView v;
    v.out.reserve(w_.out_slots().size());
    for (double x : w_.out_slots()) v.out.push_back(pow_(x, alpha));
    v.in.reserve(w_.in_slots().size());
    for (double x : w_.in_slots()) v.in.push_back(pow_(x, alpha));
    return powers_.emplace(alpha, std::move(v)).first->second;
  }

  std::span<const double> out_row(const SlotView& v, NodeId i) const {
    return {v.out.data() + w_.out().begin(i), w_.out().degree(i)};
  }
  std::span<const double> in_row(const SlotView& v, NodeId i) const {
    return {v.in.data() + w_.in().begin(i), w_.in().degree(i)};
  }

  // sum_{j,k} X_ij Y_jk Z_ki
  double cycle(NodeId i, const SlotView& x, const SlotView& y, const SlotView& z) {
    scatter_in(i, z);
    const auto& out = w_.out();
    outer_.clear();
    for (auto s = out.begin(i); s < out.end(i); ++s) {
      if (x.out[s] == 0.0) continue;
      const NodeId j = out.nodes[s];
      outer_.add(x.out[s] * out_dot(j, y));
    }
    unscatter_in(i);
    return outer_.sum();
  }

  // sum_{j,k} X_ij Y_kj Z_ki
  double middleman(NodeId i, const SlotView& x, const SlotView& y, const SlotView& z) {
    scatter_in(i, z);
    const auto& out = w_.out();
    outer_.clear();
    for (auto s = out.begin(i); s < out.end(i); ++s) {
      if (x.out[s] == 0.0) continue;
      const NodeId j = out.nodes[s];
      outer_.add(x.out[s] * in_dot(j, y));
    }
    unscatter_in(i);
    return outer_.sum();
  }

  // sum_{j,k} X_ji Y_jk Z_ki
  double fan_in(NodeId i, const SlotView& x, const SlotView& y, const SlotView& z) {
    scatter_in(i, z);
    const auto& in = w_.in();
    outer_.clear();
    for (auto s = in.begin(i); s < in.end(i); ++s) {
      if (x.in[s] == 0.0) continue;
      const NodeId j = in.nodes[s];
      outer_.add(x.in[s] * out_dot(j, y));
    }
    unscatter_in(i);
    return outer_.sum();
  }

  // sum_{j,k} X_ij Y_jk Z_ik
  double fan_out(NodeId i, const SlotView& x, const SlotView& y, const SlotView& z) {
    const auto& out = w_.out();
    for (auto s = out.begin(i); s < out.end(i); ++s) mark_[out.nodes[s]] = z.out[s];
    outer_.clear();
    for (auto s = out.begin(i); s < out.end(i); ++s) {
      if (x.out[s] == 0.0) continue;
      const NodeId j = out.nodes[s];
      outer_.add(x.out[s] * out_dot(j, y));
    }
    for (auto s = out.begin(i); s < out.end(i); ++s) mark_[out.nodes[s]] = 0.0;
    return outer_.sum();
  }

  // One half of (F + F^T)^3_ii where F is the transformed weight matrix.
  double symmetrized_cube_half(NodeId i, const SlotView& f) {
    auto u = union_row(i, f);
    for (const auto& [k, val] : u) mark_[k] = val;
    const auto& out = w_.out();
    const auto& in = w_.in();
    outer_.clear();
    for (const auto& [j, uij] : u) {
      if (uij == 0.0) continue;
      inner_.clear();
      for (auto t = out.begin(j); t < out.end(j); ++t)
        inner_.add(f.out[t] * mark_[out.nodes[t]]);
      if (w_.directed()) {
        for (auto t = in.begin(j); t < in.end(j); ++t)
          inner_.add(f.in[t] * mark_[in.nodes[t]]);
      } else {
        // Undirected rows already hold both directions; F + F^T = 2F.
        for (auto t = out.begin(j); t < out.end(j); ++t)
          inner_.add(f.out[t] * mark_[out.nodes[t]]);
      }
      outer_.add(uij * inner_.sum());
    }
    for (const auto& [k, val] : u) mark_[k] = 0.0;
    return 0.5 * outer_.sum();
  }

  // Neighbors of i in either direction with u_j = f(w_ij) + f(w_ji).
  std::vector<std::pair<NodeId, double>> union_row(NodeId i, const SlotView& f) const {
    std::vector<std::pair<NodeId, double>> u;
    auto on = w_.out().row(i);
    auto ov = out_row(f, i);
    if (!w_.directed()) {
      for (std::size_t p = 0; p < on.size(); ++p) u.emplace_back(on[p], 2.0 * ov[p]);
      return u;
    }
    auto inn = w_.in().row(i);
    auto iv = in_row(f, i);
    std::size_t p = 0, q = 0;
    while (p < on.size() || q < inn.size()) {
      if (q == inn.size() || (p < on.size() && on[p] < inn[q])) {
        u.emplace_back(on[p], ov[p]);
        ++p;
      } else if (p == on.size() || inn[q] < on[p]) {
        u.emplace_back(inn[q], iv[q]);
        ++q;
      } else {
        u.emplace_back(on[p], ov[p] + iv[q]);
        ++p;
        ++q;
      }
    }
    return u;
  }

  // sum_{j in out(i)} X_ij * sum_{k in out(j), k != i} X_jk
  double out_walks(NodeId i, const SlotView& x) {
    const auto& out = w_.out();
    outer_.clear();
    for (auto s = out.begin(i); s < out.end(i); ++s) {
      if (x.out[s] == 0.0) continue;
      const NodeId j = out.nodes[s];
      inner_.clear();
      for (auto t = out.begin(j); t < out.end(j); ++t)
        if (out.nodes[t] != i) inner_.add(x.out[t]);
      outer_.add(x.out[s] * inner_.sum());
    }
    return outer_.sum();
  }

  // sum_{j in in(i)} X_ji * sum_{k in in(j), k != i} X_kj
  double in_walks(NodeId i, const SlotView& x) {
    const auto& in = w_.in();
    outer_.clear();
    for (auto s = in.begin(i); s < in.end(i); ++s) {
      if (x.in[s] == 0.0) continue;
      const NodeId j = in.nodes[s];
      inner_.clear();
      for (auto t = in.begin(j); t < in.end(j); ++t)
        if (in.nodes[t] != i) inner_.add(x.in[t]);
      outer_.add(x.in[s] * inner_.sum());
    }
    return outer_.sum();
  }

 private:
  static double pow_(double x, double alpha) { return weight_pow(x, alpha); }

  void scatter_in(NodeId i, const SlotView& z) {
    const auto& in = w_.in();
    for (auto s = in.begin(i); s < in.end(i); ++s) mark_[in.nodes[s]] = z.in[s];
  }
  void unscatter_in(NodeId i) {
    const auto& in = w_.in();
    for (auto s = in.begin(i); s < in.end(i); ++s) mark_[in.nodes[s]] = 0.0;
  }
  double out_dot(NodeId j, const SlotView& y) {
    const auto& out = w_.out();
    inner_.clear();
    for (auto t = out.begin(j); t < out.end(j); ++t) {
      const double m = mark_[out.nodes[t]];
      if (m != 0.0) inner_.add(y.out[t] * m);
    }
    return inner_.sum();
  }
  double in_dot(NodeId j, const SlotView& y) {
    const auto& in = w_.in();
    inner_.clear();
    for (auto t = in.begin(j); t < in.end(j); ++t) {
      const double m = mark_[in.nodes[t]];
      if (m != 0.0) inner_.add(y.in[t] * m);
    }
    return inner_.sum();
  }

  const NormalizedWeights& w_;
  std::vector<double> mark_;
  Accumulator outer_;
  Accumulator inner_;
  std::optional<SlotView> indicator_;
  std::map<double, SlotView> powers_;
};

// sum over (p, q) with a_ids[p] != b_ids[q] of a_vals[p] * b_vals[q].
// Both id sequences must be sorted. The excluded term is removed with
// prefix/suffix sums rather than by subtraction.
inline double excluded_pair_sum(std::span<const NodeId> a_ids,
                                std::span<const double> a_vals,
                                std::span<const NodeId> b_ids,
                                std::span<const double> b_vals) {
  const std::size_t nb = b_ids.size();
  std::vector<double> prefix(nb + 1, 0.0), suffix(nb + 1, 0.0);
  for (std::size_t q = 0; q < nb; ++q) prefix[q + 1] = prefix[q] + b_vals[q];
  for (std::size_t q = nb; q-- > 0;) suffix[q] = suffix[q + 1] + b_vals[q];
  Accumulator acc;
  std::size_t q = 0;
  for (std::size_t p = 0; p < a_ids.size(); ++p) {
    while (q < nb && b_ids[q] < a_ids[p]) ++q;
    const double excl =
        (q < nb && b_ids[q] == a_ids[p]) ? prefix[q] + suffix[q + 1] : suffix[0];
    acc.add(a_vals[p] * excl);
  }
  return acc.sum();
}

}  // namespace wclust::detail
