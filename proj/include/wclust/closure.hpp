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
#include <string_view>
#include <vector>

#include "wclust/clustering.hpp"
#include "wclust/detail/kernels.hpp"
#include "wclust/error.hpp"
#include "wclust/method.hpp"

namespace wclust {

// Local closure: closed length-2 walks anchored at the node.
//   zhang:      walk intensity w_ij w_jk, closed intensity w_ij w_jk w_(closing)
//   continuous: walk intensity sqrt(w_ij w_jk), closed (w_ij w_jk w_(closing))^(2/3)
//   binary:     counts
enum class ClosureStyle { binary, zhang, continuous };

// cycle_out / fan_out follow walks i -> j -> k closed by k -> i / i -> k;
// cycle_in / fan_in follow walks k -> j -> i closed by i -> k / k -> i.
enum class ClosurePattern { undirected, cycle_out, cycle_in, fan_out, fan_in };

struct ClosureVariant {
  ClosureStyle style = ClosureStyle::continuous;
  ClosurePattern pattern = ClosurePattern::undirected;
};

inline std::string_view to_string(ClosureStyle s) {
  switch (s) {
    case ClosureStyle::binary: return "binary";
    case ClosureStyle::zhang: return "zhang";
    case ClosureStyle::continuous: return "continuous";
  }
  return "?";
}

inline std::string_view to_string(ClosurePattern p) {
  switch (p) {
    case ClosurePattern::undirected: return "undirected";
    case ClosurePattern::cycle_out: return "cycle-out";
    case ClosurePattern::cycle_in: return "cycle-in";
    case ClosurePattern::fan_out: return "fan-out";
    case ClosurePattern::fan_in: return "fan-in";
  }
  return "?";
}

inline ClosureStyle parse_closure_style(std::string_view s) {
  for (auto st : {ClosureStyle::binary, ClosureStyle::zhang, ClosureStyle::continuous})
    if (to_string(st) == s) return st;
  if (s == "zhang_style") return ClosureStyle::zhang;
  throw InputError("unknown closure style '" + std::string(s) + "'");
}

inline ClosurePattern parse_closure_pattern(std::string_view s) {
  for (auto p : {ClosurePattern::undirected, ClosurePattern::cycle_out,
                 ClosurePattern::cycle_in, ClosurePattern::fan_out,
                 ClosurePattern::fan_in})
    if (to_string(p) == s) return p;
  if (s == "co") return ClosurePattern::cycle_out;
  if (s == "ci") return ClosurePattern::cycle_in;
  if (s == "fo") return ClosurePattern::fan_out;
  if (s == "fi") return ClosurePattern::fan_in;
  throw InputError("unknown closure pattern '" + std::string(s) + "'");
}

namespace detail {

inline IntensityPair closure_intensities(Kernels& k, NodeId i, ClosureVariant v) {
  const SlotView* tri = nullptr;
  const SlotView* walk = nullptr;
  switch (v.style) {
    case ClosureStyle::binary:
      tri = walk = &k.indicator();
      break;
    case ClosureStyle::zhang:
      tri = walk = &k.power(1.0);
      break;
    case ClosureStyle::continuous:
      tri = &k.power(2.0 / 3.0);
      walk = &k.power(0.5);
      break;
  }
  switch (v.pattern) {
    case ClosurePattern::undirected:
      require_undirected(k.weights());
      return {k.cycle(i, *tri, *tri, *tri), k.out_walks(i, *walk)};
    case ClosurePattern::cycle_out:
      return {k.cycle(i, *tri, *tri, *tri), k.out_walks(i, *walk)};
    case ClosurePattern::cycle_in:
      return {k.cycle(i, *tri, *tri, *tri), k.in_walks(i, *walk)};
    case ClosurePattern::fan_out:
      return {k.fan_out(i, *tri, *tri, *tri), k.out_walks(i, *walk)};
    case ClosurePattern::fan_in:
      return {k.fan_in(i, *tri, *tri, *tri), k.in_walks(i, *walk)};
  }
  return {};
}

}  // namespace detail

inline IntensityPair closure_intensities(const NormalizedWeights& w, NodeId i,
                                         ClosureVariant v) {
  detail::require_node(w, i);
  detail::Kernels k(w);
  return detail::closure_intensities(k, i, v);
}

inline std::optional<double> closure(const NormalizedWeights& w, NodeId i,
                                     ClosureVariant v) {
  return closure_intensities(w, i, v).ratio();
}

inline std::vector<std::optional<double>> local_closure(const NormalizedWeights& w,
                                                        ClosureVariant v) {
  detail::Kernels k(w);
  std::vector<std::optional<double>> out(w.n_nodes());
  for (NodeId i = 0; i < w.n_nodes(); ++i)
    out[i] = detail::closure_intensities(k, i, v).ratio();
  return out;
}

}  // namespace wclust
