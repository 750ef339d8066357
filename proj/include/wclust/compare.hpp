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
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wclust/error.hpp"

namespace wclust {

using OptionalValues = std::vector<std::optional<double>>;

inline constexpr int kTopKPercents[] = {5, 10, 25, 100};

struct GroupRanks {
  std::size_t size = 0;
  double median_rank_a = 0.0;
  double median_rank_b = 0.0;
};

struct ComparisonReport {
  double r_squared = 0.0;
  std::size_t n_pairs = 0;
  bool spearman = false;
  // percent -> retained fraction
  std::map<int, double> topk_retention;
  // group label -> median ranks (1 = largest value); empty without groups
  std::map<std::string, GroupRanks> rank_table;
};

struct CompareOptions {
  bool spearman = false;
  // Optional per-node group labels for the rank table.
  const std::vector<std::string>* groups = nullptr;
};

namespace detail {

// Average ranks (1-based, ascending) with ties sharing their mean rank.
inline std::vector<double> average_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s;
    while (e + 1 < order.size() && x[order[e + 1]] == x[order[s]]) ++e;
    const double r = 0.5 * static_cast<double>(s + e) + 1.0;
    for (std::size_t t = s; t <= e; ++t) rank[order[t]] = r;
    s = e + 1;
  }
  return rank;
}

inline double squared_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    sxy += (x[t] - mx) * (y[t] - my);
    sxx += (x[t] - mx) * (x[t] - mx);
    syy += (y[t] - my) * (y[t] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return x == y ? 1.0 : 0.0;
  return std::min(1.0, sxy * sxy / (sxx * syy));
}

// Node ids sorted by decreasing value, ties by increasing id; undefined
// values go last.
inline std::vector<std::size_t> descending_order(const OptionalValues& v,
                                                 const std::vector<std::size_t>& universe) {
  std::vector<std::size_t> order = universe;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (v[a].has_value() != v[b].has_value()) return v[a].has_value();
    if (v[a] && *v[a] != *v[b]) return *v[a] > *v[b];
    return a < b;
  });
  return order;
}

inline double median(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  return n % 2 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

}  // namespace detail

// Compares per-node values b against reference a.
//
// r_squared: squared Pearson correlation (of ranks with spearman) over nodes
// where both are defined. If either sample is constant the result is 1 when
// the samples are identical and 0 otherwise.
//
// Top-k retention uses a as reference: over the nodes where a is defined,
// A holds the ceil(k% n) largest a-values and B the same number of largest
// b-values (undefined b ranks last, ties by node id); retention = |A ∩ B| /
// |A|. Swapping a and b changes the node universe, so the statistic is
// directional.
inline ComparisonReport compare(const OptionalValues& a, const OptionalValues& b,
                                const CompareOptions& opts = {}) {
  if (a.size() != b.size())
    throw InputError("compared vectors differ in length (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  std::vector<double> xa, xb;
  std::vector<std::size_t> defined_a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) defined_a.push_back(i);
    if (a[i] && b[i]) {
      xa.push_back(*a[i]);
      xb.push_back(*b[i]);
    }
  }
  if (xa.size() < 3)
    throw InputError("need at least 3 nodes where both values are defined, got " +
                     std::to_string(xa.size()));
  ComparisonReport r;
  r.n_pairs = xa.size();
  r.spearman = opts.spearman;
  r.r_squared = opts.spearman
                    ? detail::squared_pearson(detail::average_ranks(xa), detail::average_ranks(xb))
                    : detail::squared_pearson(xa, xb);

  const auto order_a = detail::descending_order(a, defined_a);
  const auto order_b = detail::descending_order(b, defined_a);
  for (int pct : kTopKPercents) {
    const auto k = static_cast<std::size_t>(
        std::ceil(static_cast<double>(pct) / 100.0 * static_cast<double>(defined_a.size())));
    std::vector<char> in_a(a.size(), 0);
    for (std::size_t t = 0; t < k; ++t) in_a[order_a[t]] = 1;
    std::size_t hit = 0;
    for (std::size_t t = 0; t < k; ++t) hit += in_a[order_b[t]];
    r.topk_retention[pct] = static_cast<double>(hit) / static_cast<double>(k);
  }

  if (opts.groups) {
    if (opts.groups->size() != a.size()) throw InputError("group labels differ in length");
    std::vector<double> rank_a(a.size()), rank_b(a.size());
    for (std::size_t t = 0; t < order_a.size(); ++t) rank_a[order_a[t]] = static_cast<double>(t + 1);
    for (std::size_t t = 0; t < order_b.size(); ++t) rank_b[order_b[t]] = static_cast<double>(t + 1);
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by_group;
    for (std::size_t i : defined_a) {
      auto& [ra, rb] = by_group[(*opts.groups)[i]];
      ra.push_back(rank_a[i]);
      rb.push_back(rank_b[i]);
    }
    for (auto& [g, ranks] : by_group)
      r.rank_table[g] = {ranks.first.size(), detail::median(ranks.first),
                         detail::median(ranks.second)};
  }
  return r;
}

}  // namespace wclust
