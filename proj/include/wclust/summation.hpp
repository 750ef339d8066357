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

#include <cstddef>
#include <span>
#include <vector>

namespace wclust {

// Sums of up to this many terms are accumulated left to right.
inline constexpr std::size_t kPairwiseThreshold = 1024;

namespace detail {

inline double pairwise_sum_impl(const double* p, std::size_t n) {
  if (n <= 128) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(p, half) + pairwise_sum_impl(p + half, n - half);
}

}  // namespace detail

inline double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= kPairwiseThreshold) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  return detail::pairwise_sum_impl(terms.data(), terms.size());
}

// Buffers terms so that long per-node sums use pairwise summation.
class Accumulator {
 public:
  void add(double term) { terms_.push_back(term); }
  double sum() const { return pairwise_sum(terms_); }
  void clear() { terms_.clear(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<double> terms_;
};

}  // namespace wclust
