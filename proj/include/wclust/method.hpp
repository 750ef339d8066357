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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wclust/error.hpp"

namespace wclust {

enum class Method { binary, barrat, onnela, zhang, continuous, miyajima };

// Triangle pattern around the focal node. `undirected` is only valid on
// undirected graphs; the directed modes accept both (undirected graphs are
// read as symmetric).
enum class Mode { undirected, cycle, middleman, fan_in, fan_out, total };

inline constexpr std::array<Method, 6> kAllMethods = {
    Method::binary, Method::barrat, Method::onnela,
    Method::zhang,  Method::continuous, Method::miyajima};
inline constexpr std::array<Method, 5> kDirectedMethods = {
    Method::binary, Method::barrat, Method::onnela, Method::zhang,
    Method::continuous};
inline constexpr std::array<Mode, 4> kPartialModes = {
    Mode::cycle, Mode::middleman, Mode::fan_in, Mode::fan_out};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::binary: return "binary";
    case Method::barrat: return "barrat";
    case Method::onnela: return "onnela";
    case Method::zhang: return "zhang";
    case Method::continuous: return "continuous";
    case Method::miyajima: return "miyajima";
  }
  return "?";
}

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::undirected: return "undirected";
    case Mode::cycle: return "cycle";
    case Mode::middleman: return "middleman";
    case Mode::fan_in: return "fan-in";
    case Mode::fan_out: return "fan-out";
    case Mode::total: return "total";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  for (Method m : kAllMethods)
    if (to_string(m) == s) return m;
  if (s == "miyajima_hm") return Method::miyajima;
  throw InputError("unknown clustering method '" + std::string(s) + "'");
}

inline Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::undirected, Mode::cycle, Mode::middleman, Mode::fan_in,
                 Mode::fan_out, Mode::total})
    if (to_string(m) == s) return m;
  if (s == "fan_in") return Mode::fan_in;
  if (s == "fan_out") return Mode::fan_out;
  throw InputError("unknown clustering mode '" + std::string(s) + "'");
}

// Numerator and denominator of a local coefficient. The coefficient is
// their ratio, undefined when the triplet intensity is zero.
struct IntensityPair {
  double triangle = 0.0;
  double triplet = 0.0;

  std::optional<double> ratio() const {
    if (triplet == 0.0) return std::nullopt;
    return triangle / triplet;
  }
  IntensityPair& operator+=(const IntensityPair& o) {
    triangle += o.triangle;
    triplet += o.triplet;
    return *this;
  }
};

struct ClusteringResult {
  std::vector<std::optional<double>> values;
  Method method = Method::continuous;
  Mode mode = Mode::undirected;
  std::optional<double> global_value;
};

}  // namespace wclust
