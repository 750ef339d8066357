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
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "wclust/error.hpp"
#include "wclust/generators.hpp"
#include "wclust/graph.hpp"

namespace wclust {

// Flat key=value scenario description. Lines starting with '#' are comments.
//
//   generator = watts_strogatz_directed   # or watts_strogatz, erdos_renyi,
//                                         # scale_free, core_periphery
//   seed      = 42
//   weights   = uniform:0.5,1.5          # see parse_weight_law
//   N = 500
//   k = 20
//   p = 0.03
//   r = 1
//
// Generator parameters: N, k, p, r (Watts-Strogatz), density (Erdos-Renyi),
// m (scale-free), directed (true/false; Watts-Strogatz and core-periphery
// fix their own). Keys prefixed with "noise." describe the noise graph of the
// spurious-edge experiment (noise.generator, noise.density, noise.m,
// noise.weights); "realizations" sets its repetition count.
struct ScenarioConfig {
  std::string generator = "watts_strogatz_directed";
  std::uint64_t seed = 0;
  WeightLaw weight_law = WeightLaw::uniform(0.0, 1.0);
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) > 0; }

  double number(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw InputError("scenario is missing '" + key + "'");
    try {
      std::size_t used = 0;
      const double x = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return x;
    } catch (const std::exception&) {
      throw InputError("scenario key '" + key + "' is not a number: '" + it->second + "'");
    }
  }
  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::size_t count(const std::string& key) const {
    const double x = number(key);
    if (!(x >= 0.0) || x != std::floor(x) || x > 1e12)
      throw InputError("scenario key '" + key + "' must be a non-negative integer");
    return static_cast<std::size_t>(x);
  }
  std::size_t count(const std::string& key, std::size_t fallback) const {
    return has(key) ? count(key) : fallback;
  }

  bool flag(const std::string& key, bool fallback) const {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw InputError("scenario key '" + key + "' must be true or false");
  }

  // The "noise." block as a scenario of its own on the same node count.
  ScenarioConfig noise() const {
    ScenarioConfig c;
    c.seed = seed;
    for (const auto& [k, v] : params) {
      if (k.rfind("noise.", 0) != 0) continue;
      const std::string sub = k.substr(6);
      if (sub == "generator") c.generator = v;
      else if (sub == "weights") c.weight_law = parse_weight_law(v);
      else c.params[sub] = v;
    }
    if (!has("noise.generator")) throw InputError("scenario has no noise.generator");
    if (has("N")) c.params["N"] = params.at("N");
    return c;
  }

  std::string serialize() const {
    std::ostringstream os;
    os << "generator=" << generator << "\nseed=" << seed << "\nweights="
       << weight_law.to_string() << "\n";
    for (const auto& [k, v] : params) os << k << "=" << v << "\n";
    return os.str();
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline const std::set<std::string>& scenario_keys() {
  static const std::set<std::string> keys = {
      "N", "k", "p", "r", "density", "m", "directed", "realizations",
      "noise.generator", "noise.weights", "noise.density", "noise.m"};
  return keys;
}

}  // namespace detail

inline ScenarioConfig parse_scenario(std::istream& in, const std::string& source = "<scenario>") {
  ScenarioConfig c;
  std::string line;
  std::size_t lineno = 0;
  bool have_generator = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError(source + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key == "generator") {
      c.generator = value;
      have_generator = true;
    } else if (key == "seed") {
      try {
        std::size_t used = 0;
        c.seed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw InputError(source + ":" + std::to_string(lineno) + ": bad seed '" + value + "'");
      }
    } else if (key == "weights") {
      c.weight_law = parse_weight_law(value);
    } else if (detail::scenario_keys().count(key)) {
      c.params[key] = value;
    } else {
      throw InputError(source + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_generator) throw InputError(source + ": scenario has no generator");
  return c;
}

inline ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  return parse_scenario(in, path);
}

// Builds the scenario's graph. `seed` overrides the configured seed.
inline WeightedDigraph generate(const ScenarioConfig& c, std::uint64_t seed) {
  const std::string& g = c.generator;
  if (g == "core_periphery") return gen_core_periphery(seed);
  if (g == "watts_strogatz_directed" || g == "watts_strogatz") {
    const bool directed = g == "watts_strogatz_directed";
    return gen_watts_strogatz(c.count("N"), c.count("k"), c.number("p"),
                              directed ? c.number("r", 1.0) : 0.0, seed, c.weight_law,
                              directed);
  }
  if (g == "erdos_renyi")
    return gen_er(c.count("N"), c.number("density"), seed, c.weight_law,
                  c.flag("directed", true));
  if (g == "scale_free")
    return gen_scale_free(c.count("N"), c.count("m"), seed, c.weight_law,
                          c.flag("directed", true));
  throw InputError("unknown generator '" + g + "'");
}

inline WeightedDigraph generate(const ScenarioConfig& c) { return generate(c, c.seed); }

}  // namespace wclust
