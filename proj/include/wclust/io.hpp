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

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "wclust/error.hpp"
#include "wclust/graph.hpp"

namespace wclust {

// Edge-list text format:
//
//   source,target,weight[,pvalue][,distance][,...]
//   a,b,0.5,0.001
//   ...
//
// Comma- or tab-separated (decided by the header line); blank lines and
// lines starting with '#' are comments, except "# normalization_scale=X",
// which pins the scale used to normalize weights (written for subgraphs that
// inherit their parent's scale). Columns after `weight` become numeric edge
// attributes. Node labels are mapped to dense ids in order of first
// appearance. Nodes without edges cannot be represented.

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == delim) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
  }
  return out;
}

inline double parse_double(const std::string& s, const std::string& where) {
  if (s.empty()) throw InputError(where + ": empty numeric field");
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw InputError(where + ": not a number: '" + s + "'");
  return x;
}

}  // namespace detail

inline EdgeList parse_edge_list(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  char delim = ',';
  EdgeList l;
  std::unordered_map<std::string, NodeId> ids;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(l.node_names.size()));
    if (inserted) l.node_names.push_back(label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    if (line.rfind("# normalization_scale=", 0) == 0) {
      std::string value = line.substr(22);
      if (!value.empty() && value.back() == '\r') value.pop_back();
      l.pinned_scale = detail::parse_double(value, where);
      continue;
    }
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    if (header.empty()) {
      delim = line.find('\t') != std::string::npos ? '\t' : ',';
      header = detail::split_fields(line, delim);
      if (header.size() < 3 || header[0] != "source" || header[1] != "target" ||
          header[2] != "weight")
        throw InputError(where + ": header must start with source,target,weight");
      for (std::size_t c = 3; c < header.size(); ++c) {
        if (header[c].empty()) throw InputError(where + ": empty column name");
        if (l.edge_attrs.count(header[c]))
          throw InputError(where + ": duplicate column '" + header[c] + "'");
        l.edge_attrs[header[c]];
      }
      continue;
    }
    auto f = detail::split_fields(line, delim);
    if (f.size() != header.size())
      throw InputError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                       std::to_string(f.size()));
    if (f[0].empty() || f[1].empty()) throw InputError(where + ": empty node label");
    const NodeId u = id_of(f[0]);
    const NodeId v = id_of(f[1]);
    l.edges.push_back({u, v, detail::parse_double(f[2], where)});
    for (std::size_t c = 3; c < header.size(); ++c)
      l.edge_attrs[header[c]].push_back(detail::parse_double(f[c], where));
  }
  if (header.empty()) throw InputError(source + ": missing header line");
  return l;
}

inline WeightedDigraph read_edge_list(const std::string& path, bool directed,
                                      const BuildOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return build_graph(parse_edge_list(in, path), directed, options);
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_edge_list(std::ostream& out, const WeightedDigraph& g) {
  if (g.pinned_scale()) out << "# normalization_scale=" << format_double(*g.pinned_scale()) << '\n';
  out << "source,target,weight";
  for (const auto& [name, column] : g.edge_attrs()) out << ',' << name;
  out << '\n';
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    const auto& ed = g.edges()[e];
    out << g.node_label(ed.source) << ',' << g.node_label(ed.target) << ','
        << format_double(ed.weight);
    for (const auto& [name, column] : g.edge_attrs()) out << ',' << format_double(column[e]);
    out << '\n';
  }
}

// FNV-1a over directedness, node count and the canonical edge list
// (endpoints and the bit patterns of weights and attributes).
inline std::uint64_t graph_hash(const WeightedDigraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t t = 0; t < n; ++t) {
      h ^= b[t];
      h *= 0x100000001b3ULL;
    }
  };
  auto mix_u64 = [&](std::uint64_t x) {
    unsigned char b[8];
    for (int t = 0; t < 8; ++t) b[t] = static_cast<unsigned char>(x >> (8 * t));
    mix(b, 8);
  };
  auto mix_double = [&](double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    mix_u64(bits);
  };
  mix_u64(g.directed() ? 1 : 0);
  mix_u64(g.n_nodes());
  for (const auto& e : g.edges()) {
    mix_u64(e.source);
    mix_u64(e.target);
    mix_double(e.weight);
  }
  for (const auto& [name, column] : g.edge_attrs()) {
    mix(name.data(), name.size());
    for (double x : column) mix_double(x);
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace wclust
