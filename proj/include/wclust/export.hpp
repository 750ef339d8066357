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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wclust/error.hpp"
#include "wclust/io.hpp"

namespace wclust {

// A table cell: text, an integer, or a real that may be undefined.
using Cell = std::variant<std::string, std::int64_t, std::optional<double>>;

// Flat result table shared by every CLI output. CSV: a "# key=value,..."
// metadata comment, a header row, then the rows; undefined reals are empty
// fields. JSON: {"spec_version": 1, "kind", "metadata", "columns", "rows"}
// with undefined reals as null. Reals use 17 significant digits.
struct Table {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
      throw std::logic_error("row width does not match column count");
    rows.push_back(std::move(row));
  }
};

enum class Format { csv, json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + s + "' (expected csv or json)");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

}  // namespace detail

inline void write_csv(std::ostream& out, const Table& t) {
  out << "#";
  for (std::size_t m = 0; m < t.metadata.size(); ++m)
    out << (m ? "," : " ") << t.metadata[m].first << "=" << t.metadata[m].second;
  out << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? "," : "") << detail::csv_field(t.columns[c]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      if (const auto* s = std::get_if<std::string>(&row[c])) out << detail::csv_field(*s);
      else if (const auto* i = std::get_if<std::int64_t>(&row[c])) out << *i;
      else if (const auto& v = std::get<std::optional<double>>(row[c])) out << format_double(*v);
    }
    out << "\n";
  }
}

inline void write_json(std::ostream& out, const Table& t) {
  out << "{\n  \"spec_version\": 1,\n  \"kind\": " << detail::json_string(t.kind)
      << ",\n  \"metadata\": {";
  for (std::size_t m = 0; m < t.metadata.size(); ++m)
    out << (m ? ", " : "") << detail::json_string(t.metadata[m].first) << ": "
        << detail::json_string(t.metadata[m].second);
  out << "},\n  \"columns\": [";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? ", " : "") << detail::json_string(t.columns[c]);
  out << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << (r ? ",\n    {" : "\n    {");
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      out << (c ? ", " : "") << detail::json_string(t.columns[c]) << ": ";
      const auto& cell = t.rows[r][c];
      if (const auto* s = std::get_if<std::string>(&cell)) {
        out << detail::json_string(*s);
      } else if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        out << *i;
      } else {
        const auto& v = std::get<std::optional<double>>(cell);
        if (v && std::isfinite(*v)) out << format_double(*v);
        else out << "null";
      }
    }
    out << "}";
  }
  out << (t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

inline void write_table(std::ostream& out, const Table& t, Format f) {
  if (f == Format::csv) write_csv(out, t);
  else write_json(out, t);
}

// Writes to `path`, or to standard output when path is empty or "-".
inline void export_table(const Table& t, Format f, const std::string& path) {
  if (path.empty() || path == "-") {
    write_table(std::cout, t, f);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_table(out, t, f);
  out.flush();
  if (!out) throw InputError("error while writing '" + path + "'");
}

}  // namespace wclust
