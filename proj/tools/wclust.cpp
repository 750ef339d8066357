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

// wclust command-line tool. Exit codes: 0 success, 2 input/config error,
// 3 degenerate graph.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wclust/wclust.hpp"

namespace {

using namespace wclust;

constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

// Options shared by most subcommands.
struct Common {
  std::string input;
  bool undirected = false;
  std::vector<std::string> methods;
  std::vector<std::string> modes;
  std::optional<std::uint64_t> seed;
  std::string output = "-";
  std::string format = "csv";
  bool renormalize = false;
  bool strict = false;
};

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("-i,--input", c.input, "Edge-list file (source,target,weight[,...])")
      ->required();
  cmd->add_flag("--strict", c.strict, "Reject self-loops and conflicting duplicate edges");
}

void add_direction(CLI::App* cmd, Common& c) {
  auto* d = cmd->add_flag("--directed", "Treat the input as directed (default)");
  auto* u = cmd->add_flag("--undirected", c.undirected, "Treat the input as undirected");
  d->excludes(u);
}

void add_output(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("-o,--output", c.output, "Output path ('-' for stdout)");
  if (with_format)
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_seed(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed (unsigned 64-bit)");
}

void add_methods(CLI::App* cmd, Common& c, const std::string& help) {
  cmd->add_option("--method", c.methods, help)
      ->check(CLI::IsMember({"binary", "barrat", "onnela", "zhang", "continuous", "miyajima",
                             "miyajima_hm"}));
  cmd->add_option("--mode", c.modes,
                  "Pattern: undirected, cycle, middleman, fan-in, fan-out, total (repeatable)");
}

WeightedDigraph load(const Common& c) {
  BuildOptions opts = c.strict ? BuildOptions::strict() : BuildOptions{};
  return read_edge_list(c.input, !c.undirected, opts);
}

std::vector<Method> methods_or(const Common& c, std::vector<Method> fallback) {
  if (c.methods.empty()) return fallback;
  std::vector<Method> out;
  for (const auto& m : c.methods) out.push_back(parse_method(m));
  return out;
}

std::vector<Mode> modes_for(const Common& c, const WeightedDigraph& g) {
  if (c.modes.empty()) return {natural_mode(g)};
  std::vector<Mode> out;
  for (const auto& m : c.modes) {
    const Mode mode = parse_mode(m);
    if (!g.directed() && mode != Mode::undirected)
      throw InputError("mode '" + m + "' needs a directed graph");
    out.push_back(mode);
  }
  return out;
}

void zero_undefined(Table& t) {
  for (auto& row : t.rows)
    for (auto& cell : row)
      if (auto* v = std::get_if<std::optional<double>>(&cell); v && !*v) *v = 0.0;
}

void write_graph(const WeightedDigraph& g, const std::string& path) {
  if (path.empty() || path == "-") {
    write_edge_list(std::cout, g);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  out.flush();
  if (!out) throw InputError("error while writing '" + path + "'");
}

NodeId resolve_node(const WeightedDigraph& g, const std::string& label) {
  const auto& names = g.node_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == label) return static_cast<NodeId>(i);
  if (names.empty()) {
    try {
      std::size_t used = 0;
      const auto id = std::stoull(label, &used);
      if (used == label.size() && id < g.n_nodes()) return static_cast<NodeId>(id);
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown node '" + label + "'");
}

// --- metric tables read back by `compare` --------------------------------

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t t = 0; t < line.size(); ++t) {
    const char ch = line[t];
    if (quoted) {
      if (ch == '"' && t + 1 < line.size() && line[t + 1] == '"') {
        cur += '"';
        ++t;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

struct LabeledValues {
  std::vector<std::string> labels;
  std::map<std::string, std::optional<double>> values;
};

// Reads the rows of a `cluster` CSV for one (method, mode).
LabeledValues read_metric_csv(const std::string& path, const std::string& method,
                              const std::string& mode) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string line;
  std::vector<std::string> header;
  LabeledValues out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv_line(line);
    if (header.empty()) {
      header = f;
      if (header != std::vector<std::string>{"node", "method", "mode", "value"})
        throw InputError(path + ": expected header node,method,mode,value");
      continue;
    }
    if (f.size() != 4)
      throw InputError(path + ":" + std::to_string(lineno) + ": expected 4 fields");
    if (f[1] != method || f[2] != mode) continue;
    std::optional<double> v;
    if (!f[3].empty()) {
      char* end = nullptr;
      v = std::strtod(f[3].c_str(), &end);
      if (end != f[3].c_str() + f[3].size())
        throw InputError(path + ":" + std::to_string(lineno) + ": bad value '" + f[3] + "'");
    }
    if (out.values.emplace(f[0], v).second) out.labels.push_back(f[0]);
  }
  if (out.labels.empty())
    throw InputError(path + ": no rows for method " + method + ", mode " + mode);
  return out;
}

std::map<std::string, std::string> read_groups(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::map<std::string, std::string> groups;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv_line(line);
    if (header) {
      header = false;
      continue;
    }
    if (f.size() != 2) throw InputError(path + ": expected node,group rows");
    groups[f[0]] = f[1];
  }
  return groups;
}

// --- subcommands ------------------------------------------------------------

int run_cluster(const Common& c, bool global, bool undefined_zero, bool barrat_literal) {
  const auto g = load(c);
  const auto w = normalize(g);
  const auto methods = methods_or(c, {Method::continuous});
  const auto modes = modes_for(c, g);
  DirectedOptions opts;
  if (barrat_literal) opts.barrat_fan = BarratFanDenominator::literal;
  std::vector<ClusteringResult> results;
  for (Method m : methods)
    for (Mode mode : modes) {
      if (mode != Mode::undirected && m == Method::miyajima)
        throw InputError("miyajima has no directed definition");
      auto r = local_clustering(w, m, mode, opts);
      if (global && (m == Method::binary || m == Method::zhang || m == Method::continuous))
        r.global_value = directed_global(w, m, mode);
      results.push_back(std::move(r));
    }
  Table t = global ? global_table(g, results, c.seed) : metric_table(g, results, c.seed);
  if (undefined_zero) zero_undefined(t);
  export_table(t, parse_format(c.format), c.output);
  return 0;
}

int run_closure(const Common& c, const std::vector<std::string>& styles,
                const std::vector<std::string>& patterns, bool undefined_zero) {
  const auto g = load(c);
  const auto w = normalize(g);
  std::vector<ClosureStyle> ss;
  for (const auto& s : styles) ss.push_back(parse_closure_style(s));
  if (ss.empty()) ss.push_back(ClosureStyle::continuous);
  std::vector<ClosurePattern> ps;
  for (const auto& p : patterns) ps.push_back(parse_closure_pattern(p));
  if (ps.empty()) {
    if (g.directed())
      ps = {ClosurePattern::cycle_out, ClosurePattern::cycle_in, ClosurePattern::fan_out,
            ClosurePattern::fan_in};
    else
      ps = {ClosurePattern::undirected};
  }
  std::vector<ClosureColumn> cols;
  for (auto s : ss)
    for (auto p : ps) cols.push_back({{s, p}, local_closure(w, {s, p})});
  Table t = closure_table(g, cols, c.seed);
  if (undefined_zero) zero_undefined(t);
  export_table(t, parse_format(c.format), c.output);
  return 0;
}

struct GenerateArgs {
  std::string scenario;
  std::string generator;
  std::string weights;
  std::map<std::string, std::string> params;
};

int run_generate(const Common& c, const GenerateArgs& a) {
  ScenarioConfig cfg;
  if (!a.scenario.empty()) {
    cfg = load_scenario(a.scenario);
  } else if (!a.generator.empty()) {
    cfg.generator = a.generator;
  } else {
    throw InputError("generate needs --scenario or --generator");
  }
  if (!a.weights.empty()) cfg.weight_law = parse_weight_law(a.weights);
  for (const auto& [k, v] : a.params)
    if (!v.empty()) cfg.params[k] = v;
  if (c.seed) cfg.seed = *c.seed;
  write_graph(generate(cfg), c.output);
  return 0;
}

int run_threshold(const Common& c, const std::string& attr, double max_value) {
  write_graph(threshold(load(c), attr, max_value, c.renormalize), c.output);
  return 0;
}

int run_perturb(const Common& c, const std::string& node, const std::string& target,
                double epsilon) {
  const auto g = load(c);
  write_graph(perturb_epsilon(g, resolve_node(g, node), resolve_node(g, target), epsilon),
              c.output);
  return 0;
}

int run_shuffle(const Common& c, const std::string& scope, std::size_t realizations) {
  const auto g = load(c);
  const auto sc = parse_shuffle_scope(scope);
  const std::uint64_t seed = c.seed.value_or(0);
  if (c.methods.empty()) {
    write_graph(shuffle_weights(g, sc, seed), c.output);
    return 0;
  }
  auto report = run_shuffle_experiment(g, sc, realizations, seed, methods_or(c, {}),
                                       modes_for(c, g));
  export_table(shuffle_table(g, report), parse_format(c.format), c.output);
  return 0;
}

int run_spurious(const Common& c, const std::string& scenario, std::optional<std::size_t> reps,
                 bool spearman) {
  auto cfg = load_scenario(scenario);
  if (c.seed) cfg.seed = *c.seed;
  if (reps) cfg.params["realizations"] = std::to_string(*reps);
  auto methods = methods_or(c, {std::begin(kSpuriousMethods), std::end(kSpuriousMethods)});
  auto report = run_spurious_experiment(cfg, methods, spearman);
  export_table(spurious_table(report, cfg), parse_format(c.format), c.output);
  return 0;
}

int run_compare(const Common& c, const std::string& a_path, const std::string& b_path,
                bool spearman, const std::string& groups_path) {
  const std::string method = c.methods.empty() ? "continuous" : c.methods.front();
  const std::string mode = c.modes.empty() ? "total" : c.modes.front();
  if (c.methods.size() > 1 || c.modes.size() > 1)
    throw InputError("compare takes a single --method and --mode");
  const auto a = read_metric_csv(a_path, method, mode);
  const auto b = read_metric_csv(b_path, method, mode);
  OptionalValues va, vb;
  std::vector<std::string> labels = a.labels;
  for (const auto& l : b.labels)
    if (!a.values.count(l)) labels.push_back(l);
  for (const auto& l : labels) {
    auto ia = a.values.find(l);
    auto ib = b.values.find(l);
    va.push_back(ia == a.values.end() ? std::nullopt : ia->second);
    vb.push_back(ib == b.values.end() ? std::nullopt : ib->second);
  }
  std::vector<std::string> groups;
  CompareOptions opts{spearman, nullptr};
  if (!groups_path.empty()) {
    auto gm = read_groups(groups_path);
    for (const auto& l : labels) {
      auto it = gm.find(l);
      groups.push_back(it == gm.end() ? "" : it->second);
    }
    opts.groups = &groups;
  }
  Table t = comparison_table(compare(va, vb, opts));
  t.metadata.emplace_back("method", method);
  t.metadata.emplace_back("mode", mode);
  export_table(t, parse_format(c.format), c.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted clustering and closure coefficients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wclust 1.0.0");

  Common c;
  bool global = false, undefined_zero = false, barrat_literal = false, spearman = false;

  auto* cluster = app.add_subcommand("cluster", "Local (or global) clustering coefficients");
  add_input(cluster, c);
  add_direction(cluster, c);
  add_methods(cluster, c, "Definition (repeatable; default continuous)");
  add_output(cluster, c);
  add_seed(cluster, c);
  cluster->add_flag("--global", global,
                    "Emit global coefficients and means of local values instead of per-node rows");
  cluster->add_flag("--undefined-as-zero", undefined_zero, "Write 0 instead of empty fields");
  cluster->add_flag("--barrat-literal", barrat_literal,
                    "Barrat fan modes with the s(s-1) denominator");

  std::vector<std::string> styles, patterns;
  auto* closure_cmd = app.add_subcommand("closure", "Local closure coefficients");
  add_input(closure_cmd, c);
  add_direction(closure_cmd, c);
  add_output(closure_cmd, c);
  add_seed(closure_cmd, c);
  closure_cmd->add_option("--style", styles, "binary, zhang or continuous (repeatable)");
  closure_cmd->add_option("--pattern", patterns,
                          "undirected, cycle_out, cycle_in, fan_out, fan_in (repeatable)");
  closure_cmd->add_flag("--undefined-as-zero", undefined_zero, "Write 0 instead of empty fields");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a synthetic graph (edge list)");
  generate_cmd->add_option("--scenario", gen.scenario, "Scenario file (key=value)");
  generate_cmd->add_option("--generator", gen.generator,
                           "core_periphery, watts_strogatz_directed, watts_strogatz, "
                           "erdos_renyi, scale_free");
  generate_cmd->add_option("--weights", gen.weights,
                           "Weight law: constant:C, uniform:A,B, exponential:RATE");
  for (const char* key : {"N", "k", "p", "r", "density", "m", "directed"})
    generate_cmd->add_option(std::string("--") + key, gen.params[key], "Generator parameter");
  add_seed(generate_cmd, c);
  add_output(generate_cmd, c, false);

  std::string attr = "pvalue";
  double max_value = 0.0;
  auto* threshold_cmd = app.add_subcommand("threshold", "Keep edges with attribute < max");
  add_input(threshold_cmd, c);
  add_direction(threshold_cmd, c);
  threshold_cmd->add_option("--attr", attr, "Edge attribute (default pvalue)");
  threshold_cmd->add_option("--max", max_value, "Strict upper bound")->required();
  threshold_cmd->add_flag("--renormalize", c.renormalize,
                          "Normalize by the subgraph's own maximum weight");
  add_output(threshold_cmd, c, false);

  std::string node, target;
  double epsilon = 0.0;
  auto* perturb_cmd = app.add_subcommand("perturb", "Add one edge of normalized weight epsilon");
  add_input(perturb_cmd, c);
  add_direction(perturb_cmd, c);
  perturb_cmd->add_option("--node", node, "Source node label")->required();
  perturb_cmd->add_option("--target", target, "Target node label")->required();
  perturb_cmd->add_option("--epsilon", epsilon, "Normalized weight in (0, 1]")->required();
  add_output(perturb_cmd, c, false);

  std::string scope = "global";
  std::size_t realizations = 10;
  auto* shuffle_cmd = app.add_subcommand(
      "shuffle",
      "Shuffle weights; with --method, compare coefficients against shuffled realizations");
  add_input(shuffle_cmd, c);
  add_direction(shuffle_cmd, c);
  shuffle_cmd->add_option("--scope", scope, "global or per_node_out")
      ->check(CLI::IsMember({"global", "per_node_out", "per-node-out"}));
  shuffle_cmd->add_option("--realizations", realizations, "Number of shuffles");
  add_methods(shuffle_cmd, c, "Definition (repeatable)");
  add_seed(shuffle_cmd, c);
  add_output(shuffle_cmd, c);

  std::string scenario;
  std::optional<std::size_t> reps;
  auto* spurious_cmd = app.add_subcommand("spurious", "Spurious-edge experiment");
  spurious_cmd->add_option("--scenario", scenario, "Scenario file with a noise block")
      ->required();
  spurious_cmd->add_option("--realizations", reps, "Override the number of noise realizations");
  spurious_cmd->add_option("--method", c.methods, "Definition (repeatable)");
  spurious_cmd->add_flag("--spearman", spearman, "Use rank correlation");
  add_seed(spurious_cmd, c);
  add_output(spurious_cmd, c);

  std::string a_path, b_path, groups_path;
  auto* compare_cmd =
      app.add_subcommand("compare", "Compare two `cluster` CSV outputs (b against reference a)");
  compare_cmd->add_option("-a", a_path, "Reference metric CSV")->required();
  compare_cmd->add_option("-b", b_path, "Compared metric CSV")->required();
  compare_cmd->add_option("--method", c.methods, "Method to compare (default continuous)");
  compare_cmd->add_option("--mode", c.modes, "Mode to compare (default total)");
  compare_cmd->add_option("--groups", groups_path, "CSV node,group for the rank table");
  compare_cmd->add_flag("--spearman", spearman, "Use rank correlation");
  add_output(compare_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*cluster) return run_cluster(c, global, undefined_zero, barrat_literal);
    if (*closure_cmd) return run_closure(c, styles, patterns, undefined_zero);
    if (*generate_cmd) return run_generate(c, gen);
    if (*threshold_cmd) return run_threshold(c, attr, max_value);
    if (*perturb_cmd) return run_perturb(c, node, target, epsilon);
    if (*shuffle_cmd) return run_shuffle(c, scope, realizations);
    if (*spurious_cmd) return run_spurious(c, scenario, reps, spearman);
    if (*compare_cmd) return run_compare(c, a_path, b_path, spearman, groups_path);
  } catch (const DegenerateGraphError& e) {
    std::cerr << "wclust: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const InputError& e) {
    std::cerr << "wclust: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
