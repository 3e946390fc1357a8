// Copyright 2026 The drs Authors.
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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "drs/core.hpp"
#include "drs/instances.hpp"
#include "drs/oracle.hpp"
#include "drs/solve.hpp"
#include "drs/wheel.hpp"
#include "json.hpp"

namespace drs::cli {

namespace {

using nlohmann::ordered_json;

// Bad user input; reported with exit code 3.
struct InputError : Error {
  using Error::Error;
};

WeightedGraph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

VertexId parse_vertex(std::string_view s, const WeightedGraph& g) {
  long long id = 0;
  if (!parse_number(s, id) || id < 1 || id > g.num_vertices()) {
    throw InputError("bad vertex id '" + std::string(s) + "'");
  }
  return static_cast<VertexId>(id - 1);
}

std::vector<VertexId> parse_set(const std::string& s, const WeightedGraph& g) {
  std::vector<VertexId> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_vertex(item, g));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InputError("vertex listed twice in --set");
  }
  return out;
}

ordered_json weight_json(double w) {
  if (std::floor(w) == w && std::abs(w) < 9.0e15) {
    return static_cast<std::int64_t>(w);
  }
  return w;
}

ordered_json ids_json(std::span<const VertexId> set) {
  ordered_json a = ordered_json::array();
  for (VertexId v : set) a.push_back(v + 1);
  return a;
}

std::string ids_text(std::span<const VertexId> set) {
  std::string s;
  for (VertexId v : set) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

ordered_json result_json(const SolveResult& r) {
  ordered_json j;
  j["set"] = ids_json(r.set);
  j["weight"] = weight_json(r.weight);
  j["algorithm"] = r.algorithm;
  j["optimal"] = r.optimal;
  if (r.uniform_ratio_bound) j["ratio_bound"] = *r.uniform_ratio_bound;
  if (r.instance_ratio_bound) j["instance_ratio_bound"] = *r.instance_ratio_bound;
  j["seconds"] = r.seconds;
  return j;
}

struct Common {
  std::string format = "json";
};

void emit(std::ostream& out, const Common& c, const ordered_json& j,
          const std::string& human) {
  if (c.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << human;
  }
}

int cmd_solve(const std::string& path, const std::string& algo_name,
              std::uint64_t budget, int threads, const Common& c,
              std::ostream& out) {
  const auto algo = parse_algorithm(algo_name);
  if (!algo) throw InputError("unknown algorithm '" + algo_name + "'");
  const WeightedGraph g = load_graph(path);
  const SolveResult r = solve(g, {*algo, budget, threads});
  std::ostringstream h;
  h << "set: " << ids_text(r.set) << '\n'
    << "weight: " << weight_json(r.weight).dump() << '\n'
    << "algorithm: " << r.algorithm << '\n'
    << "optimal: " << (r.optimal ? "yes" : "no") << '\n';
  if (r.uniform_ratio_bound) h << "ratio bound: " << *r.uniform_ratio_bound << '\n';
  emit(out, c, result_json(r), h.str());
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& set_text,
               const Common& c, std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const auto set = parse_set(set_text, g);
  const DistanceMatrix d(g);
  const auto witness = ambiguous_witness(d, set);
  ordered_json j;
  j["is_drs"] = !witness.has_value();
  std::string h = witness ? "not a DRS" : "DRS";
  if (witness) {
    j["witness"] = {witness->first + 1, witness->second + 1};
    h += ": " + std::to_string(witness->first + 1) + " and " +
         std::to_string(witness->second + 1) + " are indistinguishable";
  }
  emit(out, c, j, h + "\n");
  return kExitOk;
}

int cmd_locate(const std::string& path, const std::string& set_text,
               const std::string& times_text, const Common& c,
               std::ostream& out) {
  const WeightedGraph g = load_graph(path);
  const auto set = parse_set(set_text, g);
  if (set.empty()) throw InputError("--set is empty");
  std::vector<std::optional<std::int64_t>> time_of(g.num_vertices());
  std::vector<char> given(g.num_vertices(), 0);
  bool fractional = false;
  for (const auto& item : split(times_text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad --times entry '" + item + "'");
    const VertexId v = parse_vertex(std::string_view(item).substr(0, eq), g);
    if (given[v]) throw InputError("time given twice for vertex " + std::to_string(v + 1));
    given[v] = 1;
    const std::string_view t = std::string_view(item).substr(eq + 1);
    std::int64_t value = 0;
    double real = 0;
    if (parse_number(t, value)) {
      time_of[v] = value;
    } else if (parse_number(t, real) && std::isfinite(real)) {
      fractional = true;
    } else {
      throw InputError("bad time '" + std::string(t) + "'");
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const bool in_set = std::binary_search(set.begin(), set.end(), v);
    if (given[v] != in_set) {
      throw InputError("--times must cover exactly the --set observers");
    }
  }

  LocalizationResult r;
  if (fractional) {
    r.outcome = LocalizationResult::Outcome::kInconsistent;
  } else {
    std::vector<Observation> obs;
    for (VertexId v : set) obs.push_back({v, *time_of[v]});
    r = locate_source(DistanceMatrix(g), obs);
  }

  ordered_json j;
  std::ostringstream h;
  switch (r.outcome) {
    case LocalizationResult::Outcome::kUnique:
      j["outcome"] = "unique";
      j["source"] = r.source + 1;
      j["start"] = r.start_time;
      h << "source " << r.source + 1 << " at time " << r.start_time << '\n';
      break;
    case LocalizationResult::Outcome::kAmbiguous:
      j["outcome"] = "ambiguous";
      j["candidates"] = ids_json(r.candidates);
      j["starts"] = r.start_times;
      h << "ambiguous: " << ids_text(r.candidates) << '\n';
      break;
    case LocalizationResult::Outcome::kInconsistent:
      j["outcome"] = "inconsistent";
      h << "inconsistent times\n";
      break;
  }
  emit(out, c, j, h.str());
  return kExitOk;
}

struct GenArgs {
  GenSpec spec;
  std::string weights = "unit";
  std::string output;
};

GenSpec finish_spec(GenArgs& a) {
  if (a.weights == "uniform") {
    a.spec.weights.kind = WeightSpec::Kind::kUniform;
  } else if (a.weights != "unit") {
    throw InputError("--weights must be unit or uniform");
  }
  return a.spec;
}

int cmd_gen(GenArgs& a, std::ostream& out) {
  const GenSpec spec = finish_spec(a);
  auto inst = [&] {
    try {
      return generate_instance(spec);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  if (a.output.empty()) {
    serialize_graph(inst.graph, out);
    if (inst.witness) out << "# witness: " << ids_text(*inst.witness) << '\n';
    return kExitOk;
  }
  std::ofstream f(a.output);
  if (!f) throw InputError("cannot write " + a.output);
  serialize_graph(inst.graph, f);
  if (inst.witness) {
    const auto side = std::filesystem::path(a.output).replace_extension(".witness");
    std::ofstream w(side);
    if (!w) throw InputError("cannot write " + side.string());
    for (VertexId v : *inst.witness) w << v + 1 << '\n';
  }
  return kExitOk;
}

struct BenchArgs {
  std::string families = "tree,cycle,kaug,complete-wheel,wheel";
  std::string sizes = "8,12,16";
  int seeds = 3;
  std::uint64_t budget = kDefaultKAugBudget;
};

int cmd_bench(const BenchArgs& b, std::ostream& out) {
  out << "family,n,algorithm,weight,oracle_weight,seconds\n";
  for (const auto& family : split(b.families, ',')) {
    for (const auto& size_text : split(b.sizes, ',')) {
      int size = 0;
      if (!parse_number(std::string_view(size_text), size)) {
        throw InputError("bad size '" + size_text + "'");
      }
      for (int seed = 1; seed <= b.seeds; ++seed) {
        GenSpec spec;
        spec.family = family;
        spec.n = size;
        spec.seed = static_cast<std::uint64_t>(seed);
        spec.weights.kind = WeightSpec::Kind::kUniform;
        if (family == "kaug") spec.k = 2;
        if (family == "wheel") {
          spec.connectors = std::min(size, kMinWheelConnectors);
          spec.pattern = "random";
        }
        WeightedGraph g = [&] {
          try {
            return generate(spec);
          } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
          }
        }();
        const SolveResult r = solve(g, {Algorithm::kAuto, b.budget, 1});
        std::string oracle;
        if (g.num_vertices() <= 20) {
          oracle = weight_json(brute_min_drs(g).weight).dump();
        }
        out << family << ',' << g.num_vertices() << ',' << r.algorithm << ','
            << weight_json(r.weight).dump() << ',' << oracle << ','
            << r.seconds << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimum-weight doubly resolving sets", "drs"};
  app.require_subcommand(1);
  Common common;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output mode")
        ->check(CLI::IsMember({"json", "human"}));
  };

  std::string graph_path, algo = "auto", set_text, times_text;
  std::uint64_t budget = kDefaultKAugBudget;
  int threads = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum-weight DRS");
  solve_cmd->add_option("graph", graph_path, "Graph file, - for stdin")->required();
  solve_cmd->add_option("--algo", algo,
                        "auto|greedy|tree|cycle|ktree|wheel|complete-wheel|oracle");
  solve_cmd->add_option("--budget", budget, "Candidate-set cap for k-aug enumeration");
  solve_cmd->add_option("--threads", threads, "Worker threads for greedy")
      ->check(CLI::PositiveNumber);
  add_format(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check whether a set is a DRS");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("--set", set_text, "Comma-separated 1-based ids")->required();
  add_format(verify_cmd);

  auto* locate_cmd = app.add_subcommand("locate", "Locate a diffusion source");
  locate_cmd->add_option("graph", graph_path)->required();
  locate_cmd->add_option("--set", set_text, "Observers, comma-separated")->required();
  locate_cmd->add_option("--times", times_text, "id=time pairs, comma-separated")
      ->required();
  add_format(locate_cmd);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen.spec.family,
                      "tree|comb|cycle|kaug|wheel|complete-wheel|prism|random|reduction")
      ->required();
  gen_cmd->add_option("-n,--n", gen.spec.n, "Size (teeth for comb, rim for wheels)")
      ->required();
  gen_cmd->add_option("-k,--k", gen.spec.k, "Extra edges for kaug");
  gen_cmd->add_option("--connectors", gen.spec.connectors, "Hub degree for wheel");
  gen_cmd->add_option("--pattern", gen.spec.pattern, "even|random");
  gen_cmd->add_option("--p", gen.spec.p, "Extra-edge probability");
  gen_cmd->add_option("--seed", gen.spec.seed);
  gen_cmd->add_option("--weights", gen.weights, "unit|uniform");
  gen_cmd->add_option("--lo", gen.spec.weights.lo);
  gen_cmd->add_option("--hi", gen.spec.weights.hi);
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solver vs oracle table as CSV");
  bench_cmd->add_option("--families", bench.families);
  bench_cmd->add_option("--sizes", bench.sizes);
  bench_cmd->add_option("--seeds", bench.seeds)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--budget", bench.budget);

  std::vector<std::string> argv_store{"drs"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(graph_path, algo, budget, threads, common, out);
    if (*verify_cmd) return cmd_verify(graph_path, set_text, common, out);
    if (*locate_cmd) return cmd_locate(graph_path, set_text, times_text, common, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const InputError& e) {
    err << "error: input: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: input: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidGraph& e) {
    err << "error: input: " << e.what() << '\n';
    return kExitInput;
  } catch (const TooLarge& e) {
    err << "error: too-large: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const WrongGraphClass& e) {
    err << "error: wrong-class: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitInput;
}

}  // namespace drs::cli
