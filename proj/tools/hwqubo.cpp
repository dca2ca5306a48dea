// Copyright 2026 The hwqubo Authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hwqubo/bench.hpp"
#include "hwqubo/compiler.hpp"
#include "hwqubo/graph.hpp"
#include "hwqubo/verify.hpp"

using namespace hwqubo;

namespace {

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << text;
}

/// QuadratizedProblem JSON if the input has a "qubo" member, else nullopt.
std::optional<QuadratizedProblem> as_problem(const std::string &text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_object() && j.contains("qubo")) {
    return quadratized_from_json(j);
  }
  return std::nullopt;
}

std::vector<double> parse_reals(const std::string &text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw std::invalid_argument("expected at least one number");
  }
  return out;
}

QaoaParams make_params(int reps, const std::string &gammas,
                       const std::string &betas) {
  QaoaParams p;
  p.reps = reps;
  p.gammas = parse_reals(gammas);
  p.betas = parse_reals(betas);
  if (p.gammas.size() == 1 && reps > 1) {
    p.gammas.assign(static_cast<std::size_t>(reps), p.gammas[0]);
  }
  if (p.betas.size() == 1 && reps > 1) {
    p.betas.assign(static_cast<std::size_t>(reps), p.betas[0]);
  }
  p.validate();
  return p;
}

struct QuadratizeFlags {
  std::string strategy = "chain";
  std::string tie_break = "canonical";
  std::uint64_t seed = 0;
  std::string penalty = "auto";
  std::string weighting = "count";
};

void add_quadratize_flags(CLI::App *cmd, QuadratizeFlags &f) {
  cmd->add_option("--strategy", f.strategy, "chain or baseline")
      ->check(CLI::IsMember({"chain", "baseline"}));
  cmd->add_option("--tie-break", f.tie_break, "canonical or random")
      ->check(CLI::IsMember({"canonical", "random"}));
  cmd->add_option("--seed", f.seed, "Seed for random tie-breaking");
  cmd->add_option("--penalty-factor", f.penalty, "auto or a positive real");
  cmd->add_option("--weighting", f.weighting,
                  "Score pairs by term count or by summed |coefficient|")
      ->check(CLI::IsMember({"count", "coefficient"}));
}

QuadratizeOptions to_options(const QuadratizeFlags &f) {
  QuadratizeOptions o;
  o.tie_break = f.tie_break == "random" ? TieBreak::Random : TieBreak::Canonical;
  o.seed = f.seed;
  o.weighting =
      f.weighting == "coefficient" ? Weighting::Coefficient : Weighting::Count;
  if (f.penalty != "auto") {
    o.penalty_factor = parse_reals(f.penalty).at(0);
  }
  return o;
}

nlohmann::json metrics_json(const CompilationResult &r) {
  return {{"strategy", to_string(r.strategy)},
          {"depth", r.metrics.depth},
          {"width", r.metrics.width},
          {"two_qubit_count", r.metrics.two_qubit_count},
          {"swap_count", metrics(r.logical_circuit).swap_count},
          {"cost_layer_depth", r.cost_layer_depth},
          {"energy_offset", r.energy_offset}};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hardware-aware QUBO quadratization and QAOA compilation"};
  app.require_subcommand(1);

  // quadratize
  std::string quad_in = "-";
  std::string quad_out;
  bool quad_split = false;
  QuadratizeFlags quad_flags;
  auto *quad = app.add_subcommand("quadratize", "Reduce a polynomial to a QUBO");
  quad->add_option("input", quad_in, "File holding polynomial text or JSON, - for stdin");
  quad->add_option("-o,--out", quad_out, "Output file");
  quad->add_flag("--split", quad_split,
                 "Duplicate variables shared between chains");
  add_quadratize_flags(quad, quad_flags);

  // graph
  std::string graph_in = "-";
  bool graph_dot = false;
  auto *graph = app.add_subcommand("graph", "Print the interaction graph of a QUBO");
  graph->add_option("input", graph_in,
                    "File holding a QUBO or quadratized problem JSON, - for stdin");
  graph->add_flag("--dot", graph_dot, "Emit Graphviz DOT instead of JSON");

  // device path
  std::string device_spec = "builtin:ibm_torino";
  bool path_json = false;
  auto *device = app.add_subcommand("device", "Inspect coupling maps");
  device->require_subcommand(1);
  auto *path = device->add_subcommand("path", "Print the greedy device path");
  path->add_option("--device", device_spec,
                   "builtin:ibm_torino, heavy-hex:R,C or file:<path>");
  path->add_flag("--json", path_json, "Emit JSON");
  auto *dump = device->add_subcommand("map", "Print the coupling map as JSON");
  dump->add_option("--device", device_spec,
                   "builtin:ibm_torino, heavy-hex:R,C or file:<path>");

  // compile
  std::string comp_in = "-";
  std::string comp_out;
  std::string comp_device = "builtin:ibm_torino";
  int reps = 1;
  std::string gammas = "0.5";
  std::string betas = "0.5";
  std::string emit = "json";
  QuadratizeFlags comp_flags;
  auto *comp = app.add_subcommand("compile", "Compile a QAOA circuit");
  comp->add_option("input", comp_in,
                   "File holding a polynomial or quadratized problem JSON, - for stdin");
  comp->add_option("-o,--out", comp_out, "Output file");
  comp->add_option("--device", comp_device, "Target device");
  comp->add_option("--reps", reps, "Number of QAOA repetitions")
      ->check(CLI::PositiveNumber);
  comp->add_option("--gamma", gammas, "Cost angles, one or one per repetition");
  comp->add_option("--beta", betas, "Mixer angles, one or one per repetition");
  comp->add_option("--emit", emit, "json, qasm or metrics")
      ->check(CLI::IsMember({"json", "qasm", "metrics"}));
  add_quadratize_flags(comp, comp_flags);

  // verify
  std::string ver_original;
  std::string ver_problem;
  std::string ver_circuit;
  std::string ver_device = "builtin:ibm_torino";
  std::string ver_gammas = "0.5";
  auto *ver = app.add_subcommand("verify", "Check a quadratization and circuit");
  ver->add_option("--original", ver_original, "File holding the original polynomial")->required();
  ver->add_option("--problem", ver_problem, "Quadratized problem JSON file")->required();
  ver->add_option("--circuit", ver_circuit, "Circuit JSON file from compile");
  ver->add_option("--device", ver_device, "Device for the connectivity check");
  ver->add_option("--gamma", ver_gammas,
                  "Cost angles used at compile time, one per repetition");

  // bench
  std::string sizes = "8..16";
  int samples = 100;
  std::string bench_device = "builtin:ibm_torino";
  std::string terms = "auto";
  std::string max_degree = "auto";
  std::uint64_t bench_seed = 0;
  std::string bench_out;
  std::string summary_out;
  unsigned threads = 0;
  bool no_timing = false;
  auto *bench = app.add_subcommand("bench", "Compare both strategies on random instances");
  bench->add_option("--sizes", sizes, "Sizes, e.g. 8..16 or 8,12,16");
  bench->add_option("--samples", samples, "Instances per size")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--device", bench_device, "Target device");
  bench->add_option("--terms", terms, "Terms per instance, or auto for N");
  bench->add_option("--max-degree", max_degree,
                    "Largest term degree, or auto for min(N, 6)");
  bench->add_option("--seed", bench_seed, "Run seed");
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_option("--summary-json", summary_out, "Write summary statistics here");
  bench->add_option("--threads", threads, "Worker threads, 0 for all cores");
  bench->add_flag("--no-timing", no_timing,
                  "Write compile_time_ms as 0 for byte-stable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (quad->parsed()) {
      Polynomial poly = load_polynomial(read_input(quad_in));
      Strategy s = strategy_from_name(quad_flags.strategy);
      QuadratizedProblem p = quadratize(poly, s, to_options(quad_flags));
      if (quad_split && s == Strategy::Chain) {
        p = prepare_chains(p);
      }
      write_output(quad_out, to_json(p).dump(2) + "\n");
    } else if (graph->parsed()) {
      std::string text = read_input(graph_in);
      auto problem = as_problem(text);
      Polynomial qubo = problem ? problem->qubo : load_polynomial(text);
      InteractionGraph g = build_interaction_graph(qubo);
      std::cout << (graph_dot ? to_dot(g) : to_json(g).dump(2) + "\n");
    } else if (path->parsed()) {
      CouplingMap map = resolve_device(device_spec);
      HardwarePath hp = longest_nn_path(map);
      if (path_json) {
        std::cout << nlohmann::json{{"device", map.name()},
                                    {"length", hp.size()},
                                    {"qubits", hp.qubits}}
                         .dump()
                  << "\n";
      } else {
        std::cout << map.name() << ": path of " << hp.size() << " qubits\n";
        for (std::size_t i = 0; i < hp.size(); ++i) {
          std::cout << (i ? " " : "") << hp.qubits[i];
        }
        std::cout << "\n";
      }
    } else if (dump->parsed()) {
      std::cout << to_json(resolve_device(device_spec)).dump() << "\n";
    } else if (comp->parsed()) {
      std::string text = read_input(comp_in);
      CouplingMap map = resolve_device(comp_device);
      QaoaParams params = make_params(reps, gammas, betas);
      Strategy s = strategy_from_name(comp_flags.strategy);
      CompilationResult result;
      if (auto problem = as_problem(text)) {
        QuadratizedProblem p =
            s == Strategy::Chain ? prepare_chains(*problem) : *problem;
        result = compile_qaoa(p, map, params, s);
      } else {
        result = compile_polynomial(load_polynomial(text), map, params, s,
                                    to_options(comp_flags))
                     .compilation;
      }
      if (emit == "metrics") {
        write_output(comp_out, metrics_json(result).dump(2) + "\n");
      } else if (emit == "qasm") {
        write_output(comp_out, serialize(result.circuit, CircuitFormat::QasmText));
      } else {
        write_output(comp_out, to_json(result.circuit).dump() + "\n");
      }
    } else if (ver->parsed()) {
      Polynomial original = load_polynomial(read_input(ver_original));
      QuadratizedProblem problem =
          quadratized_from_json(nlohmann::json::parse(read_input(ver_problem)));
      VerificationReport report = check_quadratization(original, problem);
      if (!ver_circuit.empty()) {
        Circuit circuit =
            circuit_from_json(nlohmann::json::parse(read_input(ver_circuit)));
        CouplingMap map = resolve_device(ver_device);
        report.connectivity_ok = circuit.num_qubits <= map.num_qubits() &&
                                 check_connectivity(circuit, map).empty();
        double gamma = 0.0;
        for (double g : parse_reals(ver_gammas)) {
          gamma += g;
        }
        try {
          PhaseCheck pc = phase_oracle_check(diagonal_part(circuit), problem.qubo,
                                             gamma, circuit.initial_layout,
                                             problem.qubo.constant());
          report.phase_ok = pc.ok;
          report.max_phase_error = pc.max_error;
        } catch (const std::length_error &e) {
          std::cerr << "note: phase check skipped, " << e.what() << "\n";
        }
      }
      std::cout << to_json(report).dump(2) << "\n";
      return report.ok() ? 0 : 1;
    } else if (bench->parsed()) {
      CouplingMap map = resolve_device(bench_device);
      BenchConfig cfg;
      cfg.sizes = parse_sizes(sizes);
      cfg.samples = samples;
      cfg.seed = bench_seed;
      if (terms != "auto") {
        cfg.num_terms = std::stoi(terms);
      }
      if (max_degree != "auto") {
        cfg.max_term_degree = std::stoi(max_degree);
      }
      cfg.threads = threads;
      cfg.record_timing = !no_timing;
      BenchReport report = run_benchmark(cfg, map);
      write_output(bench_out, to_csv(report, cfg, map));
      if (!summary_out.empty()) {
        write_output(summary_out, summary_json(report, cfg, map).dump(2) + "\n");
      }
      for (const auto &e : report.errors) {
        std::cerr << "warning: " << e << "\n";
      }
      if (report.connectivity_violations > 0 || report.quadratization_failed > 0) {
        std::cerr << "error: " << report.connectivity_violations
                  << " connectivity violations, " << report.quadratization_failed
                  << " failed quadratization checks\n";
        return 1;
      }
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
