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

#include "hwqubo/compiler.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "internal.hpp"

namespace hwqubo {

void QaoaParams::validate() const {
  if (reps < 1) {
    throw std::invalid_argument("QAOA needs at least one repetition");
  }
  if (gammas.size() != static_cast<std::size_t>(reps) ||
      betas.size() != static_cast<std::size_t>(reps)) {
    throw std::invalid_argument("expected " + std::to_string(reps) +
                                " gamma and beta values, got " +
                                std::to_string(gammas.size()) + " and " +
                                std::to_string(betas.size()));
  }
}

QaoaParams QaoaParams::uniform(int reps, double gamma, double beta) {
  QaoaParams p;
  p.reps = reps;
  p.gammas.assign(static_cast<std::size_t>(std::max(reps, 0)), gamma);
  p.betas.assign(static_cast<std::size_t>(std::max(reps, 0)), beta);
  return p;
}

Layout map_chains_to_path(const std::vector<TriangleChain> &chains,
                          const HardwarePath &path) {
  std::vector<const TriangleChain *> ordered;
  std::size_t total = 0;
  for (const auto &c : chains) {
    ordered.push_back(&c);
    total += c.path.size();
  }
  if (total > path.size()) {
    throw std::length_error("chains need " + std::to_string(total) +
                            " path qubits but the device path has " +
                            std::to_string(path.size()));
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](auto *a, auto *b) { return a->chain_id < b->chain_id; });
  Layout layout;
  std::size_t slot = 0;
  for (const TriangleChain *c : ordered) {
    for (VarId v : c->path) {
      if (!layout.emplace(v, path.qubits[slot++]).second) {
        throw std::invalid_argument("variable " + v.name() +
                                    " appears in more than one chain");
      }
    }
  }
  return layout;
}

namespace {

/// Fills `layout` with `vars` on unused path qubits first, then on the free
/// qubits closest to the end of the path.
void place_remaining(Layout &layout, const std::vector<VarId> &vars,
                     const HardwarePath &path, const DistanceTable &distances,
                     std::size_t num_qubits) {
  std::set<Qubit> used;
  for (const auto &[v, q] : layout) {
    used.insert(q);
  }
  std::vector<Qubit> candidates;
  for (Qubit q : path.qubits) {
    if (!used.contains(q)) {
      candidates.push_back(q);
    }
  }
  if (candidates.size() < vars.size() && !path.qubits.empty()) {
    std::set<Qubit> listed(candidates.begin(), candidates.end());
    for (Qubit q : distances.bfs_order(path.qubits.back())) {
      if (!used.contains(q) && !listed.contains(q)) {
        candidates.push_back(q);
      }
    }
  }
  if (candidates.size() < vars.size()) {
    throw std::length_error("problem needs " +
                            std::to_string(layout.size() + vars.size()) +
                            " qubits but only " + std::to_string(num_qubits) +
                            " are reachable");
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    layout.emplace(vars[i], candidates[i]);
  }
}

std::vector<Interaction> interactions_of(const Polynomial &qubo,
                                         const std::set<VarPair> &pairs) {
  std::vector<Interaction> out;
  for (const auto &[a, b] : pairs) {
    double c = qubo.coefficient(Monomial{a, b});
    if (c != 0.0) {
      out.push_back({a, b, c});
    }
  }
  return out;
}

void add_linear_terms(Circuit &circ, const Polynomial &qubo,
                      const Layout &layout, double gamma) {
  const auto field = detail::linear_field(qubo);
  std::vector<std::pair<Qubit, double>> rz;
  for (const auto &[v, q] : layout) {
    rz.emplace_back(q, field.at(v));
  }
  std::sort(rz.begin(), rz.end());
  for (auto [q, b] : rz) {
    circ.add(Gate::rz(q, 2.0 * b * gamma));
  }
}

/// Emits the SWAPs of `routing` in reverse, restoring the layout it started
/// from.
void undo_swaps(Circuit &circ, LayoutState &state, const Circuit &routing) {
  for (auto it = routing.gates.rbegin(); it != routing.gates.rend(); ++it) {
    if (it->kind() == GateKind::SWAP) {
      circ.add(*it);
      state.swap(it->qubit(0), it->qubit(1));
    }
  }
}

struct Plan {
  Layout initial;
  std::vector<TriangleChain> chains;
  std::vector<Interaction> routed;
};

Plan plan_chain(const QuadratizedProblem &problem, const CouplingMap &map,
                const DistanceTable &distances, const HardwarePath &path) {
  InteractionGraph graph = build_interaction_graph(problem.qubo);
  Plan plan;
  plan.chains = extract_chains(graph, problem.substitutions);
  if (!chains_independent(plan.chains)) {
    throw std::invalid_argument(
        "chains share variables; split the problem before compiling");
  }
  plan.initial = map_chains_to_path(plan.chains, path);
  std::vector<VarId> rest;
  for (VarId v : problem.qubo.variables()) {
    if (!plan.initial.contains(v)) {
      rest.push_back(v);
    }
  }
  place_remaining(plan.initial, rest, path, distances, map.num_qubits());
  plan.routed =
      interactions_of(problem.qubo, classify_edges(graph, plan.chains).extraneous_edges);
  return plan;
}

Plan plan_baseline(const QuadratizedProblem &problem, const CouplingMap &map,
                   const DistanceTable &distances, const HardwarePath &path) {
  Plan plan;
  const auto vars = problem.qubo.variables();
  place_remaining(plan.initial, {vars.begin(), vars.end()}, path, distances,
                  map.num_qubits());
  std::set<VarPair> all;
  for (const auto &[m, c] : problem.qubo.terms()) {
    if (m.degree() == 2) {
      all.insert(ordered_pair(m.vars()[0], m.vars()[1]));
    }
  }
  plan.routed = interactions_of(problem.qubo, all);
  return plan;
}

}  // namespace

CompilationResult compile_qaoa(const QuadratizedProblem &problem,
                               const CouplingMap &map, const QaoaParams &params,
                               Strategy strategy) {
  params.validate();
  if (problem.qubo.degree() > 2) {
    throw std::invalid_argument("problem is not quadratic");
  }
  const DistanceTable distances(map);
  const HardwarePath path = longest_nn_path(map);
  const Plan plan = strategy == Strategy::Chain
                        ? plan_chain(problem, map, distances, path)
                        : plan_baseline(problem, map, distances, path);
  const std::size_t n = map.num_qubits();

  CompilationResult result;
  result.strategy = strategy;
  result.energy_offset = problem.qubo.constant();

  Circuit logical(n);
  logical.initial_layout = plan.initial;
  for (const auto &[v, q] : plan.initial) {
    logical.add(Gate::h(q));
  }
  std::sort(logical.gates.begin(), logical.gates.end(),
            [](const Gate &a, const Gate &b) { return a.qubit(0) < b.qubit(0); });

  LayoutState state(plan.initial);
  Circuit previous_routing(n);
  bool permuted = false;
  for (int k = 0; k < params.reps; ++k) {
    const double gamma = params.gammas[static_cast<std::size_t>(k)];
    const double beta = params.betas[static_cast<std::size_t>(k)];

    Circuit cost(n);
    cost.initial_layout = state.layout();
    undo_swaps(cost, state, previous_routing);
    result.layout_history.push_back(state.layout());

    if (strategy == Strategy::Chain) {
      CostLayer layer = schedule_cost_layer(problem.qubo, plan.chains,
                                            plan.initial, n, gamma, permuted);
      if (k == 0) {
        result.cost_layer_depth = depth(decompose_swap(layer.circuit));
      }
      cost.append(layer.circuit);
      state = LayoutState(layer.final_layout);
      permuted = layer.permuted;
    }

    Circuit routing(n);
    route_extraneous(routing, plan.routed, state, distances, gamma);
    cost.append(routing);
    if (strategy == Strategy::Baseline) {
      add_linear_terms(cost, problem.qubo, state.layout(), gamma);
      if (k == 0) {
        result.cost_layer_depth = depth(decompose_swap(cost));
      }
    }
    cost.final_layout = state.layout();
    previous_routing = std::move(routing);

    logical.append(cost);
    logical.append(mixer_layer(state.layout(), n, beta));
    result.cost_layers.push_back(decompose_swap(cost));
  }
  result.layout_history.push_back(state.layout());
  logical.final_layout = state.layout();

  result.circuit = decompose_swap(logical);
  result.logical_circuit = std::move(logical);
  result.metrics = metrics(result.circuit);
  return result;
}

QuadratizedProblem prepare_chains(const QuadratizedProblem &problem) {
  InteractionGraph graph = build_interaction_graph(problem.qubo);
  auto chains = extract_chains(graph, problem.substitutions);
  if (chains_independent(chains)) {
    return problem;
  }
  return split_shared_variables(problem, chains);
}

PipelineResult compile_polynomial(const Polynomial &poly, const CouplingMap &map,
                                  const QaoaParams &params, Strategy strategy,
                                  const QuadratizeOptions &opts) {
  PipelineResult out;
  out.problem = quadratize(poly, strategy, opts);
  if (strategy == Strategy::Chain) {
    out.problem = prepare_chains(out.problem);
  }
  out.compilation = compile_qaoa(out.problem, map, params, strategy);
  return out;
}

}  // namespace hwqubo
