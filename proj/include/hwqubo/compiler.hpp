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

#pragma once

#include <vector>

#include "hwqubo/circuit.hpp"
#include "hwqubo/device.hpp"
#include "hwqubo/graph.hpp"
#include "hwqubo/quadratizer.hpp"

namespace hwqubo {

struct QaoaParams {
  int reps = 1;
  std::vector<double> gammas{0.5};
  std::vector<double> betas{0.5};

  /// Throws std::invalid_argument unless reps >= 1 and both lists have
  /// exactly `reps` entries.
  void validate() const;
  /// Same (gamma, beta) for every repetition.
  static QaoaParams uniform(int reps, double gamma, double beta);
};

/// Logical to physical map that also answers "who sits on qubit q".
class LayoutState {
 public:
  LayoutState() = default;
  explicit LayoutState(const Layout &layout);

  const Layout &layout() const { return forward_; }
  Qubit qubit(VarId v) const;
  bool occupied(Qubit q) const { return backward_.contains(q); }
  /// Exchanges whatever is stored on a and b (either may be empty).
  void swap(Qubit a, Qubit b);

 private:
  Layout forward_;
  std::map<Qubit, VarId> backward_;
};

/// Concatenates the chain paths in chain_id order onto consecutive path
/// qubits. Throws std::length_error when the chains do not fit.
Layout map_chains_to_path(const std::vector<TriangleChain> &chains,
                          const HardwarePath &path);

struct CostLayer {
  Circuit circuit;
  /// Layout after the last gate of the layer.
  Layout final_layout;
  /// True when step 4 left some chain variables one slot off home.
  bool permuted = false;
};

/// The five-step chain schedule for one application of the cost operator.
///
/// `home` places every chain vertex on its path slot. The RZZ angle of a
/// term c*u*v is 2*c*gamma and every QUBO variable present in `home` gets
/// RZ(2*b*gamma) with b = -2*c_v - sum_j c_vj. Only chain edges are emitted
/// as RZZ; extraneous quadratic terms are left to route_extraneous.
///
/// With `reverse_step4_first` the layer assumes it starts from the permuted
/// state a forward layer ends in: it runs step 4 backwards (RZZ, then the
/// SWAP home) and then steps 1, 2, 3 and 5, ending unpermuted.
///
/// Throws std::logic_error if a chain edge spans more than two path slots.
CostLayer schedule_cost_layer(const Polynomial &qubo,
                              const std::vector<TriangleChain> &chains,
                              const Layout &home, std::size_t num_qubits,
                              double gamma, bool reverse_step4_first = false);

struct Interaction {
  VarId a;
  VarId b;
  double coefficient = 0.0;
};

/// Greedy SWAP routing. Pairs are taken by increasing coupling distance at
/// call time (canonical order on ties); the smaller endpoint walks a
/// shortest path toward the other, then RZZ(2*c*gamma) is applied. Moves
/// are kept, so `state` ends as the new layout. Gates are appended to
/// `circuit`. Throws std::invalid_argument if the endpoints are not
/// connected in `map`.
void route_extraneous(Circuit &circuit, const std::vector<Interaction> &pairs,
                      LayoutState &state, const DistanceTable &distances,
                      double gamma);

/// RX(2*beta) on every occupied qubit, in qubit order.
Circuit mixer_layer(const Layout &layout, std::size_t num_qubits, double beta);

struct CompilationResult {
  /// Native gate set: SWAPs already decomposed.
  Circuit circuit;
  /// Same gate stream before SWAP decomposition.
  Circuit logical_circuit;
  Metrics metrics;
  /// Layout at the start of every repetition, followed by the final layout.
  std::vector<Layout> layout_history;
  /// Native cost part of each repetition: chain schedule plus routing,
  /// without H or mixer gates; initial/final layouts filled in.
  std::vector<Circuit> cost_layers;
  /// Native depth of the first scheduled cost layer, routing excluded.
  std::size_t cost_layer_depth = 0;
  /// Constant term of the QUBO, dropped from the circuit.
  double energy_offset = 0.0;
  Strategy strategy = Strategy::Chain;
};

/// Chain strategy needs `problem` split so its chains are independent;
/// other interactions (including duplicate equalities) are routed after the
/// schedule. Baseline lays variables out in canonical order along the
/// device path and routes every quadratic term. Before every later
/// repetition the previous repetition's routing is undone, and a chain
/// layer that ended permuted is followed by a reversed one.
///
/// Throws std::length_error when the device is too small and
/// std::invalid_argument for overlapping chains.
CompilationResult compile_qaoa(const QuadratizedProblem &problem,
                               const CouplingMap &map, const QaoaParams &params,
                               Strategy strategy);

struct PipelineResult {
  QuadratizedProblem problem;
  CompilationResult compilation;
};

/// Quadratize with `strategy`, split shared chain vertices when needed, and
/// compile.
PipelineResult compile_polynomial(const Polynomial &poly, const CouplingMap &map,
                                  const QaoaParams &params, Strategy strategy,
                                  const QuadratizeOptions &opts = {});

/// Splits until every chain of `problem` is independent.
QuadratizedProblem prepare_chains(const QuadratizedProblem &problem);

}  // namespace hwqubo
