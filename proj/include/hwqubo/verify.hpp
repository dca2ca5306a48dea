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

#include <optional>
#include <vector>

#include "hwqubo/circuit.hpp"
#include "hwqubo/device.hpp"
#include "hwqubo/pubo.hpp"
#include "hwqubo/quadratizer.hpp"

namespace hwqubo {

/// Exhaustive search is refused above this many variables.
inline constexpr std::size_t kMaxBruteForceVars = 24;

/// Values within this distance of the minimum count as minimal.
inline constexpr double kMinimumTolerance = 1e-9;

struct BruteForceResult {
  double value = 0.0;
  std::vector<Assignment> argmins;
};

/// Throws std::length_error above kMaxBruteForceVars variables.
BruteForceResult brute_force_min(const Polynomial &poly);

struct VerificationReport {
  bool minima_preserved = false;
  double min_original = 0.0;
  double min_qubo = 0.0;
  /// For every assignment x of the original variables, minimising the QUBO
  /// over the remaining variables gives back C(x).
  bool extension_ok = false;
  /// Every QUBO minimiser satisfies y = a*b and x = x', and projects to a
  /// minimiser of the original.
  bool argmin_projection_ok = false;
  std::optional<bool> phase_ok;
  std::optional<double> max_phase_error;
  std::optional<bool> connectivity_ok;

  /// True when every computed check passed.
  bool ok() const;
};

nlohmann::json to_json(const VerificationReport &report);

/// Enumerates all assignments of the QUBO, duplicates included as free
/// binaries. Fills the quadratization fields only.
VerificationReport check_quadratization(const Polynomial &original,
                                        const QuadratizedProblem &problem);

struct PhaseCheck {
  bool ok = false;
  double max_error = 0.0;
  /// Every basis state ended on a single basis state matching final_layout.
  bool permutation_ok = false;
};

/// Phase oracle for a diagonal-plus-permutation circuit.
///
/// Runs every assignment of the variables in `layout` (all other touched
/// qubits start in |0>) through `circuit`, and checks that the result is a
/// single basis state with the variables on `circuit.final_layout`, ancillas
/// back at 0, and phase(s) - phase(0) = -4*gamma*(E(s) - E(0)) where E is
/// `qubo` plus `offset`. SX is accepted as long as the amplitudes recombine,
/// which the native SWAP template does.
///
/// Throws std::invalid_argument on H or RX gates, or when a QUBO variable is
/// not in `layout`.
PhaseCheck phase_oracle_check(const Circuit &circuit, const Polynomial &qubo,
                              double gamma, const Layout &layout,
                              double offset = 0.0);

/// Drops H and RX gates, leaving the product of all cost layers.
Circuit diagonal_part(const Circuit &circuit);

}  // namespace hwqubo
