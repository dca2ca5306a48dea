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

#include <cstdint>
#include <optional>
#include <vector>

#include "hwqubo/pubo.hpp"

namespace hwqubo {

struct TriangleChain;

/// One auxiliary variable standing for the product factor_a * factor_b.
struct Substitution {
  VarId aux;
  VarId factor_a;
  VarId factor_b;
  double penalty_factor = 1.0;
  int chain_id = 0;

  bool operator==(const Substitution &) const = default;
};

struct QuadratizedProblem {
  Polynomial qubo;
  std::vector<Substitution> substitutions;
  Polynomial original;
  double penalty_factor = 1.0;
  /// (original variable, its duplicate)
  std::vector<VarPair> duplicates;
  /// Equalities enforced by c_p (x - x')^2; these edges are always
  /// routed as extraneous interactions.
  std::vector<VarPair> extraneous_equalities;

  std::size_t aux_count() const { return substitutions.size(); }
  std::size_t total_variables() const { return qubo.variables().size(); }

  bool operator==(const QuadratizedProblem &) const = default;
};

enum class Strategy { Chain, Baseline };

enum class TieBreak {
  /// Deterministic. The baseline keeps the earliest candidate in canonical
  /// order; the chain builder keeps the latest one.
  Canonical,
  /// Uniform among tied candidates, seeded.
  Random,
};

enum class Weighting {
  /// Count the terms a candidate occurs in.
  Count,
  /// Sum |coefficient| over those terms.
  Coefficient,
};

struct QuadratizeOptions {
  TieBreak tie_break = TieBreak::Canonical;
  std::uint64_t seed = 0;
  Weighting weighting = Weighting::Count;
  /// Overrides select_penalty_factor when set.
  std::optional<double> penalty_factor;
};

/// 1 + sum of |c| over the non-constant terms of `poly`.
double select_penalty_factor(const Polynomial &poly);

/// Min-variable heuristic: substitute the globally most frequent pair among
/// the terms of degree >= 3 until the polynomial is quadratic.
QuadratizedProblem quadratize_baseline(const Polynomial &poly,
                                       const QuadratizeOptions &opts = {});

/// Hardware-efficient greedy that grows chains of triangles: every new
/// auxiliary substitutes the previous auxiliary times the variable that most
/// often co-occurs with it in degree >= 3 terms. When a chain cannot be
/// extended and higher-order terms remain, a new chain starts over all
/// variables present so far.
QuadratizedProblem quadratize_chain(const Polynomial &poly,
                                    const QuadratizeOptions &opts = {});

QuadratizedProblem quadratize(const Polynomial &poly, Strategy strategy,
                              const QuadratizeOptions &opts = {});

/// Gives every later chain its own duplicate of each vertex it shares with an
/// earlier chain, adds c_p (x + x' - 2 x x') per duplicate, and rewires the
/// later chain's penalty terms and in-chain residual terms to the duplicate.
/// The lowest chain id keeps the original variable.
QuadratizedProblem split_shared_variables(const QuadratizedProblem &problem,
                                          const std::vector<TriangleChain> &chains);

/// Equality penalty c_p (x - x')^2 expanded on binary variables.
Polynomial equality_penalty(VarId x, VarId x_dup, double penalty_factor);

nlohmann::json to_json(const QuadratizedProblem &problem);
QuadratizedProblem quadratized_from_json(const nlohmann::json &j);

}  // namespace hwqubo
