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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hwqubo/pubo.hpp"
#include "hwqubo/quadratizer.hpp"

namespace hwqubo {

/// Vertex per variable, weighted edge per quadratic term of a QUBO.
struct InteractionGraph {
  std::set<VarId> vertices;
  /// Keys are ordered pairs (first < second).
  std::map<VarPair, double> edges;

  bool has_edge(VarId a, VarId b) const {
    return edges.contains(ordered_pair(a, b));
  }
  double weight(VarId a, VarId b) const;
  std::vector<VarId> neighbors(VarId v) const;
  std::size_t degree(VarId v) const;
  std::size_t max_degree() const;
};

/// Throws std::invalid_argument when `qubo` has a term of degree > 2.
InteractionGraph build_interaction_graph(const Polynomial &qubo);

nlohmann::json to_json(const InteractionGraph &graph);
std::string to_dot(const InteractionGraph &graph);

struct Triangle {
  VarId aux;
  VarId factor_a;
  VarId factor_b;
  bool operator==(const Triangle &) const = default;
};

/// The traversal order in which a chain's variables go onto a line of
/// qubits. Path neighbours share an edge; every other triangle edge joins
/// vertices two steps apart, starting at an even position.
struct TriangleChain {
  int chain_id = 0;
  std::vector<VarId> path;
  std::vector<Triangle> triangles;

  std::set<VarId> vertex_set() const { return {path.begin(), path.end()}; }
};

/// Builds one path per chain id: both factors of the first substitution
/// (lower one first), its auxiliary, then for each later substitution the
/// new factor followed by the new auxiliary. A degree-1 neighbour of the
/// last auxiliary terminates the path.
///
/// Throws std::invalid_argument when consecutive substitutions of a chain do
/// not share an auxiliary or a substitution variable is missing from `graph`.
std::vector<TriangleChain> extract_chains(const InteractionGraph &graph,
                                          const std::vector<Substitution> &subs);

enum class ChainRelation { Independent, Bifurcation, Overlap };

struct ChainPairRelation {
  int first = 0;
  int second = 0;
  ChainRelation relation = ChainRelation::Independent;
  std::vector<VarId> shared;
};

/// One entry per unordered chain pair (first < second).
std::vector<ChainPairRelation> classify_chains(
    const std::vector<TriangleChain> &chains);

bool chains_independent(const std::vector<TriangleChain> &chains);

struct EdgeClassification {
  std::set<VarPair> chain_edges;
  std::set<VarPair> extraneous_edges;
};

/// Chain edges are path neighbours and distance-2 pairs starting at an even
/// path position; everything else is extraneous.
EdgeClassification classify_edges(const InteractionGraph &graph,
                                  const std::vector<TriangleChain> &chains);

const char *to_string(ChainRelation r);

}  // namespace hwqubo
