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

#include <algorithm>
#include <set>

#include "hwqubo/graph.hpp"
#include "hwqubo/quadratizer.hpp"

namespace hwqubo {

QuadratizedProblem split_shared_variables(
    const QuadratizedProblem &problem, const std::vector<TriangleChain> &chains) {
  const double cp = problem.penalty_factor;

  // The substituted cost function without any penalty contributions.
  Polynomial residual = problem.qubo;
  for (const auto &s : problem.substitutions) {
    residual -= penalty_term(s.factor_a, s.factor_b, s.aux, s.penalty_factor);
  }
  for (const auto &[x, dup] : problem.duplicates) {
    residual -= equality_penalty(x, dup, cp);
  }

  std::vector<TriangleChain> ordered = chains;
  std::sort(ordered.begin(), ordered.end(),
            [](const auto &a, const auto &b) { return a.chain_id < b.chain_id; });
  std::vector<std::set<VarId>> vertex_sets;
  for (const auto &c : ordered) {
    vertex_sets.push_back(c.vertex_set());
  }

  std::map<VarId, std::uint32_t> copies;
  for (const auto &[x, dup] : problem.duplicates) {
    copies[x] = std::max(copies[x], dup.index());
  }

  QuadratizedProblem out = problem;
  std::vector<std::map<VarId, VarId>> rename(ordered.size());
  std::set<VarId> seen;
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    for (VarId v : ordered[c].path) {
      if (seen.contains(v)) {
        VarId dup = VarId::duplicate(v.base(), ++copies[v.base()]);
        rename[c][v] = dup;
        out.duplicates.emplace_back(v, dup);
        out.extraneous_equalities.emplace_back(v, dup);
      }
    }
    seen.insert(vertex_sets[c].begin(), vertex_sets[c].end());
  }

  auto renamed = [&](std::size_t c, VarId v) {
    auto it = rename[c].find(v);
    return it == rename[c].end() ? v : it->second;
  };

  std::map<int, std::size_t> chain_slot;
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    chain_slot[ordered[c].chain_id] = c;
  }
  for (auto &s : out.substitutions) {
    auto it = chain_slot.find(s.chain_id);
    if (it == chain_slot.end()) {
      continue;
    }
    s.factor_a = renamed(it->second, s.factor_a);
    s.factor_b = renamed(it->second, s.factor_b);
  }

  Polynomial qubo;
  for (const auto &[m, coef] : residual.terms()) {
    if (m.degree() != 2) {
      qubo.add_term(m, coef);
      continue;
    }
    VarId u = m.vars()[0];
    VarId w = m.vars()[1];
    auto home = std::find_if(vertex_sets.begin(), vertex_sets.end(),
                             [&](const auto &vs) {
                               return vs.contains(u) && vs.contains(w);
                             });
    if (home == vertex_sets.end()) {
      qubo.add_term(m, coef);
    } else {
      auto c = static_cast<std::size_t>(home - vertex_sets.begin());
      qubo.add_term({renamed(c, u), renamed(c, w)}, coef);
    }
  }
  for (const auto &s : out.substitutions) {
    qubo += penalty_term(s.factor_a, s.factor_b, s.aux, s.penalty_factor);
  }
  for (const auto &[x, dup] : out.duplicates) {
    qubo += equality_penalty(x, dup, cp);
  }
  out.qubo = std::move(qubo);
  return out;
}

}  // namespace hwqubo
