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
#include <stdexcept>

#include "hwqubo/compiler.hpp"
#include "internal.hpp"

namespace hwqubo {

namespace {

/// One chain's path slots resolved to home qubits.
struct Slots {
  std::vector<VarId> vars;
  std::vector<Qubit> qubits;

  std::size_t size() const { return vars.size(); }
};

bool is_chain_pair(std::size_t i, std::size_t j) {
  if (i > j) {
    std::swap(i, j);
  }
  return j - i == 1 || (j - i == 2 && i % 2 == 0);
}

void check_triangles(const TriangleChain &chain) {
  std::map<VarId, std::size_t> slot;
  for (std::size_t i = 0; i < chain.path.size(); ++i) {
    slot[chain.path[i]] = i;
  }
  for (const Triangle &t : chain.triangles) {
    const VarId corners[3] = {t.aux, t.factor_a, t.factor_b};
    for (int u = 0; u < 3; ++u) {
      for (int w = u + 1; w < 3; ++w) {
        auto a = slot.find(corners[u]);
        auto b = slot.find(corners[w]);
        if (a == slot.end() || b == slot.end() ||
            !is_chain_pair(a->second, b->second)) {
          throw std::logic_error("triangle edge " + corners[u].name() + "-" +
                                 corners[w].name() + " of chain " +
                                 std::to_string(chain.chain_id) +
                                 " is more than two path slots long");
        }
      }
    }
  }
}

}  // namespace

CostLayer schedule_cost_layer(const Polynomial &qubo,
                              const std::vector<TriangleChain> &chains,
                              const Layout &home, std::size_t num_qubits,
                              double gamma, bool reverse_step4_first) {
  std::vector<Slots> slots;
  for (const TriangleChain &chain : chains) {
    check_triangles(chain);
    Slots s;
    for (VarId v : chain.path) {
      auto it = home.find(v);
      if (it == home.end()) {
        throw std::invalid_argument("chain variable " + v.name() +
                                    " has no home qubit");
      }
      s.vars.push_back(v);
      s.qubits.push_back(it->second);
    }
    slots.push_back(std::move(s));
  }

  auto coef = [&](const Slots &s, std::size_t i, std::size_t j) {
    return qubo.coefficient(Monomial{s.vars[i], s.vars[j]});
  };

  // Step-4 pairs (4i-2, 4i) whose RZZ is emitted; they carry the permutation.
  std::vector<std::vector<std::size_t>> step4(slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) {
    for (std::size_t j = 2; j + 2 < slots[c].size(); j += 4) {
      if (coef(slots[c], j, j + 2) != 0.0) {
        step4[c].push_back(j);
      }
    }
  }

  LayoutState state(home);
  if (reverse_step4_first) {
    for (std::size_t c = 0; c < slots.size(); ++c) {
      for (std::size_t j : step4[c]) {
        state.swap(slots[c].qubits[j], slots[c].qubits[j + 1]);
      }
    }
  }

  CostLayer out;
  out.circuit = Circuit(num_qubits);
  out.circuit.initial_layout = state.layout();
  Circuit &circ = out.circuit;
  auto swap = [&](Qubit a, Qubit b) {
    circ.add(Gate::swap(a, b));
    state.swap(a, b);
  };

  if (reverse_step4_first) {
    for (std::size_t c = 0; c < slots.size(); ++c) {
      const Slots &s = slots[c];
      for (std::size_t j : step4[c]) {
        circ.add(Gate::rzz(s.qubits[j + 1], s.qubits[j + 2],
                           2.0 * coef(s, j, j + 2) * gamma));
        swap(s.qubits[j], s.qubits[j + 1]);
      }
    }
  }

  // Steps 1 and 2: path neighbours starting at even, then odd, slots.
  for (std::size_t parity = 0; parity < 2; ++parity) {
    for (const Slots &s : slots) {
      for (std::size_t j = parity; j + 1 < s.size(); j += 2) {
        double c = coef(s, j, j + 1);
        if (c != 0.0) {
          circ.add(Gate::rzz(s.qubits[j], s.qubits[j + 1], 2.0 * c * gamma));
        }
      }
    }
  }

  // Step 3: (4i, 4i+2) by bringing 4i+2 next to 4i and back.
  for (const Slots &s : slots) {
    for (std::size_t j = 0; j + 2 < s.size(); j += 4) {
      double c = coef(s, j, j + 2);
      if (c == 0.0) {
        continue;
      }
      swap(s.qubits[j + 1], s.qubits[j + 2]);
      circ.add(Gate::rzz(s.qubits[j], s.qubits[j + 1], 2.0 * c * gamma));
      swap(s.qubits[j + 1], s.qubits[j + 2]);
    }
  }

  if (!reverse_step4_first) {
    for (std::size_t c = 0; c < slots.size(); ++c) {
      const Slots &s = slots[c];
      for (std::size_t j : step4[c]) {
        swap(s.qubits[j], s.qubits[j + 1]);
        circ.add(Gate::rzz(s.qubits[j + 1], s.qubits[j + 2],
                           2.0 * coef(s, j, j + 2) * gamma));
      }
      out.permuted = out.permuted || !step4[c].empty();
    }
  }

  // Step 5: linear terms wherever the variables now sit.
  const auto field = detail::linear_field(qubo);
  std::vector<std::pair<Qubit, double>> rz;
  for (const auto &[v, q] : state.layout()) {
    auto it = field.find(v);
    rz.emplace_back(q, it == field.end() ? 0.0 : it->second);
  }
  std::sort(rz.begin(), rz.end());
  for (auto [q, b] : rz) {
    circ.add(Gate::rz(q, 2.0 * b * gamma));
  }

  out.final_layout = state.layout();
  circ.final_layout = out.final_layout;
  return out;
}

}  // namespace hwqubo
