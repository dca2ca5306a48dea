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
#include <optional>
#include <stdexcept>
#include <tuple>

#include "hwqubo/compiler.hpp"

namespace hwqubo {

LayoutState::LayoutState(const Layout &layout) : forward_(layout) {
  for (const auto &[v, q] : layout) {
    if (!backward_.emplace(q, v).second) {
      throw std::invalid_argument("layout puts two variables on qubit " +
                                  std::to_string(q));
    }
  }
}

Qubit LayoutState::qubit(VarId v) const {
  auto it = forward_.find(v);
  if (it == forward_.end()) {
    throw std::out_of_range("variable " + v.name() + " is not placed");
  }
  return it->second;
}

void LayoutState::swap(Qubit a, Qubit b) {
  auto ia = backward_.find(a);
  auto ib = backward_.find(b);
  std::optional<VarId> va;
  std::optional<VarId> vb;
  if (ia != backward_.end()) {
    va = ia->second;
    backward_.erase(ia);
  }
  if (ib != backward_.end()) {
    vb = ib->second;
    backward_.erase(ib);
  }
  if (va) {
    backward_.emplace(b, *va);
    forward_[*va] = b;
  }
  if (vb) {
    backward_.emplace(a, *vb);
    forward_[*vb] = a;
  }
}

void route_extraneous(Circuit &circuit, const std::vector<Interaction> &pairs,
                      LayoutState &state, const DistanceTable &distances,
                      double gamma) {
  struct Pending {
    int distance;
    VarPair pair;
    double coefficient;
  };
  std::vector<Pending> order;
  order.reserve(pairs.size());
  for (const Interaction &p : pairs) {
    int d = distances.distance(state.qubit(p.a), state.qubit(p.b));
    if (d == DistanceTable::kUnreachable) {
      throw std::invalid_argument("variables " + p.a.name() + " and " +
                                  p.b.name() +
                                  " sit in disconnected parts of the device");
    }
    order.push_back({d, ordered_pair(p.a, p.b), p.coefficient});
  }
  std::stable_sort(order.begin(), order.end(), [](const auto &x, const auto &y) {
    return std::tie(x.distance, x.pair) < std::tie(y.distance, y.pair);
  });

  for (const Pending &p : order) {
    const VarId mover = p.pair.first;
    const VarId target = p.pair.second;
    while (distances.distance(state.qubit(mover), state.qubit(target)) > 1) {
      Qubit from = state.qubit(mover);
      Qubit to = distances.next_hop(from, state.qubit(target));
      circuit.add(Gate::swap(from, to));
      state.swap(from, to);
    }
    circuit.add(Gate::rzz(state.qubit(mover), state.qubit(target),
                          2.0 * p.coefficient * gamma));
  }
}

Circuit mixer_layer(const Layout &layout, std::size_t num_qubits, double beta) {
  std::vector<Qubit> occupied;
  for (const auto &[v, q] : layout) {
    occupied.push_back(q);
  }
  std::sort(occupied.begin(), occupied.end());
  Circuit out(num_qubits);
  for (Qubit q : occupied) {
    out.add(Gate::rx(q, 2.0 * beta));
  }
  out.initial_layout = layout;
  out.final_layout = layout;
  return out;
}

}  // namespace hwqubo
