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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwqubo/device.hpp"
#include "hwqubo/pubo.hpp"

namespace hwqubo {

enum class GateKind { H, RZ, RX, RZZ, SWAP, CZ, SX, X };

/// Angle convention: RZ(t) = exp(-i t/2 Z), RX(t) = exp(-i t/2 X),
/// RZZ(t) = exp(-i t/2 Z(x)Z). Global phases are ignored.
class Gate {
 public:
  static Gate h(Qubit q) { return Gate(GateKind::H, {q, q}, 1, std::nullopt); }
  static Gate x(Qubit q) { return Gate(GateKind::X, {q, q}, 1, std::nullopt); }
  static Gate sx(Qubit q) { return Gate(GateKind::SX, {q, q}, 1, std::nullopt); }
  static Gate rz(Qubit q, double t) { return Gate(GateKind::RZ, {q, q}, 1, t); }
  static Gate rx(Qubit q, double t) { return Gate(GateKind::RX, {q, q}, 1, t); }
  static Gate rzz(Qubit a, Qubit b, double t);
  static Gate cz(Qubit a, Qubit b);
  static Gate swap(Qubit a, Qubit b);
  /// Validating constructor used by deserialisation.
  static Gate make(GateKind kind, std::vector<Qubit> qubits,
                   std::optional<double> param);

  GateKind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  Qubit qubit(std::size_t i) const { return qubits_[i]; }
  std::vector<Qubit> qubits() const {
    return {qubits_.begin(), qubits_.begin() + static_cast<long>(arity_)};
  }
  bool acts_on(Qubit q) const {
    return qubits_[0] == q || (arity_ == 2 && qubits_[1] == q);
  }
  const std::optional<double> &param() const { return param_; }

  bool operator==(const Gate &) const = default;

 private:
  Gate(GateKind kind, std::array<Qubit, 2> qubits, std::size_t arity,
       std::optional<double> param)
      : kind_(kind), qubits_(qubits), arity_(arity), param_(param) {}

  GateKind kind_;
  std::array<Qubit, 2> qubits_;
  std::size_t arity_;
  std::optional<double> param_;
};

const char *gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

using Layout = std::map<VarId, Qubit>;

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;
  Layout initial_layout;
  Layout final_layout;

  Circuit() = default;
  explicit Circuit(std::size_t n) : num_qubits(n) {}

  /// Throws std::out_of_range for qubits >= num_qubits.
  void add(const Gate &g);
  /// Appends the gates of `other`; layouts are left untouched.
  void append(const Circuit &other);

  bool operator==(const Circuit &) const = default;
};

struct Metrics {
  std::size_t depth = 0;
  std::size_t width = 0;
  std::size_t two_qubit_count = 0;
  std::size_t swap_count = 0;

  bool operator==(const Metrics &) const = default;
};

/// As-soon-as-possible critical path length, every gate one step.
std::size_t depth(const Circuit &circuit);
/// Number of distinct qubits any gate touches.
std::size_t width(const Circuit &circuit);
Metrics metrics(const Circuit &circuit);

/// Replaces each SWAP(a,b) by CZ, SX a, SX b repeated three times, which is
/// SWAP up to a global phase at depth 6.
Circuit decompose_swap(const Circuit &circuit);

/// Layout obtained by applying the SWAP gates of `gates` to `layout`.
Layout apply_swaps(const Layout &layout, const std::vector<Gate> &gates);

struct Violation {
  std::size_t gate_index;
  Qubit a;
  Qubit b;
};

/// Two-qubit gates whose pair is not coupled in `map`.
std::vector<Violation> check_connectivity(const Circuit &circuit,
                                          const CouplingMap &map);

enum class CircuitFormat { Json, QasmText };

CircuitFormat circuit_format_from_name(std::string_view name);
std::string serialize(const Circuit &circuit, CircuitFormat format);
nlohmann::json to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace hwqubo
