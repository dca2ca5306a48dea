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

#include "hwqubo/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hwqubo {

namespace {

void require_distinct(Qubit a, Qubit b) {
  if (a == b) {
    throw std::invalid_argument("two-qubit gate on a single qubit " +
                                std::to_string(a));
  }
}

bool takes_param(GateKind k) {
  return k == GateKind::RZ || k == GateKind::RX || k == GateKind::RZZ;
}

std::size_t kind_arity(GateKind k) {
  return (k == GateKind::RZZ || k == GateKind::SWAP || k == GateKind::CZ) ? 2
                                                                          : 1;
}

std::string format_angle(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Gate Gate::rzz(Qubit a, Qubit b, double t) {
  require_distinct(a, b);
  return Gate(GateKind::RZZ, {a, b}, 2, t);
}

Gate Gate::cz(Qubit a, Qubit b) {
  require_distinct(a, b);
  return Gate(GateKind::CZ, {a, b}, 2, std::nullopt);
}

Gate Gate::swap(Qubit a, Qubit b) {
  require_distinct(a, b);
  return Gate(GateKind::SWAP, {a, b}, 2, std::nullopt);
}

Gate Gate::make(GateKind kind, std::vector<Qubit> qubits,
                std::optional<double> param) {
  if (qubits.size() != kind_arity(kind)) {
    throw std::invalid_argument(std::string("wrong operand count for ") +
                                gate_name(kind));
  }
  if (takes_param(kind) != param.has_value()) {
    throw std::invalid_argument(std::string("wrong parameter usage for ") +
                                gate_name(kind));
  }
  if (qubits.size() == 2) {
    require_distinct(qubits[0], qubits[1]);
    return Gate(kind, {qubits[0], qubits[1]}, 2, param);
  }
  return Gate(kind, {qubits[0], qubits[0]}, 1, param);
}

const char *gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::RZ:
      return "rz";
    case GateKind::RX:
      return "rx";
    case GateKind::RZZ:
      return "rzz";
    case GateKind::SWAP:
      return "swap";
    case GateKind::CZ:
      return "cz";
    case GateKind::SX:
      return "sx";
    case GateKind::X:
      return "x";
  }
  return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
  for (GateKind k : {GateKind::H, GateKind::RZ, GateKind::RX, GateKind::RZZ,
                     GateKind::SWAP, GateKind::CZ, GateKind::SX, GateKind::X}) {
    if (name == gate_name(k)) {
      return k;
    }
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

void Circuit::add(const Gate &g) {
  for (Qubit q : g.qubits()) {
    if (q >= num_qubits) {
      throw std::out_of_range("gate on qubit " + std::to_string(q) +
                              " exceeds circuit width " +
                              std::to_string(num_qubits));
    }
  }
  gates.push_back(g);
}

void Circuit::append(const Circuit &other) {
  for (const Gate &g : other.gates) {
    add(g);
  }
}

std::size_t depth(const Circuit &circuit) {
  std::vector<std::size_t> level(circuit.num_qubits, 0);
  std::size_t best = 0;
  for (const Gate &g : circuit.gates) {
    std::size_t start = 0;
    for (Qubit q : g.qubits()) {
      start = std::max(start, level[q]);
    }
    for (Qubit q : g.qubits()) {
      level[q] = start + 1;
    }
    best = std::max(best, start + 1);
  }
  return best;
}

std::size_t width(const Circuit &circuit) {
  std::set<Qubit> used;
  for (const Gate &g : circuit.gates) {
    for (Qubit q : g.qubits()) {
      used.insert(q);
    }
  }
  return used.size();
}

Metrics metrics(const Circuit &circuit) {
  Metrics m;
  m.depth = depth(circuit);
  m.width = width(circuit);
  for (const Gate &g : circuit.gates) {
    if (g.arity() == 2) {
      ++m.two_qubit_count;
    }
    if (g.kind() == GateKind::SWAP) {
      ++m.swap_count;
    }
  }
  return m;
}

Circuit decompose_swap(const Circuit &circuit) {
  Circuit out(circuit.num_qubits);
  out.initial_layout = circuit.initial_layout;
  out.final_layout = circuit.final_layout;
  out.gates.reserve(circuit.gates.size());
  for (const Gate &g : circuit.gates) {
    if (g.kind() != GateKind::SWAP) {
      out.gates.push_back(g);
      continue;
    }
    Qubit a = g.qubit(0);
    Qubit b = g.qubit(1);
    for (int rep = 0; rep < 3; ++rep) {
      out.gates.push_back(Gate::cz(a, b));
      out.gates.push_back(Gate::sx(a));
      out.gates.push_back(Gate::sx(b));
    }
  }
  return out;
}

Layout apply_swaps(const Layout &layout, const std::vector<Gate> &gates) {
  std::map<Qubit, VarId> at;
  for (const auto &[v, q] : layout) {
    at.emplace(q, v);
  }
  for (const Gate &g : gates) {
    if (g.kind() != GateKind::SWAP) {
      continue;
    }
    Qubit a = g.qubit(0);
    Qubit b = g.qubit(1);
    auto ia = at.find(a);
    auto ib = at.find(b);
    std::optional<VarId> va;
    std::optional<VarId> vb;
    if (ia != at.end()) {
      va = ia->second;
      at.erase(ia);
    }
    if (ib != at.end()) {
      vb = ib->second;
      at.erase(ib);
    }
    if (va) {
      at.emplace(b, *va);
    }
    if (vb) {
      at.emplace(a, *vb);
    }
  }
  Layout out;
  for (const auto &[q, v] : at) {
    out.emplace(v, q);
  }
  return out;
}

std::vector<Violation> check_connectivity(const Circuit &circuit,
                                          const CouplingMap &map) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate &g = circuit.gates[i];
    if (g.arity() != 2) {
      continue;
    }
    Qubit a = g.qubit(0);
    Qubit b = g.qubit(1);
    if (a >= map.num_qubits() || b >= map.num_qubits() || !map.coupled(a, b)) {
      out.push_back({i, a, b});
    }
  }
  return out;
}

CircuitFormat circuit_format_from_name(std::string_view name) {
  if (name == "json") {
    return CircuitFormat::Json;
  }
  if (name == "qasm" || name == "qasm-text") {
    return CircuitFormat::QasmText;
  }
  throw std::invalid_argument("unsupported circuit format '" +
                              std::string(name) + "'");
}

namespace {

nlohmann::json layout_json(const Layout &layout) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto &[v, q] : layout) {
    out[v.name()] = q;
  }
  return out;
}

Layout layout_from(const nlohmann::json &j) {
  Layout out;
  for (const auto &[k, v] : j.items()) {
    out.emplace(VarId::parse(k), v.get<Qubit>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const Circuit &circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate &g : circuit.gates) {
    nlohmann::json entry = {{"g", gate_name(g.kind())}, {"q", g.qubits()}};
    if (g.param()) {
      entry["p"] = *g.param();
    }
    gates.push_back(std::move(entry));
  }
  return {{"num_qubits", circuit.num_qubits},
          {"initial_layout", layout_json(circuit.initial_layout)},
          {"final_layout", layout_json(circuit.final_layout)},
          {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
  Circuit c(j.at("num_qubits").get<std::size_t>());
  c.initial_layout = layout_from(j.value("initial_layout", nlohmann::json::object()));
  c.final_layout = layout_from(j.value("final_layout", nlohmann::json::object()));
  for (const auto &g : j.at("gates")) {
    std::optional<double> param;
    if (g.contains("p")) {
      param = g["p"].get<double>();
    }
    c.add(Gate::make(gate_kind_from_name(g.at("g").get<std::string>()),
                     g.at("q").get<std::vector<Qubit>>(), param));
  }
  return c;
}

std::string serialize(const Circuit &circuit, CircuitFormat format) {
  if (format == CircuitFormat::Json) {
    return to_json(circuit).dump();
  }
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  for (const Gate &g : circuit.gates) {
    out << gate_name(g.kind());
    if (g.param()) {
      out << '(' << format_angle(*g.param()) << ')';
    }
    out << " q[" << g.qubit(0) << ']';
    if (g.arity() == 2) {
      out << ", q[" << g.qubit(1) << ']';
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace hwqubo
