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

#include <gtest/gtest.h>

#include <random>

#include "hwqubo/circuit.hpp"
#include "oracle.hpp"

using namespace hwqubo;

TEST(Gate, Construction) {
  Gate g = Gate::rzz(2, 5, 0.25);
  EXPECT_EQ(g.kind(), GateKind::RZZ);
  EXPECT_EQ(g.arity(), 2u);
  EXPECT_EQ(g.qubits(), (std::vector<Qubit>{2, 5}));
  EXPECT_TRUE(g.acts_on(5));
  EXPECT_FALSE(g.acts_on(3));
  EXPECT_EQ(*g.param(), 0.25);
  EXPECT_FALSE(Gate::h(1).param().has_value());
  EXPECT_EQ(Gate::h(1).arity(), 1u);
  EXPECT_THROW(Gate::cz(3, 3), std::invalid_argument);
  EXPECT_THROW(Gate::make(GateKind::RZ, {0}, std::nullopt), std::invalid_argument);
  EXPECT_THROW(Gate::make(GateKind::H, {0, 1}, std::nullopt), std::invalid_argument);
  EXPECT_EQ(Gate::make(GateKind::SWAP, {1, 0}, std::nullopt), Gate::swap(1, 0));
}

TEST(Gate, Names) {
  for (GateKind k : {GateKind::H, GateKind::RZ, GateKind::RX, GateKind::RZZ,
                     GateKind::SWAP, GateKind::CZ, GateKind::SX, GateKind::X}) {
    EXPECT_EQ(gate_kind_from_name(gate_name(k)), k);
  }
  EXPECT_STREQ(gate_name(GateKind::RZZ), "rzz");
  EXPECT_THROW(gate_kind_from_name("cx"), std::invalid_argument);
}

TEST(Circuit, AddChecksRange) {
  Circuit c(2);
  c.add(Gate::h(1));
  EXPECT_THROW(c.add(Gate::h(2)), std::out_of_range);
  EXPECT_THROW(c.add(Gate::cz(0, 2)), std::out_of_range);
  EXPECT_EQ(c.gates.size(), 1u);
}

TEST(Depth, Examples) {
  Circuit c(4);
  EXPECT_EQ(depth(c), 0u);
  EXPECT_EQ(width(c), 0u);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  EXPECT_EQ(depth(c), 1u);
  c.add(Gate::rzz(0, 1, 0.1));
  EXPECT_EQ(depth(c), 2u);
  c.add(Gate::rz(3, 0.1));
  EXPECT_EQ(depth(c), 2u);
  c.add(Gate::rzz(1, 2, 0.1));
  c.add(Gate::rzz(2, 3, 0.1));
  EXPECT_EQ(depth(c), 4u);
  EXPECT_EQ(width(c), 4u);
  Metrics m = metrics(c);
  EXPECT_EQ(m.depth, 4u);
  EXPECT_EQ(m.two_qubit_count, 3u);
  EXPECT_EQ(m.swap_count, 0u);
}

TEST(SwapTemplate, Structure) {
  Circuit c(2);
  c.add(Gate::swap(0, 1));
  Circuit d = decompose_swap(c);
  std::size_t cz = 0;
  std::size_t sx = 0;
  for (const auto &g : d.gates) {
    cz += g.kind() == GateKind::CZ;
    sx += g.kind() == GateKind::SX;
  }
  EXPECT_EQ(cz, 3u);
  EXPECT_EQ(sx, 6u);
  EXPECT_EQ(d.gates.size(), 9u);
  EXPECT_EQ(depth(d), 6u);
}

TEST(SwapTemplate, IsSwapUpToPhase) {
  for (auto [a, b] : {std::pair<Qubit, Qubit>{0, 1}, {1, 0}}) {
    Circuit c(2);
    c.add(Gate::swap(a, b));
    EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(decompose_swap(c)),
                                           oracle::unitary(c)),
              1e-12);
  }
}

TEST(SwapTemplate, ParallelSwaps) {
  Circuit c(4);
  c.add(Gate::swap(0, 1));
  c.add(Gate::swap(2, 3));
  EXPECT_EQ(depth(decompose_swap(c)), 6u);
  EXPECT_EQ(depth(c), 1u);
}

TEST(SwapTemplate, PreservesCircuitUnitary) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Qubit> q(0, 3);
  std::uniform_real_distribution<double> t(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(4);
    for (int k = 0; k < 12; ++k) {
      Qubit a = q(rng);
      Qubit b = (a + 1 + q(rng) % 3) % 4;
      switch (k % 4) {
        case 0: c.add(Gate::rx(a, t(rng))); break;
        case 1: c.add(Gate::swap(a, b)); break;
        case 2: c.add(Gate::rzz(a, b, t(rng))); break;
        default: c.add(Gate::h(a)); break;
      }
    }
    Circuit d = decompose_swap(c);
    EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(d), oracle::unitary(c)),
              1e-10);
    Metrics mc = metrics(c);
    Metrics md = metrics(d);
    EXPECT_EQ(md.swap_count, 0u);
    EXPECT_EQ(md.two_qubit_count, mc.two_qubit_count + 2 * mc.swap_count);
  }
}

TEST(SwapTemplate, KeepsLayouts) {
  Circuit c(3);
  c.initial_layout = {{VarId::problem(1), 0}};
  c.final_layout = {{VarId::problem(1), 1}};
  c.add(Gate::swap(0, 1));
  Circuit d = decompose_swap(c);
  EXPECT_EQ(d.initial_layout, c.initial_layout);
  EXPECT_EQ(d.final_layout, c.final_layout);
  EXPECT_EQ(d.num_qubits, 3u);
}

TEST(Layouts, ApplySwaps) {
  const VarId a = VarId::problem(1);
  const VarId b = VarId::problem(2);
  Layout l = {{a, 0}, {b, 1}};
  Layout moved = apply_swaps(l, {Gate::swap(0, 1), Gate::rzz(0, 1, 1.0), Gate::swap(1, 2)});
  EXPECT_EQ(moved, (Layout{{a, 2}, {b, 0}}));
  EXPECT_EQ(apply_swaps(l, {}), l);
}

TEST(Connectivity, FindsViolations) {
  CouplingMap line = line_map(4);
  Circuit c(4);
  c.add(Gate::rzz(0, 1, 1));
  c.add(Gate::h(3));
  c.add(Gate::cz(0, 2));
  c.add(Gate::swap(3, 2));
  c.add(Gate::rzz(3, 0, 1));
  auto v = check_connectivity(c, line);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].gate_index, 2u);
  EXPECT_EQ(v[0].a, 0u);
  EXPECT_EQ(v[0].b, 2u);
  EXPECT_EQ(v[1].gate_index, 4u);
  EXPECT_TRUE(check_connectivity(c, fully_connected_map(4)).empty());
}

TEST(Serialize, Qasm) {
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::rzz(2, 1, 0.5));
  c.add(Gate::swap(0, 1));
  c.add(Gate::rx(1, -1.25));
  const std::string text = serialize(c, CircuitFormat::QasmText);
  EXPECT_EQ(text.rfind("OPENQASM 2.0;\n", 0), 0u);
  EXPECT_NE(text.find("qreg q[3];\n"), std::string::npos);
  EXPECT_NE(text.find("h q[0];\n"), std::string::npos);
  EXPECT_NE(text.find("rzz(0.5) q[2], q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("swap q[0], q[1];\n"), std::string::npos);
  EXPECT_NE(text.find("rx(-1.25) q[1];\n"), std::string::npos);
  EXPECT_EQ(circuit_format_from_name("qasm"), CircuitFormat::QasmText);
  EXPECT_EQ(circuit_format_from_name("json"), CircuitFormat::Json);
  EXPECT_THROW(circuit_format_from_name("quil"), std::invalid_argument);
}

TEST(Serialize, JsonRoundTrip) {
  Circuit c(5);
  c.initial_layout = {{VarId::problem(1), 3}, {VarId::auxiliary(2), 4}};
  c.final_layout = {{VarId::problem(1), 4}, {VarId::auxiliary(2), 3}};
  c.add(Gate::h(3));
  c.add(Gate::rzz(3, 4, 0.1 + 0.2));
  c.add(Gate::swap(3, 4));
  c.add(Gate::sx(0));
  c.add(Gate::cz(1, 2));
  c.add(Gate::rz(4, -1e-7));
  Circuit back = circuit_from_json(to_json(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(circuit_from_json(nlohmann::json::parse(serialize(c, CircuitFormat::Json))), c);
  EXPECT_THROW(circuit_from_json(nlohmann::json::parse(
                   R"({"num_qubits":1,"gates":[{"g":"h","q":[3]}]})")),
               std::out_of_range);
}
