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

#include <fstream>
#include <sstream>

#include "hwqubo/device.hpp"

using namespace hwqubo;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Torino, Shape) {
  CouplingMap m = ibm_torino();
  EXPECT_EQ(m.name(), "ibm_torino");
  EXPECT_EQ(m.num_qubits(), 133u);
  EXPECT_EQ(m.edges().size(), 150u);
  EXPECT_EQ(m.max_degree(), 3u);
  EXPECT_TRUE(m.is_connected());
  std::size_t deg2 = 0;
  for (Qubit q = 0; q < m.num_qubits(); ++q) {
    EXPECT_GE(m.degree(q), 1u);
    deg2 += m.degree(q) == 2;
  }
  EXPECT_GT(deg2 * 2, m.num_qubits());
}

TEST(Torino, MatchesDataFile) {
  CouplingMap file = load_coupling_map(read_file(HWQUBO_DATA_DIR "/ibm_torino.json"));
  EXPECT_EQ(file, ibm_torino());
  EXPECT_EQ(resolve_device("file:" HWQUBO_DATA_DIR "/ibm_torino.json"), ibm_torino());
}

TEST(Torino, GreedyPath) {
  CouplingMap m = ibm_torino();
  HardwarePath p = longest_nn_path(m);
  EXPECT_EQ(p.size(), 112u);
  ASSERT_GE(p.size(), 3u);
  EXPECT_EQ(p.qubits[0], 14u);
  EXPECT_EQ(p.qubits[1], 13u);
  EXPECT_EQ(p.qubits[2], 12u);
  EXPECT_TRUE(is_valid_path(p, m));
}

TEST(HeavyHex, SmallLattices) {
  CouplingMap m = heavy_hex(1, 1);
  EXPECT_EQ(m.num_qubits(), 9u);
  EXPECT_EQ(m.max_degree(), 3u);
  CouplingMap two = heavy_hex(2, 1);
  EXPECT_EQ(two.num_qubits(), 18u);
  EXPECT_TRUE(two.is_connected());
  EXPECT_EQ(resolve_device("heavy-hex:7,3").edges(), ibm_torino().edges());
  EXPECT_THROW(heavy_hex(0, 2), std::invalid_argument);
}

TEST(Paths, Line) {
  CouplingMap m = line_map(3);
  HardwarePath p = longest_nn_path(m);
  EXPECT_EQ(p.qubits, (std::vector<Qubit>{0, 1, 2}));
  EXPECT_TRUE(is_valid_path(p, m));
  EXPECT_EQ(longest_nn_path(line_map(1)).qubits, (std::vector<Qubit>{0}));
}

TEST(Paths, Cycle) {
  CouplingMap ring("ring", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(longest_nn_path(ring).qubits, (std::vector<Qubit>{0, 1, 2, 3}));
}

TEST(Paths, FullyConnected) {
  CouplingMap m = fully_connected_map(5);
  EXPECT_EQ(m.edges().size(), 10u);
  EXPECT_EQ(longest_nn_path(m).qubits, (std::vector<Qubit>{0, 1, 2, 3, 4}));
}

TEST(Paths, Validity) {
  CouplingMap m = line_map(4);
  EXPECT_TRUE(is_valid_path({{2, 1, 0}}, m));
  EXPECT_FALSE(is_valid_path({{0, 2}}, m));
  EXPECT_FALSE(is_valid_path({{0, 1, 0}}, m));
  EXPECT_FALSE(is_valid_path({{3, 4}}, m));
  EXPECT_THROW(longest_nn_path(CouplingMap()), std::invalid_argument);
}

TEST(CouplingMap, RejectsBadEdges) {
  EXPECT_THROW(CouplingMap("x", 2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(CouplingMap("x", 2, {{0, 2}}), std::invalid_argument);
  CouplingMap m("x", 3, {{1, 0}, {0, 1}});
  EXPECT_EQ(m.edges().size(), 1u);
  EXPECT_TRUE(m.coupled(1, 0));
  EXPECT_FALSE(m.coupled(1, 2));
  EXPECT_FALSE(m.is_connected());
}

TEST(CouplingMap, JsonRoundTrip) {
  CouplingMap m = heavy_hex(2, 2);
  EXPECT_EQ(load_coupling_map(to_json(m).dump()), m);
}

TEST(CouplingMap, LoadErrors) {
  EXPECT_THROW(load_coupling_map("{"), std::invalid_argument);
  EXPECT_THROW(load_coupling_map(R"({"name":"a","edges":[]})"), std::invalid_argument);
  EXPECT_THROW(load_coupling_map(R"({"name":"a","num_qubits":2,"edges":[[0]]})"),
               std::invalid_argument);
  EXPECT_THROW(load_coupling_map(R"({"name":"a","num_qubits":2,"edges":[[0,-1]]})"),
               std::invalid_argument);
  EXPECT_THROW(load_coupling_map(R"({"name":"a","num_qubits":2,"edges":[[0,5]]})"),
               std::invalid_argument);
  EXPECT_THROW(resolve_device("builtin:nope"), std::invalid_argument);
  EXPECT_THROW(resolve_device("heavy-hex:3"), std::invalid_argument);
  EXPECT_THROW(resolve_device("file:/does/not/exist.json"), std::invalid_argument);
  EXPECT_THROW(resolve_device("mystery"), std::invalid_argument);
}

TEST(DistanceTable, LineAndHeavyHex) {
  CouplingMap line = line_map(5);
  DistanceTable d(line);
  EXPECT_EQ(d.distance(0, 4), 4);
  EXPECT_EQ(d.distance(3, 3), 0);
  EXPECT_EQ(d.next_hop(0, 4), 1u);
  EXPECT_EQ(d.next_hop(4, 0), 3u);
  EXPECT_EQ(d.bfs_order(2), (std::vector<Qubit>{2, 1, 3, 0, 4}));

  CouplingMap hh = ibm_torino();
  DistanceTable t(hh);
  for (Qubit a = 0; a < hh.num_qubits(); a += 7) {
    for (Qubit b = 0; b < hh.num_qubits(); b += 5) {
      EXPECT_EQ(t.distance(a, b), t.distance(b, a));
      if (a != b) {
        Qubit h = t.next_hop(a, b);
        EXPECT_TRUE(hh.coupled(a, h));
        EXPECT_EQ(t.distance(h, b), t.distance(a, b) - 1);
      }
    }
  }
  EXPECT_EQ(t.bfs_order(0).size(), 133u);
}

TEST(DistanceTable, Unreachable) {
  CouplingMap m("split", 4, {{0, 1}, {2, 3}});
  DistanceTable d(m);
  EXPECT_EQ(d.distance(0, 3), DistanceTable::kUnreachable);
  EXPECT_THROW(d.next_hop(0, 3), std::invalid_argument);
  EXPECT_EQ(d.bfs_order(0), (std::vector<Qubit>{0, 1}));
}

TEST(CouplingMap, LoadsMinimalDocuments) {
  CouplingMap line = load_coupling_map(R"({"num_qubits":3,"edges":[[0,1],[1,2]]})");
  EXPECT_EQ(line.num_qubits(), 3u);
  EXPECT_EQ(line.edges(), line_map(3).edges());
  EXPECT_EQ(longest_nn_path(line).qubits, (std::vector<Qubit>{0, 1, 2}));
  EXPECT_THROW(load_coupling_map(R"({"num_qubits":2,"edges":[[0,0]]})"),
               std::invalid_argument);
}

TEST(HeavyHex, DegreeBoundAndDeterminism) {
  for (int rows = 1; rows <= 5; ++rows) {
    for (int cols = 1; cols <= 4; ++cols) {
      CouplingMap m = heavy_hex(rows, cols);
      EXPECT_LE(m.max_degree(), 3u);
      EXPECT_TRUE(m.is_connected());
      HardwarePath p = longest_nn_path(m);
      EXPECT_TRUE(is_valid_path(p, m));
      EXPECT_EQ(p.qubits, longest_nn_path(m).qubits);
      EXPECT_EQ(m.degree(p.qubits[0]), 1u);
    }
  }
}
