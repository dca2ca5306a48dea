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
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hwqubo {

using Qubit = std::uint32_t;

/// Undirected coupling graph of a device.
class CouplingMap {
 public:
  CouplingMap() = default;
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  CouplingMap(std::string name, std::size_t num_qubits,
              const std::vector<std::pair<Qubit, Qubit>> &edges);

  const std::string &name() const { return name_; }
  std::size_t num_qubits() const { return num_qubits_; }
  /// Ordered pairs (first < second).
  const std::set<std::pair<Qubit, Qubit>> &edges() const { return edges_; }
  const std::vector<Qubit> &neighbors(Qubit q) const { return adjacency_.at(q); }
  std::size_t degree(Qubit q) const { return adjacency_.at(q).size(); }
  std::size_t max_degree() const;
  bool coupled(Qubit a, Qubit b) const;
  bool is_connected() const;

  bool operator==(const CouplingMap &other) const {
    return name_ == other.name_ && num_qubits_ == other.num_qubits_ &&
           edges_ == other.edges_;
  }

 private:
  std::string name_;
  std::size_t num_qubits_ = 0;
  std::set<std::pair<Qubit, Qubit>> edges_;
  std::vector<std::vector<Qubit>> adjacency_;
};

/// Heavy-hex lattice with `rows` long rows of 4*cols+3 qubits, each followed
/// by a group of cols+1 bridge qubits, indexed row-major (row, then its
/// bridges). Bridges after even rows sit at columns 0,4,8,...; after odd rows
/// at columns 2,6,10,... . A bridge links its row to the next row; the last
/// group only hangs off the final row.
CouplingMap heavy_hex(int rows, int cols);

/// 133-qubit preset, heavy_hex(7, 3).
CouplingMap ibm_torino();

CouplingMap line_map(std::size_t n);
CouplingMap fully_connected_map(std::size_t n);

/// Parses `{"name":str,"num_qubits":int,"edges":[[int,int],...]}`.
CouplingMap load_coupling_map(std::string_view json_text);
nlohmann::json to_json(const CouplingMap &map);

/// `builtin:ibm_torino`, `heavy-hex:R,C` or `file:<path>`.
CouplingMap resolve_device(std::string_view spec);

struct HardwarePath {
  std::vector<Qubit> qubits;
  std::size_t size() const { return qubits.size(); }
};

/// Greedy simple path: start at the lowest-index degree-1 qubit (or the
/// lowest-index qubit of minimum degree), then keep stepping to the
/// unvisited neighbour whose index is closest to the current one, smaller
/// index on ties. No backtracking.
HardwarePath longest_nn_path(const CouplingMap &map);

bool is_valid_path(const HardwarePath &path, const CouplingMap &map);

/// All-pairs hop distances by BFS.
class DistanceTable {
 public:
  explicit DistanceTable(const CouplingMap &map);

  static constexpr int kUnreachable = -1;

  int distance(Qubit a, Qubit b) const { return dist_[a][b]; }
  /// Neighbour of `from` one hop closer to `to` (lowest index on ties).
  Qubit next_hop(Qubit from, Qubit to) const;
  /// Qubits sorted by BFS order from `origin`, ties by index.
  std::vector<Qubit> bfs_order(Qubit origin) const;

 private:
  const CouplingMap *map_;
  std::vector<std::vector<int>> dist_;
};

}  // namespace hwqubo
