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

#include "hwqubo/device.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hwqubo {

CouplingMap::CouplingMap(std::string name, std::size_t num_qubits,
                         const std::vector<std::pair<Qubit, Qubit>> &edges)
    : name_(std::move(name)), num_qubits_(num_qubits), adjacency_(num_qubits) {
  for (auto [a, b] : edges) {
    if (a == b) {
      throw std::invalid_argument("coupling map has a self-loop on qubit " +
                                  std::to_string(a));
    }
    if (a >= num_qubits || b >= num_qubits) {
      throw std::invalid_argument("coupling map edge (" + std::to_string(a) +
                                  "," + std::to_string(b) +
                                  ") is out of range");
    }
    if (edges_.insert({std::min(a, b), std::max(a, b)}).second) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
  }
  for (auto &adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
  }
}

std::size_t CouplingMap::max_degree() const {
  std::size_t best = 0;
  for (const auto &adj : adjacency_) {
    best = std::max(best, adj.size());
  }
  return best;
}

bool CouplingMap::coupled(Qubit a, Qubit b) const {
  return edges_.contains({std::min(a, b), std::max(a, b)});
}

bool CouplingMap::is_connected() const {
  if (num_qubits_ == 0) {
    return true;
  }
  std::vector<bool> seen(num_qubits_, false);
  std::deque<Qubit> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    Qubit q = queue.front();
    queue.pop_front();
    for (Qubit n : adjacency_[q]) {
      if (!seen[n]) {
        seen[n] = true;
        ++count;
        queue.push_back(n);
      }
    }
  }
  return count == num_qubits_;
}

CouplingMap heavy_hex(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("heavy-hex dimensions must be at least 1x1");
  }
  const Qubit row_len = static_cast<Qubit>(4 * cols + 3);
  const Qubit bridges = static_cast<Qubit>(cols + 1);
  const Qubit stride = row_len + bridges;
  auto row_qubit = [&](int r, Qubit col) { return r * stride + col; };

  std::vector<std::pair<Qubit, Qubit>> edges;
  for (int r = 0; r < rows; ++r) {
    for (Qubit c = 0; c + 1 < row_len; ++c) {
      edges.emplace_back(row_qubit(r, c), row_qubit(r, c + 1));
    }
    const Qubit offset = r % 2 == 0 ? 0 : 2;
    for (Qubit k = 0; k < bridges; ++k) {
      Qubit bridge = r * stride + row_len + k;
      Qubit col = offset + 4 * k;
      edges.emplace_back(row_qubit(r, col), bridge);
      if (r + 1 < rows) {
        edges.emplace_back(bridge, row_qubit(r + 1, col));
      }
    }
  }
  std::string name =
      "heavy-hex:" + std::to_string(rows) + "," + std::to_string(cols);
  return CouplingMap(std::move(name), static_cast<std::size_t>(rows) * stride,
                     edges);
}

CouplingMap ibm_torino() {
  CouplingMap hh = heavy_hex(7, 3);
  std::vector<std::pair<Qubit, Qubit>> edges(hh.edges().begin(),
                                             hh.edges().end());
  return CouplingMap("ibm_torino", hh.num_qubits(), edges);
}

CouplingMap line_map(std::size_t n) {
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (Qubit q = 0; q + 1 < n; ++q) {
    edges.emplace_back(q, q + 1);
  }
  return CouplingMap("line:" + std::to_string(n), n, edges);
}

CouplingMap fully_connected_map(std::size_t n) {
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (Qubit a = 0; a < n; ++a) {
    for (Qubit b = a + 1; b < n; ++b) {
      edges.emplace_back(a, b);
    }
  }
  return CouplingMap("all-to-all:" + std::to_string(n), n, edges);
}

CouplingMap load_coupling_map(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(std::string("malformed coupling map JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("num_qubits") || !j.contains("edges") ||
      !j["edges"].is_array()) {
    throw std::invalid_argument(
        "coupling map JSON needs \"num_qubits\" and \"edges\"");
  }
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (const auto &e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("coupling map edges must be pairs");
    }
    auto a = e[0].get<long long>();
    auto b = e[1].get<long long>();
    if (a < 0 || b < 0) {
      throw std::invalid_argument("coupling map edge has a negative endpoint");
    }
    edges.emplace_back(static_cast<Qubit>(a), static_cast<Qubit>(b));
  }
  return CouplingMap(j.value("name", std::string("custom")),
                     j["num_qubits"].get<std::size_t>(), edges);
}

nlohmann::json to_json(const CouplingMap &map) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : map.edges()) {
    edges.push_back({a, b});
  }
  return {{"name", map.name()},
          {"num_qubits", map.num_qubits()},
          {"edges", std::move(edges)}};
}

CouplingMap resolve_device(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view kind = spec.substr(0, colon);
  std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "builtin") {
    if (arg == "ibm_torino") {
      return ibm_torino();
    }
    throw std::invalid_argument("unknown builtin device '" + std::string(arg) +
                                "'");
  }
  if (kind == "heavy-hex") {
    int rows = 0;
    int cols = 0;
    char comma = 0;
    std::istringstream in{std::string(arg)};
    if (!(in >> rows >> comma >> cols) || comma != ',') {
      throw std::invalid_argument("expected heavy-hex:R,C");
    }
    return heavy_hex(rows, cols);
  }
  if (kind == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) {
      throw std::invalid_argument("cannot open device file '" +
                                  std::string(arg) + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_coupling_map(buf.str());
  }
  throw std::invalid_argument("unknown device spec '" + std::string(spec) +
                              "'");
}

HardwarePath longest_nn_path(const CouplingMap &map) {
  if (map.num_qubits() == 0) {
    throw std::invalid_argument("cannot extract a path from an empty map");
  }
  Qubit start = 0;
  std::size_t best_degree = map.degree(0);
  for (Qubit q = 0; q < map.num_qubits(); ++q) {
    if (map.degree(q) == 1) {
      start = q;
      break;
    }
    if (map.degree(q) < best_degree) {
      start = q;
      best_degree = map.degree(q);
    }
  }

  HardwarePath path;
  std::vector<bool> visited(map.num_qubits(), false);
  Qubit cur = start;
  while (true) {
    path.qubits.push_back(cur);
    visited[cur] = true;
    bool moved = false;
    Qubit best = 0;
    Qubit best_gap = 0;
    for (Qubit n : map.neighbors(cur)) {
      if (visited[n]) {
        continue;
      }
      Qubit gap = n > cur ? n - cur : cur - n;
      // Neighbours are sorted, so strict < keeps the smaller index on ties.
      if (!moved || gap < best_gap) {
        best = n;
        best_gap = gap;
        moved = true;
      }
    }
    if (!moved) {
      break;
    }
    cur = best;
  }
  return path;
}

bool is_valid_path(const HardwarePath &path, const CouplingMap &map) {
  std::set<Qubit> seen;
  for (std::size_t i = 0; i < path.qubits.size(); ++i) {
    Qubit q = path.qubits[i];
    if (q >= map.num_qubits() || !seen.insert(q).second) {
      return false;
    }
    if (i > 0 && !map.coupled(path.qubits[i - 1], q)) {
      return false;
    }
  }
  return true;
}

DistanceTable::DistanceTable(const CouplingMap &map)
    : map_(&map),
      dist_(map.num_qubits(), std::vector<int>(map.num_qubits(), kUnreachable)) {
  for (Qubit s = 0; s < map.num_qubits(); ++s) {
    auto &row = dist_[s];
    row[s] = 0;
    std::deque<Qubit> queue{s};
    while (!queue.empty()) {
      Qubit q = queue.front();
      queue.pop_front();
      for (Qubit n : map.neighbors(q)) {
        if (row[n] == kUnreachable) {
          row[n] = row[q] + 1;
          queue.push_back(n);
        }
      }
    }
  }
}

Qubit DistanceTable::next_hop(Qubit from, Qubit to) const {
  int d = dist_[from][to];
  if (d <= 0) {
    throw std::invalid_argument("no next hop between these qubits");
  }
  for (Qubit n : map_->neighbors(from)) {
    if (dist_[n][to] == d - 1) {
      return n;
    }
  }
  throw std::logic_error("distance table is inconsistent");
}

std::vector<Qubit> DistanceTable::bfs_order(Qubit origin) const {
  std::vector<Qubit> order;
  for (Qubit q = 0; q < dist_.size(); ++q) {
    if (dist_[origin][q] != kUnreachable) {
      order.push_back(q);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](Qubit a, Qubit b) {
    return dist_[origin][a] < dist_[origin][b];
  });
  return order;
}

}  // namespace hwqubo
