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

#include "hwqubo/graph.hpp"

#include <algorithm>
#include <sstream>

namespace hwqubo {

double InteractionGraph::weight(VarId a, VarId b) const {
  auto it = edges.find(ordered_pair(a, b));
  return it == edges.end() ? 0.0 : it->second;
}

std::vector<VarId> InteractionGraph::neighbors(VarId v) const {
  std::vector<VarId> out;
  for (const auto &[e, w] : edges) {
    if (e.first == v) {
      out.push_back(e.second);
    } else if (e.second == v) {
      out.push_back(e.first);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t InteractionGraph::degree(VarId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto &e) {
        return e.first.first == v || e.first.second == v;
      }));
}

std::size_t InteractionGraph::max_degree() const {
  std::map<VarId, std::size_t> deg;
  for (const auto &[e, w] : edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  std::size_t best = 0;
  for (const auto &[v, d] : deg) {
    best = std::max(best, d);
  }
  return best;
}

InteractionGraph build_interaction_graph(const Polynomial &qubo) {
  InteractionGraph g;
  for (const auto &[m, c] : qubo.terms()) {
    if (m.degree() > 2) {
      throw std::invalid_argument(
          "interaction graphs need a polynomial of degree <= 2");
    }
    g.vertices.insert(m.vars().begin(), m.vars().end());
    if (m.degree() == 2) {
      g.edges[{m.vars()[0], m.vars()[1]}] = c;
    }
  }
  return g;
}

nlohmann::json to_json(const InteractionGraph &graph) {
  nlohmann::json vertices = nlohmann::json::array();
  for (VarId v : graph.vertices) {
    vertices.push_back(v.name());
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto &[e, w] : graph.edges) {
    edges.push_back({e.first.name(), e.second.name(), w});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string to_dot(const InteractionGraph &graph) {
  std::ostringstream out;
  out << "graph interaction {\n";
  for (VarId v : graph.vertices) {
    const char *color = v.kind() == VarKind::Problem     ? "lightblue"
                        : v.kind() == VarKind::Auxiliary ? "lightgreen"
                                                         : "khaki";
    out << "  " << v.name() << " [style=filled, fillcolor=" << color
        << "];\n";
  }
  for (const auto &[e, w] : graph.edges) {
    out << "  " << e.first.name() << " -- " << e.second.name()
        << " [label=\"" << w << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<TriangleChain> extract_chains(const InteractionGraph &graph,
                                          const std::vector<Substitution> &subs) {
  std::map<int, std::vector<const Substitution *>> by_chain;
  for (const auto &s : subs) {
    by_chain[s.chain_id].push_back(&s);
  }

  auto require_vertex = [&](VarId v) {
    if (!graph.vertices.contains(v)) {
      throw std::invalid_argument("substitution variable " + v.name() +
                                  " is not in the interaction graph");
    }
  };

  std::vector<TriangleChain> chains;
  for (const auto &[id, list] : by_chain) {
    TriangleChain chain;
    chain.chain_id = id;
    const Substitution &first = *list.front();
    for (VarId v : {first.aux, first.factor_a, first.factor_b}) {
      require_vertex(v);
    }
    auto [lo, hi] = ordered_pair(first.factor_a, first.factor_b);
    chain.path = {lo, hi, first.aux};
    chain.triangles.push_back({first.aux, first.factor_a, first.factor_b});

    for (std::size_t k = 1; k < list.size(); ++k) {
      const Substitution &s = *list[k];
      VarId prev = list[k - 1]->aux;
      VarId fresh;
      if (s.factor_a == prev) {
        fresh = s.factor_b;
      } else if (s.factor_b == prev) {
        fresh = s.factor_a;
      } else {
        throw std::invalid_argument("substitution for " + s.aux.name() +
                                    " does not extend chain " +
                                    std::to_string(id));
      }
      require_vertex(s.aux);
      require_vertex(fresh);
      chain.path.push_back(fresh);
      chain.path.push_back(s.aux);
      chain.triangles.push_back({s.aux, s.factor_a, s.factor_b});
    }

    VarId last = list.back()->aux;
    auto on_path = chain.vertex_set();
    if (on_path.size() != chain.path.size()) {
      throw std::invalid_argument("chain " + std::to_string(id) +
                                  " revisits a variable");
    }
    for (VarId n : graph.neighbors(last)) {
      if (!on_path.contains(n) && graph.degree(n) == 1) {
        chain.path.push_back(n);
        break;
      }
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<ChainPairRelation> classify_chains(
    const std::vector<TriangleChain> &chains) {
  std::vector<ChainPairRelation> out;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    auto first_set = chains[i].vertex_set();
    std::set<VarId> first_aux;
    for (const auto &t : chains[i].triangles) {
      first_aux.insert(t.aux);
    }
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      ChainPairRelation rel;
      rel.first = chains[i].chain_id;
      rel.second = chains[j].chain_id;
      for (VarId v : chains[j].vertex_set()) {
        if (first_set.contains(v)) {
          rel.shared.push_back(v);
        }
      }
      if (rel.shared.empty()) {
        rel.relation = ChainRelation::Independent;
      } else if (rel.shared.size() == 1 &&
                 first_aux.contains(rel.shared.front())) {
        rel.relation = ChainRelation::Bifurcation;
      } else {
        rel.relation = ChainRelation::Overlap;
      }
      out.push_back(std::move(rel));
    }
  }
  return out;
}

bool chains_independent(const std::vector<TriangleChain> &chains) {
  auto rels = classify_chains(chains);
  return std::all_of(rels.begin(), rels.end(), [](const auto &r) {
    return r.relation == ChainRelation::Independent;
  });
}

EdgeClassification classify_edges(const InteractionGraph &graph,
                                  const std::vector<TriangleChain> &chains) {
  EdgeClassification out;
  for (const auto &chain : chains) {
    const auto &p = chain.path;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (graph.has_edge(p[i], p[i + 1])) {
        out.chain_edges.insert(ordered_pair(p[i], p[i + 1]));
      }
      if (i % 2 == 0 && i + 2 < p.size() && graph.has_edge(p[i], p[i + 2])) {
        out.chain_edges.insert(ordered_pair(p[i], p[i + 2]));
      }
    }
  }
  for (const auto &[e, w] : graph.edges) {
    if (!out.chain_edges.contains(e)) {
      out.extraneous_edges.insert(e);
    }
  }
  return out;
}

const char *to_string(ChainRelation r) {
  switch (r) {
    case ChainRelation::Independent:
      return "independent";
    case ChainRelation::Bifurcation:
      return "bifurcation";
    case ChainRelation::Overlap:
      return "overlap";
  }
  return "?";
}

}  // namespace hwqubo
