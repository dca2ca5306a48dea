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

#include "hwqubo/quadratizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace hwqubo {

namespace {

enum class Prefer { Earliest, Latest };

// Picks the best-scoring key; ties resolve by canonical position or by rng.
template <typename Key>
Key choose(const std::map<Key, double> &scores, Prefer prefer,
           const QuadratizeOptions &opts, std::mt19937_64 &rng) {
  double best = -1.0;
  for (const auto &[k, s] : scores) {
    best = std::max(best, s);
  }
  std::vector<Key> tied;
  for (const auto &[k, s] : scores) {
    if (s == best) {
      tied.push_back(k);
    }
  }
  if (opts.tie_break == TieBreak::Random && tied.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, tied.size() - 1);
    return tied[pick(rng)];
  }
  return prefer == Prefer::Earliest ? tied.front() : tied.back();
}

double term_weight(double coef, Weighting w) {
  return w == Weighting::Count ? 1.0 : std::abs(coef);
}

std::map<VarPair, double> pair_scores(const Polynomial &poly, Weighting w) {
  std::map<VarPair, double> scores;
  for (const auto &[m, c] : poly.terms()) {
    if (m.degree() < 3) {
      continue;
    }
    const auto &vs = m.vars();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        scores[{vs[i], vs[j]}] += term_weight(c, w);
      }
    }
  }
  return scores;
}

std::uint32_t next_aux_index(const Polynomial &poly) {
  std::uint32_t next = 1;
  for (VarId v : poly.variables()) {
    if (v.kind() == VarKind::Auxiliary) {
      next = std::max(next, v.index() + 1);
    }
  }
  return next;
}

class Reducer {
 public:
  Reducer(const Polynomial &poly, const QuadratizeOptions &opts)
      : opts_(opts), rng_(opts.seed), current_(poly),
        next_aux_(next_aux_index(poly)) {
    result_.original = poly;
    result_.penalty_factor =
        opts.penalty_factor.value_or(select_penalty_factor(poly));
  }

  VarId substitute(VarId a, VarId b, int chain_id) {
    VarId y = VarId::auxiliary(next_aux_++);
    current_ = substitute_pair(current_, a, b, y);
    current_ += penalty_term(a, b, y, result_.penalty_factor);
    result_.substitutions.push_back(
        {y, a, b, result_.penalty_factor, chain_id});
    return y;
  }

  const Polynomial &current() const { return current_; }
  const QuadratizeOptions &opts() const { return opts_; }
  std::mt19937_64 &rng() { return rng_; }

  QuadratizedProblem finish() {
    result_.qubo = std::move(current_);
    return std::move(result_);
  }

 private:
  QuadratizeOptions opts_;
  std::mt19937_64 rng_;
  Polynomial current_;
  std::uint32_t next_aux_;
  QuadratizedProblem result_;
};

}  // namespace

double select_penalty_factor(const Polynomial &poly) {
  double total = 1.0;
  for (const auto &[m, c] : poly.terms()) {
    if (m.degree() > 0) {
      total += std::abs(c);
    }
  }
  return total;
}

QuadratizedProblem quadratize_baseline(const Polynomial &poly,
                                       const QuadratizeOptions &opts) {
  Reducer r(poly, opts);
  int step = 0;
  while (r.current().degree() > 2) {
    auto scores = pair_scores(r.current(), opts.weighting);
    auto [a, b] = choose(scores, Prefer::Earliest, opts, r.rng());
    // Each baseline substitution stands alone.
    r.substitute(a, b, step++);
  }
  return r.finish();
}

QuadratizedProblem quadratize_chain(const Polynomial &poly,
                                    const QuadratizeOptions &opts) {
  Reducer r(poly, opts);
  int chain_id = -1;
  std::optional<VarId> tail;
  std::set<VarId> created;   // auxiliaries of the current chain
  std::set<VarId> consumed;  // factors taken by the current chain

  while (r.current().degree() > 2) {
    if (!tail) {
      ++chain_id;
      auto scores = pair_scores(r.current(), opts.weighting);
      auto [a, b] = choose(scores, Prefer::Latest, opts, r.rng());
      tail = r.substitute(a, b, chain_id);
      created = {*tail};
      consumed = {a, b};
      continue;
    }
    std::map<VarId, double> scores;
    for (const auto &[m, c] : r.current().terms()) {
      if (m.degree() < 3 || !m.contains(*tail)) {
        continue;
      }
      for (VarId v : m.vars()) {
        if (v != *tail && !created.contains(v) && !consumed.contains(v)) {
          scores[v] += term_weight(c, opts.weighting);
        }
      }
    }
    if (scores.empty()) {
      tail.reset();
      continue;
    }
    VarId v = choose(scores, Prefer::Latest, opts, r.rng());
    VarId y = r.substitute(*tail, v, chain_id);
    consumed.insert(v);
    created.insert(y);
    tail = y;
  }
  return r.finish();
}

QuadratizedProblem quadratize(const Polynomial &poly, Strategy strategy,
                              const QuadratizeOptions &opts) {
  return strategy == Strategy::Chain ? quadratize_chain(poly, opts)
                                     : quadratize_baseline(poly, opts);
}

Polynomial equality_penalty(VarId x, VarId x_dup, double penalty_factor) {
  if (!(penalty_factor > 0.0)) {
    throw std::invalid_argument("penalty factor must be positive");
  }
  if (x == x_dup) {
    throw std::invalid_argument("equality penalty needs distinct variables");
  }
  Polynomial p;
  p.add_term({x}, penalty_factor);
  p.add_term({x_dup}, penalty_factor);
  p.add_term({x, x_dup}, -2.0 * penalty_factor);
  return p;
}

namespace {

nlohmann::json pair_list(const std::vector<VarPair> &pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &[a, b] : pairs) {
    out.push_back({a.name(), b.name()});
  }
  return out;
}

std::vector<VarPair> pair_list_from(const nlohmann::json &j) {
  std::vector<VarPair> out;
  for (const auto &p : j) {
    out.emplace_back(VarId::parse(p.at(0).get<std::string>()),
                     VarId::parse(p.at(1).get<std::string>()));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const QuadratizedProblem &problem) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto &s : problem.substitutions) {
    subs.push_back({{"aux", s.aux.name()},
                    {"a", s.factor_a.name()},
                    {"b", s.factor_b.name()},
                    {"penalty_factor", s.penalty_factor},
                    {"chain_id", s.chain_id}});
  }
  return {{"original", to_json(problem.original)},
          {"qubo", to_json(problem.qubo)},
          {"penalty_factor", problem.penalty_factor},
          {"substitutions", std::move(subs)},
          {"duplicates", pair_list(problem.duplicates)},
          {"extraneous_equalities", pair_list(problem.extraneous_equalities)}};
}

QuadratizedProblem quadratized_from_json(const nlohmann::json &j) {
  QuadratizedProblem p;
  p.original = polynomial_from_json(j.at("original"));
  p.qubo = polynomial_from_json(j.at("qubo"));
  p.penalty_factor = j.at("penalty_factor").get<double>();
  for (const auto &s : j.at("substitutions")) {
    p.substitutions.push_back(
        {VarId::parse(s.at("aux").get<std::string>()),
         VarId::parse(s.at("a").get<std::string>()),
         VarId::parse(s.at("b").get<std::string>()),
         s.at("penalty_factor").get<double>(), s.at("chain_id").get<int>()});
  }
  p.duplicates = pair_list_from(j.value("duplicates", nlohmann::json::array()));
  p.extraneous_equalities =
      pair_list_from(j.value("extraneous_equalities", nlohmann::json::array()));
  return p;
}

}  // namespace hwqubo
