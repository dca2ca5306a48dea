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

#include "hwqubo/bench.hpp"
#include "hwqubo/compiler.hpp"
#include "hwqubo/quadratizer.hpp"
#include "oracle.hpp"

using namespace hwqubo;

namespace {

VarId x(std::uint32_t i) { return VarId::problem(i); }
VarId y(std::uint32_t i) { return VarId::auxiliary(i); }

Polynomial penalties(std::initializer_list<std::array<VarId, 3>> triples,
                     double cp) {
  Polynomial p;
  for (const auto &t : triples) {
    p += penalty_term(t[0], t[1], t[2], cp);
  }
  return p;
}

/// Checks min_y Q(x, y) == C(x) for every x by direct evaluation.
void expect_faithful(const Polynomial &c, const QuadratizedProblem &q) {
  const auto orig = c.variables();
  std::vector<VarId> xs(orig.begin(), orig.end());
  std::vector<VarId> ys;
  for (VarId v : q.qubo.variables()) {
    if (!orig.contains(v)) {
      ys.push_back(v);
    }
  }
  ASSERT_LE(xs.size() + ys.size(), 16u);
  for (std::uint64_t mx = 0; mx < (1ull << xs.size()); ++mx) {
    Assignment a;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      a[xs[i]] = mx >> i & 1;
    }
    const double cx = evaluate(c, a);
    double best = INFINITY;
    for (std::uint64_t my = 0; my < (1ull << ys.size()); ++my) {
      for (std::size_t i = 0; i < ys.size(); ++i) {
        a[ys[i]] = my >> i & 1;
      }
      best = std::min(best, evaluate(q.qubo, a));
    }
    ASSERT_NEAR(best, cx, 1e-9) << to_string(c);
  }
}

void expect_chain_property(const QuadratizedProblem &q) {
  for (std::size_t k = 1; k < q.substitutions.size(); ++k) {
    const auto &prev = q.substitutions[k - 1];
    const auto &cur = q.substitutions[k];
    if (prev.chain_id == cur.chain_id) {
      EXPECT_TRUE(cur.factor_a == prev.aux || cur.factor_b == prev.aux);
    } else {
      EXPECT_GT(cur.chain_id, prev.chain_id);
    }
  }
}

void expect_declared(const QuadratizedProblem &q) {
  std::set<VarId> declared;
  for (const auto &s : q.substitutions) {
    declared.insert(s.aux);
  }
  for (const auto &[orig, dup] : q.duplicates) {
    declared.insert(dup);
  }
  for (VarId v : q.qubo.variables()) {
    if (v.kind() != VarKind::Problem) {
      EXPECT_TRUE(declared.contains(v)) << v.name();
    }
  }
}

}  // namespace

TEST(PenaltyFactor, Examples) {
  EXPECT_EQ(select_penalty_factor(parse_polynomial("x1 x2 x3 x4")), 2.0);
  EXPECT_EQ(select_penalty_factor(Polynomial()), 1.0);
  EXPECT_EQ(select_penalty_factor(parse_polynomial("3 x1 x2 x3 - 2 x2 x3 x4")), 6.0);
  EXPECT_EQ(select_penalty_factor(parse_polynomial("7 - x1 x2 x3")), 2.0);
}

TEST(Baseline, ExampleOne) {
  Polynomial c = parse_polynomial("x1 x2 x3 x4");
  QuadratizedProblem q = quadratize_baseline(c);
  ASSERT_EQ(q.aux_count(), 2u);
  EXPECT_EQ(q.substitutions[0].aux, y(1));
  EXPECT_EQ(q.substitutions[0].factor_a, x(1));
  EXPECT_EQ(q.substitutions[0].factor_b, x(2));
  EXPECT_EQ(q.substitutions[1].factor_a, x(3));
  EXPECT_EQ(q.substitutions[1].factor_b, x(4));
  EXPECT_EQ(q.penalty_factor, 2.0);
  EXPECT_EQ(q.qubo, parse_polynomial("y1 y2") +
                        penalties({{x(1), x(2), y(1)}, {x(3), x(4), y(2)}}, 2.0));
  EXPECT_EQ(q.original, c);
}

TEST(Baseline, QuadraticInputUnchanged) {
  Polynomial c = parse_polynomial("2 x1 x2 - x2 x3 + x1 - 4");
  for (Strategy s : {Strategy::Baseline, Strategy::Chain}) {
    QuadratizedProblem q = quadratize(c, s);
    EXPECT_EQ(q.qubo, c);
    EXPECT_TRUE(q.substitutions.empty());
  }
}

TEST(Baseline, NestedPairsForEight) {
  QuadratizedProblem q = quadratize_baseline(pure_product(8));
  ASSERT_EQ(q.aux_count(), 6u);
  const std::vector<std::pair<VarId, VarId>> expected = {
      {x(1), x(2)}, {x(3), x(4)}, {x(5), x(6)},
      {x(7), x(8)}, {y(1), y(2)}, {y(3), y(4)}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(q.substitutions[k].aux, y(static_cast<std::uint32_t>(k + 1)));
    EXPECT_EQ(q.substitutions[k].factor_a, expected[k].first);
    EXPECT_EQ(q.substitutions[k].factor_b, expected[k].second);
  }
  EXPECT_EQ(q.qubo.coefficient(Monomial{y(5), y(6)}), 1.0);
}

TEST(Chain, ProductOfFour) {
  QuadratizedProblem q = quadratize_chain(parse_polynomial("x1 x2 x3 x4"));
  ASSERT_EQ(q.aux_count(), 2u);
  EXPECT_EQ(q.substitutions[0].factor_a, x(3));
  EXPECT_EQ(q.substitutions[0].factor_b, x(4));
  EXPECT_EQ(q.substitutions[1].factor_a, y(1));
  EXPECT_EQ(q.substitutions[1].factor_b, x(2));
  EXPECT_EQ(q.qubo, parse_polynomial("x1 y2") +
                        penalties({{x(3), x(4), y(1)}, {y(1), x(2), y(2)}}, 2.0));
}

TEST(Chain, WorkedExample) {
  QuadratizedProblem q = quadratize_chain(
      parse_polynomial("x1 x2 x3 x4 x5 + x1 x2 x3 x4 + x2 x3 x4"));
  ASSERT_EQ(q.aux_count(), 3u);
  EXPECT_EQ(q.penalty_factor, 4.0);
  const Polynomial expected =
      parse_polynomial("x1 y3 + x1 y2 + y2") +
      penalties({{x(3), x(4), y(1)}, {y(1), x(2), y(2)}, {y(2), x(5), y(3)}}, 4.0);
  EXPECT_EQ(q.qubo, expected);
  for (const auto &s : q.substitutions) {
    EXPECT_EQ(s.chain_id, 0);
    EXPECT_EQ(s.penalty_factor, 4.0);
  }
}

TEST(Chain, ProductsFormOneChain) {
  for (int n = 4; n <= 20; ++n) {
    QuadratizedProblem q = quadratize_chain(pure_product(n));
    ASSERT_EQ(q.aux_count(), static_cast<std::size_t>(n - 2)) << n;
    for (const auto &s : q.substitutions) {
      EXPECT_EQ(s.chain_id, 0);
    }
    expect_chain_property(q);
    EXPECT_LE(q.qubo.degree(), 2u);
  }
}

TEST(Chain, ConsumedVariablesAreNotReused) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial c = generate_instance(InstanceConfig::defaults(8, rng()));
    QuadratizedProblem q = quadratize_chain(c);
    std::map<int, std::set<VarId>> used;
    for (const auto &s : q.substitutions) {
      auto &seen = used[s.chain_id];
      for (VarId f : {s.factor_a, s.factor_b}) {
        if (f.kind() == VarKind::Problem) {
          EXPECT_TRUE(seen.insert(f).second) << to_string(c);
        }
      }
    }
  }
}

TEST(Chain, RestartsStartNewChains) {
  QuadratizedProblem q = quadratize_chain(
      parse_polynomial("x1 x2 x3 x4 + x1 x2 x3 x5 + x2 x3 x4 x5"));
  ASSERT_EQ(q.aux_count(), 3u);
  EXPECT_EQ(q.substitutions[0].chain_id, 0);
  EXPECT_EQ(q.substitutions[1].chain_id, 0);
  EXPECT_EQ(q.substitutions[2].chain_id, 1);
  expect_chain_property(q);
}

TEST(Quadratize, RandomInstancesProperties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    InstanceConfig cfg = InstanceConfig::defaults(3 + trial % 4, rng());
    cfg.num_terms = 2 + trial % 4;
    Polynomial c = generate_instance(cfg);
    for (Strategy s : {Strategy::Baseline, Strategy::Chain}) {
      QuadratizedProblem q = quadratize(c, s);
      EXPECT_LE(q.qubo.degree(), 2u);
      expect_declared(q);
      if (s == Strategy::Chain) {
        expect_chain_property(q);
      }
      if (q.total_variables() <= 14) {
        EXPECT_NEAR(oracle::minimum(q.qubo), oracle::minimum(c), 1e-9);
        expect_faithful(c, q);
      }
      EXPECT_EQ(quadratize(c, s), q) << "not deterministic";
    }
  }
}

TEST(Quadratize, RandomTieBreakIsSeeded) {
  Polynomial c = pure_product(7);
  QuadratizeOptions a;
  a.tie_break = TieBreak::Random;
  a.seed = 1;
  QuadratizeOptions b = a;
  std::set<std::vector<VarId>> firsts;
  for (int seed = 0; seed < 20; ++seed) {
    a.seed = b.seed = static_cast<std::uint64_t>(seed);
    for (Strategy s : {Strategy::Baseline, Strategy::Chain}) {
      QuadratizedProblem qa = quadratize(c, s, a);
      EXPECT_EQ(qa.qubo, quadratize(c, s, b).qubo);
      EXPECT_LE(qa.qubo.degree(), 2u);
      EXPECT_NEAR(oracle::minimum(qa.qubo), 0.0, 1e-9);
      if (s == Strategy::Chain) {
        EXPECT_EQ(qa.aux_count(), 5u);
        firsts.insert({qa.substitutions[0].factor_a, qa.substitutions[0].factor_b});
      }
    }
  }
  EXPECT_GT(firsts.size(), 1u);
}

TEST(Quadratize, CoefficientWeighting) {
  Polynomial c = parse_polynomial("5 x1 x2 x3 + x3 x4 x5 + x3 x4 x6");
  QuadratizedProblem by_count = quadratize_baseline(c);
  EXPECT_EQ(by_count.substitutions[0].factor_a, x(3));
  EXPECT_EQ(by_count.substitutions[0].factor_b, x(4));
  QuadratizeOptions o;
  o.weighting = Weighting::Coefficient;
  QuadratizedProblem by_weight = quadratize_baseline(c, o);
  EXPECT_EQ(by_weight.substitutions[0].factor_a, x(1));
  EXPECT_EQ(by_weight.substitutions[0].factor_b, x(2));
}

TEST(Quadratize, PenaltyOverride) {
  QuadratizeOptions o;
  o.penalty_factor = 0.01;
  QuadratizedProblem q = quadratize_chain(parse_polynomial("-10 x1 x2 x3"), o);
  EXPECT_EQ(q.penalty_factor, 0.01);
  EXPECT_EQ(q.substitutions.at(0).penalty_factor, 0.01);
  o.penalty_factor = -1.0;
  EXPECT_THROW(quadratize_chain(parse_polynomial("x1 x2 x3"), o),
               std::invalid_argument);
}

TEST(EqualityPenalty, BinaryExpansion) {
  const VarId a = x(2);
  const VarId d = VarId::duplicate(a, 1);
  Polynomial p = equality_penalty(a, d, 3.0);
  EXPECT_EQ(p, parse_polynomial("3 x2 + 3 x2p - 6 x2 x2p"));
  for (int m = 0; m < 4; ++m) {
    int va = m & 1;
    int vd = m >> 1;
    EXPECT_EQ(evaluate(p, {{a, va != 0}, {d, vd != 0}}),
              3.0 * (va - vd) * (va - vd));
  }
  EXPECT_THROW(equality_penalty(a, a, 1.0), std::invalid_argument);
  EXPECT_THROW(equality_penalty(a, d, 0.0), std::invalid_argument);
}

TEST(Split, BifurcationGetsOneDuplicate) {
  Polynomial c = parse_polynomial("x1 x2 x3 x4 + x1 x2 x3 x5 + x2 x3 x4 x5");
  QuadratizedProblem q = quadratize_chain(c);
  auto chains = extract_chains(build_interaction_graph(q.qubo), q.substitutions);
  auto rel = classify_chains(chains);
  ASSERT_EQ(rel.size(), 1u);
  EXPECT_EQ(rel[0].relation, ChainRelation::Bifurcation);

  QuadratizedProblem s = split_shared_variables(q, chains);
  const VarId dup = VarId::duplicate(y(1), 1);
  ASSERT_EQ(s.duplicates.size(), 1u);
  EXPECT_EQ(s.duplicates[0], (VarPair{y(1), dup}));
  EXPECT_EQ(s.extraneous_equalities, s.duplicates);
  EXPECT_EQ(s.substitutions[2].factor_b, dup);
  EXPECT_EQ(s.qubo.coefficient(Monomial{y(1), dup}), -2.0 * s.penalty_factor);
  auto split_chains = extract_chains(build_interaction_graph(s.qubo), s.substitutions);
  EXPECT_TRUE(chains_independent(split_chains));
  expect_faithful(c, s);
}

TEST(Split, OverlapGetsDuplicatePerSharedVertex) {
  Polynomial c = parse_polynomial("x2 x3 x5 + x1 x2 x3 x4 + x1 x3 x4 x5");
  QuadratizedProblem q = quadratize_chain(c);
  auto chains = extract_chains(build_interaction_graph(q.qubo), q.substitutions);
  ASSERT_EQ(classify_chains(chains).at(0).relation, ChainRelation::Overlap);
  QuadratizedProblem s = prepare_chains(q);
  EXPECT_EQ(s.duplicates.size(), 2u);
  EXPECT_TRUE(chains_independent(
      extract_chains(build_interaction_graph(s.qubo), s.substitutions)));
  expect_declared(s);
  EXPECT_NEAR(oracle::minimum(s.qubo), oracle::minimum(c), 1e-9);
  expect_faithful(c, s);
}

TEST(Split, IndependentChainsUnchanged) {
  QuadratizedProblem q = quadratize_chain(pure_product(6));
  auto chains = extract_chains(build_interaction_graph(q.qubo), q.substitutions);
  EXPECT_EQ(split_shared_variables(q, chains), q);
  EXPECT_EQ(prepare_chains(q), q);
}

TEST(Split, RandomInstancesBecomeIndependent) {
  std::mt19937_64 rng(123);
  int split_count = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial c = generate_instance(InstanceConfig::defaults(8, rng()));
    QuadratizedProblem s = prepare_chains(quadratize_chain(c));
    split_count += !s.duplicates.empty();
    EXPECT_TRUE(chains_independent(
        extract_chains(build_interaction_graph(s.qubo), s.substitutions)))
        << to_string(c);
    expect_declared(s);
    EXPECT_LE(s.qubo.degree(), 2u);
  }
  EXPECT_GT(split_count, 0);
}

TEST(QuadratizedJson, RoundTrip) {
  QuadratizedProblem q = prepare_chains(quadratize_chain(
      parse_polynomial("x1 x2 x3 x4 + x1 x2 x3 x5 + x2 x3 x4 x5")));
  nlohmann::json j = to_json(q);
  EXPECT_EQ(quadratized_from_json(j), q);
  EXPECT_EQ(quadratized_from_json(nlohmann::json::parse(j.dump())), q);
  EXPECT_TRUE(j.contains("substitutions"));
  EXPECT_EQ(j["duplicates"][0][1], "y1p");
}
