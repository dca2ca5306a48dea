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

#include "hwqubo/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hwqubo {

namespace {

using Mask = std::uint64_t;

/// Polynomial over an explicit variable order, terms as bit masks.
struct MaskedPoly {
  std::vector<VarId> vars;
  std::vector<std::pair<Mask, double>> terms;

  MaskedPoly(const Polynomial &poly, std::vector<VarId> order)
      : vars(std::move(order)) {
    std::map<VarId, int> bit;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      bit[vars[i]] = static_cast<int>(i);
    }
    for (const auto &[m, c] : poly.terms()) {
      Mask mask = 0;
      for (VarId v : m.vars()) {
        mask |= Mask{1} << bit.at(v);
      }
      terms.emplace_back(mask, c);
    }
  }

  double operator()(Mask x) const {
    double sum = 0.0;
    for (auto [m, c] : terms) {
      if ((x & m) == m) {
        sum += c;
      }
    }
    return sum;
  }
};

/// Incremental QUBO evaluation along a Gray code.
class GrayWalker {
 public:
  GrayWalker(const Polynomial &qubo, const std::vector<VarId> &order)
      : linear_(order.size(), 0.0), coupling_(order.size()) {
    std::map<VarId, std::size_t> bit;
    for (std::size_t i = 0; i < order.size(); ++i) {
      bit[order[i]] = i;
    }
    for (const auto &[m, c] : qubo.terms()) {
      if (m.degree() == 0) {
        constant_ = c;
        value_ = c;
      } else if (m.degree() == 1) {
        linear_[bit.at(m.vars()[0])] += c;
      } else if (m.degree() == 2) {
        std::size_t a = bit.at(m.vars()[0]);
        std::size_t b = bit.at(m.vars()[1]);
        coupling_[a].emplace_back(b, c);
        coupling_[b].emplace_back(a, c);
        pairs_.push_back({a, b, c});
      } else {
        throw std::invalid_argument("expected a quadratic polynomial");
      }
    }
  }

  Mask state() const { return state_; }
  double value() const { return value_; }

  /// Moves to the Gray code successor of step `t` (t >= 1).
  void step(Mask t) {
    std::size_t i = static_cast<std::size_t>(std::countr_zero(t));
    double delta = linear_[i];
    for (auto [j, c] : coupling_[i]) {
      if (state_ >> j & 1) {
        delta += c;
      }
    }
    if (state_ >> i & 1) {
      value_ -= delta;
    } else {
      value_ += delta;
    }
    state_ ^= Mask{1} << i;
    if ((t & (kResyncInterval - 1)) == 0) {
      value_ = exact();
    }
  }

 private:
  struct Pair {
    std::size_t a;
    std::size_t b;
    double c;
  };

  /// Rounding drift of the running sum is cleared this often.
  static constexpr Mask kResyncInterval = 1024;

  double exact() const {
    double sum = constant_;
    for (std::size_t i = 0; i < linear_.size(); ++i) {
      if (state_ >> i & 1) {
        sum += linear_[i];
      }
    }
    for (const Pair &p : pairs_) {
      if ((state_ >> p.a & 1) && (state_ >> p.b & 1)) {
        sum += p.c;
      }
    }
    return sum;
  }

  std::vector<double> linear_;
  std::vector<std::vector<std::pair<std::size_t, double>>> coupling_;
  std::vector<Pair> pairs_;
  Mask state_ = 0;
  double constant_ = 0.0;
  double value_ = 0.0;
};

Assignment to_assignment(const std::vector<VarId> &vars, Mask x) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    a[vars[i]] = (x >> i & 1) != 0;
  }
  return a;
}

void require_size(std::size_t n) {
  if (n > kMaxBruteForceVars) {
    throw std::length_error("brute force limited to " +
                            std::to_string(kMaxBruteForceVars) +
                            " variables, got " + std::to_string(n));
  }
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);
  return a;
}

}  // namespace

BruteForceResult brute_force_min(const Polynomial &poly) {
  const auto var_set = poly.variables();
  require_size(var_set.size());
  MaskedPoly p(poly, {var_set.begin(), var_set.end()});
  const Mask count = Mask{1} << p.vars.size();
  BruteForceResult out;
  out.value = std::numeric_limits<double>::infinity();
  for (Mask x = 0; x < count; ++x) {
    out.value = std::min(out.value, p(x));
  }
  for (Mask x = 0; x < count; ++x) {
    if (p(x) <= out.value + kMinimumTolerance) {
      out.argmins.push_back(to_assignment(p.vars, x));
    }
  }
  return out;
}

bool VerificationReport::ok() const {
  return minima_preserved && extension_ok && argmin_projection_ok &&
         phase_ok.value_or(true) && connectivity_ok.value_or(true);
}

nlohmann::json to_json(const VerificationReport &r) {
  auto opt = [](const auto &v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"minima_preserved", r.minima_preserved},
          {"min_original", r.min_original},
          {"min_qubo", r.min_qubo},
          {"extension_ok", r.extension_ok},
          {"argmin_projection_ok", r.argmin_projection_ok},
          {"phase_ok", opt(r.phase_ok)},
          {"max_phase_error", opt(r.max_phase_error)},
          {"connectivity_ok", opt(r.connectivity_ok)},
          {"ok", r.ok()}};
}

VerificationReport check_quadratization(const Polynomial &original,
                                        const QuadratizedProblem &problem) {
  std::vector<VarId> order;
  const auto orig_vars = original.variables();
  order.assign(orig_vars.begin(), orig_vars.end());
  for (VarId v : problem.qubo.variables()) {
    if (!orig_vars.contains(v)) {
      order.push_back(v);
    }
  }
  require_size(order.size());
  const std::size_t k = orig_vars.size();
  const Mask low = (Mask{1} << k) - 1;
  const Mask count = Mask{1} << order.size();

  std::map<VarId, std::size_t> bit;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bit[order[i]] = i;
  }
  auto position = [&](VarId v) {
    auto it = bit.find(v);
    if (it == bit.end()) {
      throw std::invalid_argument("constraint variable " + v.name() +
                                  " does not occur in the QUBO");
    }
    return it->second;
  };
  struct Product {
    std::size_t y, a, b;
  };
  std::vector<Product> products;
  for (const auto &s : problem.substitutions) {
    products.push_back({position(s.aux), position(s.factor_a),
                        position(s.factor_b)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> equal;
  for (const auto &[x, dup] : problem.duplicates) {
    equal.emplace_back(position(x), position(dup));
  }

  MaskedPoly c(original, {order.begin(), order.begin() + static_cast<long>(k)});
  std::vector<double> c_values(std::size_t{1} << k);
  double min_c = std::numeric_limits<double>::infinity();
  for (Mask x = 0; x <= low; ++x) {
    c_values[x] = c(x);
    min_c = std::min(min_c, c_values[x]);
  }

  std::vector<double> best_per_x(c_values.size(),
                                 std::numeric_limits<double>::infinity());
  double min_q = std::numeric_limits<double>::infinity();
  {
    GrayWalker walk(problem.qubo, order);
    for (Mask t = 0;; ++t) {
      if (t > 0) {
        walk.step(t);
      }
      double v = walk.value();
      auto &slot = best_per_x[walk.state() & low];
      slot = std::min(slot, v);
      min_q = std::min(min_q, v);
      if (t + 1 == count) {
        break;
      }
    }
  }

  VerificationReport r;
  r.min_original = min_c;
  r.min_qubo = min_q;
  r.minima_preserved = std::abs(min_q - min_c) <= kMinimumTolerance;
  r.extension_ok = true;
  for (std::size_t x = 0; x < c_values.size(); ++x) {
    if (std::abs(best_per_x[x] - c_values[x]) > kMinimumTolerance) {
      r.extension_ok = false;
      break;
    }
  }

  r.argmin_projection_ok = true;
  GrayWalker walk(problem.qubo, order);
  for (Mask t = 0;; ++t) {
    if (t > 0) {
      walk.step(t);
    }
    if (walk.value() <= min_q + kMinimumTolerance) {
      Mask s = walk.state();
      for (const Product &p : products) {
        bool y = s >> p.y & 1;
        bool ab = (s >> p.a & 1) && (s >> p.b & 1);
        if (y != ab) {
          r.argmin_projection_ok = false;
        }
      }
      for (auto [x, d] : equal) {
        if ((s >> x & 1) != (s >> d & 1)) {
          r.argmin_projection_ok = false;
        }
      }
      if (c_values[s & low] > min_c + kMinimumTolerance) {
        r.argmin_projection_ok = false;
      }
    }
    if (!r.argmin_projection_ok || t + 1 == count) {
      break;
    }
  }
  return r;
}

Circuit diagonal_part(const Circuit &circuit) {
  Circuit out(circuit.num_qubits);
  out.initial_layout = circuit.initial_layout;
  out.final_layout = circuit.final_layout;
  for (const Gate &g : circuit.gates) {
    if (g.kind() != GateKind::H && g.kind() != GateKind::RX) {
      out.gates.push_back(g);
    }
  }
  return out;
}

namespace {

struct Term {
  Mask bits;
  std::complex<double> amp;
};

constexpr double kAmplitudeFloor = 1e-12;

void apply(const Gate &g, const std::vector<int> &slot, std::vector<Term> &state) {
  auto bit = [&](std::size_t k) { return Mask{1} << slot[g.qubit(k)]; };
  switch (g.kind()) {
    case GateKind::RZ: {
      const double half = *g.param() / 2.0;
      const Mask m = bit(0);
      for (Term &t : state) {
        t.amp *= std::polar(1.0, (t.bits & m) ? half : -half);
      }
      return;
    }
    case GateKind::RZZ: {
      const double half = *g.param() / 2.0;
      const Mask a = bit(0);
      const Mask b = bit(1);
      for (Term &t : state) {
        bool odd = ((t.bits & a) != 0) != ((t.bits & b) != 0);
        t.amp *= std::polar(1.0, odd ? half : -half);
      }
      return;
    }
    case GateKind::CZ: {
      const Mask both = bit(0) | bit(1);
      for (Term &t : state) {
        if ((t.bits & both) == both) {
          t.amp = -t.amp;
        }
      }
      return;
    }
    case GateKind::SWAP: {
      const Mask a = bit(0);
      const Mask b = bit(1);
      for (Term &t : state) {
        bool va = t.bits & a;
        bool vb = t.bits & b;
        if (va != vb) {
          t.bits ^= a | b;
        }
      }
      return;
    }
    case GateKind::X: {
      for (Term &t : state) {
        t.bits ^= bit(0);
      }
      return;
    }
    case GateKind::SX: {
      // SX = 1/2 [[1+i, 1-i], [1-i, 1+i]]
      const std::complex<double> same(0.5, 0.5);
      const std::complex<double> flip(0.5, -0.5);
      const Mask m = bit(0);
      std::vector<Term> next;
      next.reserve(state.size() * 2);
      for (const Term &t : state) {
        next.push_back({t.bits, t.amp * same});
        next.push_back({t.bits ^ m, t.amp * flip});
      }
      std::sort(next.begin(), next.end(),
                [](const Term &x, const Term &y) { return x.bits < y.bits; });
      state.clear();
      for (const Term &t : next) {
        if (!state.empty() && state.back().bits == t.bits) {
          state.back().amp += t.amp;
        } else {
          state.push_back(t);
        }
      }
      std::erase_if(state,
                    [](const Term &t) { return std::abs(t.amp) < kAmplitudeFloor; });
      return;
    }
    case GateKind::H:
    case GateKind::RX:
      break;
  }
  throw std::invalid_argument(std::string("phase oracle cannot follow ") +
                              gate_name(g.kind()) + " gates");
}

}  // namespace

PhaseCheck phase_oracle_check(const Circuit &circuit, const Polynomial &qubo,
                              double gamma, const Layout &layout, double offset) {
  for (const Gate &g : circuit.gates) {
    if (g.kind() == GateKind::H || g.kind() == GateKind::RX) {
      throw std::invalid_argument(std::string("phase oracle cannot follow ") +
                                  gate_name(g.kind()) + " gates");
    }
  }
  std::vector<VarId> vars;
  for (const auto &[v, q] : layout) {
    vars.push_back(v);
  }
  require_size(vars.size());
  for (VarId v : qubo.variables()) {
    if (!layout.contains(v)) {
      throw std::invalid_argument("QUBO variable " + v.name() +
                                  " has no qubit in the layout");
    }
  }
  const Layout &final_layout =
      circuit.final_layout.empty() ? layout : circuit.final_layout;

  // Compact bit index for every qubit the check touches.
  std::vector<int> slot(circuit.num_qubits, -1);
  int used = 0;
  auto claim = [&](Qubit q) {
    if (q >= circuit.num_qubits) {
      throw std::out_of_range("layout qubit outside the circuit");
    }
    if (slot[q] < 0) {
      slot[q] = used++;
    }
  };
  for (const auto &[v, q] : layout) {
    claim(q);
  }
  for (const auto &[v, q] : final_layout) {
    claim(q);
  }
  for (const Gate &g : circuit.gates) {
    for (Qubit q : g.qubits()) {
      claim(q);
    }
  }
  if (used > 64) {
    throw std::length_error("phase oracle tracks at most 64 qubits");
  }

  std::vector<Mask> start_bit;
  std::vector<Mask> end_bit;
  for (VarId v : vars) {
    start_bit.push_back(Mask{1} << slot[layout.at(v)]);
    auto it = final_layout.find(v);
    if (it == final_layout.end()) {
      throw std::invalid_argument("variable " + v.name() +
                                  " missing from the final layout");
    }
    end_bit.push_back(Mask{1} << slot[it->second]);
  }

  MaskedPoly energy(qubo, vars);
  PhaseCheck out;
  out.ok = true;
  out.permutation_ok = true;
  double phase0 = 0.0;
  double energy0 = 0.0;
  const Mask count = Mask{1} << vars.size();
  std::vector<Term> state;
  for (Mask s = 0; s < count; ++s) {
    Mask in = 0;
    Mask expected = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (s >> i & 1) {
        in |= start_bit[i];
        expected |= end_bit[i];
      }
    }
    state.assign(1, {in, {1.0, 0.0}});
    for (const Gate &g : circuit.gates) {
      apply(g, slot, state);
    }
    if (state.size() != 1 || state[0].bits != expected ||
        std::abs(std::abs(state[0].amp) - 1.0) > 1e-9) {
      out.permutation_ok = false;
      out.ok = false;
      continue;
    }
    double phase = std::arg(state[0].amp);
    double e = energy(s) + offset;
    if (s == 0) {
      phase0 = phase;
      energy0 = e;
      continue;
    }
    double err = std::abs(
        wrap_angle((phase - phase0) + 4.0 * gamma * (e - energy0)));
    out.max_error = std::max(out.max_error, err);
  }
  if (out.max_error >= 1e-6) {
    out.ok = false;
  }
  return out;
}

}  // namespace hwqubo
