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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hwqubo {

enum class VarKind : std::uint8_t { Problem = 0, Auxiliary = 1, Duplicate = 2 };

/// Identifier of a binary variable.
///
/// Problem variables print as `x<i>`, auxiliaries as `y<i>`. A duplicate is a
/// copy of another variable used to split shared chain vertices; it prints as
/// the origin's name followed by `p`, plus the copy number when it is > 1
/// (`x3p`, `y2p2`). Ordering is Problem < Auxiliary < Duplicate, then by
/// index; duplicates order by origin first and copy number second.
class VarId {
 public:
  constexpr VarId() = default;

  static constexpr VarId problem(std::uint32_t index) {
    return VarId(VarKind::Problem, index, VarKind::Problem, 0);
  }
  static constexpr VarId auxiliary(std::uint32_t index) {
    return VarId(VarKind::Auxiliary, index, VarKind::Problem, 0);
  }
  /// `copy` starts at 1. The origin must not itself be a duplicate.
  static VarId duplicate(VarId origin, std::uint32_t copy);

  /// Parses a single variable token. Throws std::invalid_argument.
  static VarId parse(std::string_view token);

  constexpr VarKind kind() const { return kind_; }
  /// Numeric index for Problem/Auxiliary; copy number for Duplicate.
  constexpr std::uint32_t index() const { return index_; }
  std::optional<VarId> origin() const;
  /// The variable a duplicate mirrors, or the variable itself.
  VarId base() const;

  std::string name() const;

  constexpr auto operator<=>(const VarId &) const = default;

 private:
  constexpr VarId(VarKind kind, std::uint32_t index, VarKind origin_kind,
                  std::uint32_t origin_index)
      : kind_(kind), origin_kind_(origin_kind), origin_index_(origin_index),
        index_(index) {}

  // Member order defines the comparison order.
  VarKind kind_ = VarKind::Problem;
  VarKind origin_kind_ = VarKind::Problem;
  std::uint32_t origin_index_ = 0;
  std::uint32_t index_ = 0;
};

using VarPair = std::pair<VarId, VarId>;

/// Returns the pair ordered so that first < second.
inline VarPair ordered_pair(VarId a, VarId b) {
  return a < b ? VarPair{a, b} : VarPair{b, a};
}

/// A product of distinct binary variables. The empty monomial is the constant.
class Monomial {
 public:
  Monomial() = default;
  /// Sorts and drops repeats (x * x = x on binary variables).
  explicit Monomial(std::vector<VarId> vars);
  Monomial(std::initializer_list<VarId> vars);

  const std::vector<VarId> &vars() const { return vars_; }
  std::size_t degree() const { return vars_.size(); }
  bool contains(VarId v) const;

  /// Graded order: lower degree first, then lexicographic.
  std::strong_ordering operator<=>(const Monomial &other) const;
  bool operator==(const Monomial &other) const = default;

 private:
  std::vector<VarId> vars_;
};

/// Multilinear pseudo-Boolean polynomial with real coefficients.
/// No stored coefficient is ever exactly zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, double>;

  Polynomial() = default;

  void add_term(const Monomial &m, double coef);
  void add_term(std::initializer_list<VarId> vars, double coef) {
    add_term(Monomial(vars), coef);
  }

  const TermMap &terms() const { return terms_; }
  double coefficient(const Monomial &m) const;
  double constant() const { return coefficient(Monomial{}); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::size_t degree() const;
  std::set<VarId> variables() const;
  bool contains(VarId v) const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial operator+(const Polynomial &other) const;
  Polynomial operator-(const Polynomial &other) const;
  Polynomial scaled(double factor) const;
  bool operator==(const Polynomial &other) const = default;

 private:
  TermMap terms_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string &what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `poly := term (("+"|"-") term)*` where a term is an optional number
/// (optionally followed by `*`) and zero or more variables. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

/// Canonical text form; parse_polynomial(to_string(p)) == p.
std::string to_string(const Polynomial &poly);

nlohmann::json to_json(const Polynomial &poly);
Polynomial polynomial_from_json(const nlohmann::json &j);

/// Reads either the text grammar or the JSON form.
Polynomial load_polynomial(std::string_view text_or_json);

using Assignment = std::map<VarId, bool>;

/// Throws std::invalid_argument when a variable of `poly` is unassigned.
double evaluate(const Polynomial &poly, const Assignment &assignment);

/// c_p * (ab - 2ay - 2by + 3y): zero iff y == a*b, at least c_p otherwise.
Polynomial penalty_term(VarId a, VarId b, VarId y, double penalty_factor);

/// Replaces {a, b} by {y} in every monomial containing both. Penalties are
/// not added. Throws if `y` already occurs in `poly`.
Polynomial substitute_pair(const Polynomial &poly, VarId a, VarId b, VarId y);

/// Counts, over terms of degree >= min_degree, how many terms contain each
/// unordered pair of variables.
std::map<VarPair, int> pair_frequencies(const Polynomial &poly,
                                        std::size_t min_degree);

}  // namespace hwqubo
