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

#include "hwqubo/pubo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace hwqubo {

VarId VarId::duplicate(VarId origin, std::uint32_t copy) {
  if (origin.kind() == VarKind::Duplicate) {
    throw std::invalid_argument("cannot duplicate a duplicate variable " +
                                origin.name());
  }
  if (copy == 0) {
    throw std::invalid_argument("duplicate copy numbers start at 1");
  }
  return VarId(VarKind::Duplicate, copy, origin.kind(), origin.index());
}

std::optional<VarId> VarId::origin() const {
  if (kind_ != VarKind::Duplicate) {
    return std::nullopt;
  }
  return VarId(origin_kind_, origin_index_, VarKind::Problem, 0);
}

VarId VarId::base() const { return origin().value_or(*this); }

std::string VarId::name() const {
  switch (kind_) {
    case VarKind::Problem:
      return "x" + std::to_string(index_);
    case VarKind::Auxiliary:
      return "y" + std::to_string(index_);
    case VarKind::Duplicate: {
      std::string s = origin()->name() + "p";
      if (index_ > 1) {
        s += std::to_string(index_);
      }
      return s;
    }
  }
  return "?";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Scans a variable starting at text[pos]; returns the token length or 0.
std::size_t scan_var(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  if (i >= text.size() || (text[i] != 'x' && text[i] != 'y')) {
    return 0;
  }
  ++i;
  std::size_t digits_begin = i;
  while (i < text.size() && is_digit(text[i])) {
    ++i;
  }
  if (i == digits_begin) {
    return 0;
  }
  if (i < text.size() && text[i] == 'p') {
    ++i;
    while (i < text.size() && is_digit(text[i])) {
      ++i;
    }
  }
  return i - pos;
}

std::uint32_t parse_index(std::string_view digits, std::string_view token) {
  std::uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad variable index in '" +
                                std::string(token) + "'");
  }
  return value;
}

}  // namespace

VarId VarId::parse(std::string_view token) {
  if (scan_var(token, 0) != token.size() || token.empty()) {
    throw std::invalid_argument("unknown variable token '" +
                                std::string(token) + "'");
  }
  std::size_t p = token.find('p');
  std::string_view head = token.substr(0, p);
  std::uint32_t index = parse_index(head.substr(1), token);
  VarId v = head[0] == 'x' ? problem(index) : auxiliary(index);
  if (p == std::string_view::npos) {
    return v;
  }
  std::string_view copy_digits = token.substr(p + 1);
  std::uint32_t copy =
      copy_digits.empty() ? 1 : parse_index(copy_digits, token);
  return duplicate(v, copy);
}

Monomial::Monomial(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Monomial::Monomial(std::initializer_list<VarId> vars)
    : Monomial(std::vector<VarId>(vars)) {}

bool Monomial::contains(VarId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::strong_ordering Monomial::operator<=>(const Monomial &other) const {
  if (auto c = vars_.size() <=> other.vars_.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end());
}

void Polynomial::add_term(const Monomial &m, double coef) {
  if (coef == 0.0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0.0) {
      terms_.erase(it);
    }
  }
}

double Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto &[m, c] : terms_) {
    d = std::max(d, m.degree());
  }
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto &[m, c] : terms_) {
    out.insert(m.vars().begin(), m.vars().end());
  }
  return out;
}

bool Polynomial::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto &t) { return t.first.contains(v); });
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  for (const auto &[m, c] : other.terms_) {
    add_term(m, c);
  }
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  for (const auto &[m, c] : other.terms_) {
    add_term(m, -c);
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial &other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial &other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::scaled(double factor) const {
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    out.add_term(m, c * factor);
  }
  return out;
}

ParseError::ParseError(const std::string &what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip_space();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    while (true) {
      parse_term(out, sign);
      skip_space();
      if (pos_ == text_.size()) {
        break;
      }
      if (peek() != '+' && peek() != '-') {
        throw ParseError("expected '+' or '-'", pos_);
      }
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      ++pos_;
    }
  }

  bool scan_number(double &value) {
    const char *begin = text_.data() + pos_;
    const char *end = text_.data() + text_.size();
    if (pos_ >= text_.size() || !(is_digit(*begin) || *begin == '.')) {
      return false;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || !std::isfinite(value)) {
      throw ParseError("malformed number", pos_);
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return true;
  }

  void parse_term(Polynomial &out, double sign) {
    skip_space();
    std::size_t term_begin = pos_;
    double coef = 1.0;
    bool have_number = scan_number(coef);
    skip_space();
    bool need_var = false;
    if (have_number && peek() == '*') {
      ++pos_;
      skip_space();
      need_var = true;
    }
    std::vector<VarId> vars;
    while (true) {
      std::size_t len = scan_var(text_, pos_);
      if (len == 0) {
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
          std::size_t end = pos_;
          while (end < text_.size() &&
                 std::isalnum(static_cast<unsigned char>(text_[end]))) {
            ++end;
          }
          throw ParseError("unknown variable token '" +
                               std::string(text_.substr(pos_, end - pos_)) +
                               "'",
                           pos_);
        }
        break;
      }
      std::size_t after = pos_ + len;
      if (after < text_.size() &&
          std::isalnum(static_cast<unsigned char>(text_[after])) &&
          scan_var(text_, after) == 0) {
        throw ParseError("unknown variable token", pos_);
      }
      vars.push_back(VarId::parse(text_.substr(pos_, len)));
      pos_ = after;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (scan_var(text_, pos_) == 0) {
          throw ParseError("expected variable after '*'", pos_);
        }
      }
    }
    if (need_var && vars.empty()) {
      throw ParseError("expected variable after '*'", pos_);
    }
    if (!have_number && vars.empty()) {
      throw ParseError("expected a term", term_begin);
    }
    out.add_term(Monomial(std::move(vars)), sign * coef);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  return PolynomialParser(text).parse();
}

std::string to_string(const Polynomial &poly) {
  if (poly.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto &[m, c] : poly.terms()) {
    double mag = std::abs(c);
    if (first) {
      if (c < 0) {
        out += "-";
      }
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool print_number = m.degree() == 0 || mag != 1.0;
    if (print_number) {
      out += format_number(mag);
    }
    for (std::size_t i = 0; i < m.vars().size(); ++i) {
      if (print_number || i > 0) {
        out += ' ';
      }
      out += m.vars()[i].name();
    }
  }
  return out;
}

nlohmann::json to_json(const Polynomial &poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[m, c] : poly.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (VarId v : m.vars()) {
      vars.push_back(v.name());
    }
    terms.push_back({{"coef", c}, {"vars", std::move(vars)}});
  }
  return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  }
  Polynomial out;
  for (const auto &t : j["terms"]) {
    std::vector<VarId> vars;
    for (const auto &name : t.at("vars")) {
      vars.push_back(VarId::parse(name.get<std::string>()));
    }
    out.add_term(Monomial(std::move(vars)), t.at("coef").get<double>());
  }
  return out;
}

Polynomial load_polynomial(std::string_view text_or_json) {
  auto first = text_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text_or_json[first] == '{') {
    return polynomial_from_json(nlohmann::json::parse(text_or_json));
  }
  return parse_polynomial(text_or_json);
}

double evaluate(const Polynomial &poly, const Assignment &assignment) {
  double total = 0.0;
  for (const auto &[m, c] : poly.terms()) {
    bool on = true;
    for (VarId v : m.vars()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw std::invalid_argument("assignment is missing variable " +
                                    v.name());
      }
      on = on && it->second;
    }
    if (on) {
      total += c;
    }
  }
  return total;
}

Polynomial penalty_term(VarId a, VarId b, VarId y, double penalty_factor) {
  if (!(penalty_factor > 0.0)) {
    throw std::invalid_argument("penalty factor must be positive");
  }
  if (a == b || a == y || b == y) {
    throw std::invalid_argument("penalty term needs three distinct variables");
  }
  Polynomial p;
  p.add_term({a, b}, penalty_factor);
  p.add_term({a, y}, -2.0 * penalty_factor);
  p.add_term({b, y}, -2.0 * penalty_factor);
  p.add_term({y}, 3.0 * penalty_factor);
  return p;
}

Polynomial substitute_pair(const Polynomial &poly, VarId a, VarId b, VarId y) {
  if (poly.contains(y)) {
    throw std::invalid_argument("substitution target " + y.name() +
                                " already occurs in the polynomial");
  }
  if (a == b) {
    throw std::invalid_argument("cannot substitute a variable with itself");
  }
  Polynomial out;
  for (const auto &[m, c] : poly.terms()) {
    if (m.contains(a) && m.contains(b)) {
      std::vector<VarId> vars;
      vars.reserve(m.degree() - 1);
      for (VarId v : m.vars()) {
        if (v != a && v != b) {
          vars.push_back(v);
        }
      }
      vars.push_back(y);
      out.add_term(Monomial(std::move(vars)), c);
    } else {
      out.add_term(m, c);
    }
  }
  return out;
}

std::map<VarPair, int> pair_frequencies(const Polynomial &poly,
                                        std::size_t min_degree) {
  std::map<VarPair, int> counts;
  for (const auto &[m, c] : poly.terms()) {
    if (m.degree() < min_degree) {
      continue;
    }
    const auto &vs = m.vars();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        ++counts[{vs[i], vs[j]}];
      }
    }
  }
  return counts;
}

}  // namespace hwqubo
