// Copyright 2026 The altdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "altdist/laurent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace altdist {

namespace {

char var_name(Variable v) {
  switch (v) {
    case Variable::A: return 'A';
    case Variable::t: return 't';
    case Variable::q: return 'q';
  }
  return '?';
}

std::string exponent_text(int quarters) {
  Rational e(quarters, 4);
  if (e.is_integer()) return std::to_string(e.num());
  return "(" + e.str() + ")";
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c, Variable var) {
  return monomial(c, 0, var);
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t c, int quarters, Variable var) {
  LaurentPolynomial p(var);
  p.add_term(quarters, c);
  return p;
}

std::int64_t LaurentPolynomial::coefficient(int quarters) const {
  auto it = terms_.find(quarters);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int quarters, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(quarters, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPolynomial::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return Rational(terms_.rbegin()->first, 4);
}

Rational LaurentPolynomial::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return Rational(terms_.begin()->first, 4);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.var_ != var_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("adding polynomials in different variables");
  if (is_zero()) var_ = o.var_;
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  if (o.var_ != var_)
    throw std::invalid_argument("multiplying polynomials in different variables");
  LaurentPolynomial out(var_);
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial out = constant(1, var_);
  for (unsigned i = 0; i < n; ++i) out *= *this;
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute(Variable new_var, Rational factor) const {
  LaurentPolynomial out(new_var);
  for (auto [e, c] : terms_) {
    Rational scaled = factor * Rational(e);
    if (!scaled.is_integer())
      throw std::domain_error("substitution leaves the quarter-integer grid");
    out.add_term(static_cast<int>(scaled.num()), c);
  }
  return out;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms_) {
    std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var_name(var_);
    out += "^" + exponent_text(e);
  }
  return out;
}

}  // namespace altdist
