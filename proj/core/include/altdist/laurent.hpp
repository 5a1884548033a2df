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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "altdist/rational.hpp"

namespace altdist {

enum class Variable { A, t, q };

/// Sparse integer Laurent polynomial whose exponents live on a quarter-integer
/// grid. Exponents are stored multiplied by four, so A^3 is key 12 and
/// t^(1/2) is key 2. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, std::int64_t>;

  explicit LaurentPolynomial(Variable var = Variable::A) : var_(var) {}

  static LaurentPolynomial constant(std::int64_t c, Variable var);
  /// c * var^(quarters / 4)
  static LaurentPolynomial monomial(std::int64_t c, int quarters, Variable var);

  Variable variable() const noexcept { return var_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(int quarters) const;
  void add_term(int quarters, std::int64_t c);

  /// Exponent bounds as exact rationals; undefined on the zero polynomial.
  Rational max_degree() const;
  Rational min_degree() const;
  Rational span() const { return max_degree() - min_degree(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a *= b;
  }
  LaurentPolynomial pow(unsigned n) const;

  /// Replaces var^e by new_var^(factor * e); exponent keys are scaled by
  /// factor, which must keep them on the quarter grid.
  LaurentPolynomial substitute(Variable new_var, Rational factor) const;

  /// Canonical text form: ascending exponents, "c*x^e" terms, " + " / " - "
  /// separators, unit coefficients omitted, fractional exponents as "x^(p/q)".
  std::string str() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  Variable var_;
  Terms terms_;
};

}  // namespace altdist
