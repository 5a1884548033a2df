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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace altdist {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always stored in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "3", "-3/2".
  std::string str() const;

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  Rational abs() const noexcept { return num_ < 0 ? Rational(-num_, den_) : *this; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Closed interval [lo, hi] with finite rational endpoints.
struct ClosedInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Rational extended by +infinity (represented as an empty optional).
/// Used for interval upper endpoints.
using ExtendedRational = std::optional<Rational>;

inline bool ext_less(const ExtendedRational& a, const ExtendedRational& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

inline ExtendedRational ext_min(const ExtendedRational& a, const ExtendedRational& b) {
  return ext_less(b, a) ? b : a;
}

std::string ext_str(const ExtendedRational& x);

}  // namespace altdist
