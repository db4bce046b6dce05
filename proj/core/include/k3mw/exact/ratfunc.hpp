// Copyright 2026 The k3mw Authors
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

#include <string>
#include <string_view>

#include "k3mw/exact/poly.hpp"
#include "k3mw/exact/rational.hpp"

namespace k3mw {

/// Element of Q(t): numerator / denominator in lowest terms with a monic
/// denominator.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(const BigRational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(UniPoly num);           // NOLINT(google-explicit-constructor)
  /// Throws MathError when den is zero.
  RationalFunction(UniPoly num, UniPoly den);

  /// c * t^k for any integer k.
  static RationalFunction monomial(const BigRational& c, long k);
  static RationalFunction variable() { return monomial(BigRational(1), 1); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Value of a constant function; throws MathError otherwise.
  BigRational constant_value() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer power; negative exponents invert (MathError for 0^-k).
  RationalFunction pow(long e) const;

  /// Throws MathError at a pole.
  BigRational eval(const BigRational& x) const;

  /// Order of vanishing at t = 0 and at t = infinity (for nonzero values).
  long valuation_at_zero() const;
  long valuation_at_infinity() const { return den_.degree() - num_.degree(); }

  /// t -> lambda * t^e, e != 0.
  RationalFunction substitute_monomial(const BigRational& lambda, long e) const;
  /// t -> q(t) for a rational function q.
  RationalFunction compose(const RationalFunction& q) const;

  /// Serialized form "[n0,n1,...]/[d0,...]"; the denominator part is
  /// omitted when it is 1.
  std::string serialize() const;
  static RationalFunction parse(std::string_view text);

  /// Human-readable "(num)/(den)" in the given variable.
  std::string str(const std::string& var = "t") const;

 private:
  void normalize();

  UniPoly num_;
  UniPoly den_;
};

}  // namespace k3mw
