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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k3mw/error.hpp"
#include "k3mw/exact/field.hpp"

namespace k3mw {

/// Dense univariate polynomial over a field, coefficients in ascending
/// degree.  The leading coefficient is nonzero unless the polynomial is 0.
template <class Field>
class Poly {
 public:
  using Elem = typename Field::Elem;

  Poly() = default;
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }
  Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Field& field, Elem c) { return Poly(field, {std::move(c)}); }
  static Poly monomial(const Field& field, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, field.zero());
    v[k] = std::move(c);
    return Poly(field, std::move(v));
  }
  /// The polynomial t.
  static Poly variable(const Field& field) { return monomial(field, field.one(), 1); }

  const Field& field() const { return field_; }
  std::span<const Elem> coeffs() const { return c_; }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of t^k (zero beyond the degree).
  Elem operator[](std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  Elem leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Elem eval(const Elem& x) const {
    Elem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Elem inv = field_.inv(leading());
    return scale(inv);
  }
  Poly scale(const Elem& s) const {
    if (field_.is_zero(s)) return Poly(field_);
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(field_.mul(a, s));
    return Poly(field_, std::move(v));
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(field_.mul(field_.from_int(static_cast<long>(i)), c_[i]));
    return Poly(field_, std::move(v));
  }
  /// p(t) -> t^k p(t).
  Poly shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(k, field_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
  }
  /// t^deg * p(1/t) for the given nominal degree (>= degree()).
  Poly reversed(std::size_t nominal) const {
    std::vector<Elem> v(nominal + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) v[nominal - i] = c_[i];
    return Poly(field_, std::move(v));
  }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::size_t low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!field_.is_zero(c_[i])) return i;
    return 0;
  }

  Poly& operator+=(const Poly& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a.scale(a.field_.neg(a.field_.one())); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Field f = a.c_.empty() ? b.field_ : a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(v));
  }
  friend Poly operator+(const Poly& a, const Elem& s) { return a + constant(a.field_, s); }
  friend Poly operator-(const Poly& a, const Elem& s) { return a - constant(a.field_, s); }
  friend Poly operator*(const Poly& a, const Elem& s) { return a.scale(s); }
  friend Poly operator*(const Elem& s, const Poly& a) { return a.scale(s); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

  /// Euclidean division; throws MathError on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    Poly r = *this;
    r.field_ = d.field_;
    if (degree() < d.degree()) return {Poly(d.field_), r};
    const Field& f = d.field_;
    std::vector<Elem> q(static_cast<std::size_t>(degree() - d.degree() + 1), f.zero());
    Elem inv = f.inv(d.leading());
    while (!r.is_zero() && r.degree() >= d.degree()) {
      auto shift_by = static_cast<std::size_t>(r.degree() - d.degree());
      Elem coef = f.mul(r.leading(), inv);
      q[shift_by] = coef;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        r.c_[shift_by + j] = f.sub(r.c_[shift_by + j], f.mul(coef, d.c_[j]));
      r.c_.pop_back();
      r.trim();
    }
    return {Poly(f, std::move(q)), r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  /// Exact quotient; throws InternalError when b does not divide a.
  Poly exact_div(const Poly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
  }
  bool divisible_by(const Poly& b) const { return divmod(b).second.is_zero(); }

  Poly pow(unsigned e) const {
    Poly result = constant(field_, field_.one());
    Poly base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Composition p(q(t)).
  Poly compose(const Poly& q) const {
    Poly acc(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(field_, *it);
    return acc;
  }

  /// Human-readable form such as "3*t^2 - 1/2*t + 5".
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (field_.is_zero(c_[k])) continue;
      std::string coef = field_.str(c_[k]);
      bool negative = !coef.empty() && coef.front() == '-';
      if (negative) coef.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = coef == "1";
      if (k == 0) {
        out += coef;
      } else {
        if (!unit) out += coef + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }
  void adopt(const Poly& o) {
    if (c_.empty()) field_ = o.field_;
  }

  Field field_{};
  std::vector<Elem> c_;
};

using UniPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

/// Reduction of a rational polynomial modulo p (p must not divide any
/// coefficient denominator).
FpPoly reduce_mod(const UniPoly& a, std::uint64_t p);

/// Polynomial from rational strings, ascending degree.
UniPoly parse_poly(const std::vector<std::string>& coeffs);
std::vector<std::string> coefficient_strings(const UniPoly& a);

}  // namespace k3mw
