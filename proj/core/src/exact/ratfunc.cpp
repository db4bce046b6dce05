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

#include "k3mw/exact/ratfunc.hpp"

#include <utility>
#include <vector>

#include "k3mw/error.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

namespace {

const RationalField kQ{};

UniPoly one_poly() { return UniPoly::constant(kQ, BigRational(1)); }

std::string list_string(const UniPoly& p) {
  std::string out = "[";
  bool first = true;
  for (const auto& c : coefficient_strings(p)) {
    if (!first) out += ",";
    out += c;
    first = false;
  }
  if (p.is_zero()) out += "0";
  return out + "]";
}

UniPoly parse_list(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("rational function coefficient list must be bracketed: '" + std::string(s) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  while (true) {
    auto comma = s.find(',');
    parts.emplace_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return parse_poly(parts);
}

}  // namespace

RationalFunction::RationalFunction() : num_(kQ), den_(one_poly()) {}

RationalFunction::RationalFunction(const BigRational& c) : num_(UniPoly::constant(kQ, c)), den_(one_poly()) {}

RationalFunction::RationalFunction(UniPoly num) : num_(std::move(num)), den_(one_poly()) {}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  BigRational lc = den_.leading();
  if (lc != 1) {
    BigRational inv = 1 / lc;
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

RationalFunction RationalFunction::monomial(const BigRational& c, long k) {
  if (k >= 0) return RationalFunction(UniPoly::monomial(kQ, c, static_cast<std::size_t>(k)));
  return RationalFunction(UniPoly::constant(kQ, c), UniPoly::monomial(kQ, BigRational(1), static_cast<std::size_t>(-k)));
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw MathError("rational function is not constant");
  return num_[0];
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw MathError("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw MathError("zero to a negative power");
    return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
  }
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

BigRational RationalFunction::eval(const BigRational& x) const {
  BigRational d = den_.eval(x);
  if (sgn(d) == 0) throw MathError("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

long RationalFunction::valuation_at_zero() const {
  if (is_zero()) throw MathError("valuation of zero");
  return static_cast<long>(num_.low_degree()) - static_cast<long>(den_.low_degree());
}

namespace {

// p(lambda t^e) as num/den with e != 0.
RationalFunction substitute_poly(const UniPoly& p, const BigRational& lambda, long e) {
  const long deg = p.degree();
  if (deg < 0) return RationalFunction();
  const std::size_t step = static_cast<std::size_t>(e > 0 ? e : -e);
  std::vector<BigRational> v(static_cast<std::size_t>(deg) * step + 1, BigRational(0));
  BigRational lp = 1;
  for (long i = 0; i <= deg; ++i) {
    std::size_t idx = e > 0 ? static_cast<std::size_t>(i) * step : static_cast<std::size_t>(deg - i) * step;
    v[idx] = p[static_cast<std::size_t>(i)] * lp;
    lp *= lambda;
  }
  UniPoly q(kQ, std::move(v));
  if (e > 0) return RationalFunction(std::move(q));
  return RationalFunction(std::move(q), UniPoly::monomial(kQ, BigRational(1), static_cast<std::size_t>(deg) * step));
}

}  // namespace

RationalFunction RationalFunction::substitute_monomial(const BigRational& lambda, long e) const {
  if (e == 0) throw MathError("monomial substitution with exponent 0");
  if (sgn(lambda) == 0) throw MathError("monomial substitution with lambda = 0");
  return substitute_poly(num_, lambda, e) / substitute_poly(den_, lambda, e);
}

RationalFunction RationalFunction::compose(const RationalFunction& q) const {
  auto horner = [&q](const UniPoly& p) {
    RationalFunction acc;
    for (long i = p.degree(); i >= 0; --i) acc = acc * q + RationalFunction(p[static_cast<std::size_t>(i)]);
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string RationalFunction::serialize() const {
  std::string out = list_string(num_);
  if (den_.degree() > 0) out += "/" + list_string(den_);
  return out;
}

RationalFunction RationalFunction::parse(std::string_view text) {
  auto split = text.find("]/[");
  if (split == std::string_view::npos) {
    if (!text.empty() && text.front() != '[') return RationalFunction(parse_rational(text));
    return RationalFunction(parse_list(text));
  }
  UniPoly den = parse_list(text.substr(split + 2));
  if (den.is_zero()) throw ParseError("zero denominator in rational function");
  return RationalFunction(parse_list(text.substr(0, split + 1)), std::move(den));
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace k3mw
