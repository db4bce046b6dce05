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

#include "k3mw/exact/rational.hpp"

#include <cctype>
#include <string>

#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"

namespace k3mw {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (s.front() == '-') n = -n;
  return make_rational(n, d);
}

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MathError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw MathError("zero to a negative power");
    return pow(BigRational(1) / base, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  return make_rational(n, d);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

namespace {

std::optional<BigInt> integer_root(const BigInt& v, unsigned k) {
  BigInt r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<BigRational> exact_root(const BigRational& value, unsigned k) {
  if (k == 0) throw MathError("zeroth root");
  if (sgn(value) < 0 && k % 2 == 0) return std::nullopt;
  auto n = integer_root(value.get_num(), k);
  auto d = integer_root(value.get_den(), k);
  if (!n || !d) return std::nullopt;
  return make_rational(*n, *d);
}

bool is_square(const BigRational& value) { return exact_root(value, 2).has_value(); }

BigInt squarefree_kernel(const BigRational& value) {
  if (sgn(value) == 0) return 0;
  BigInt m = value.get_num() * value.get_den();
  BigInt kernel = 1;
  for (const auto& [prime, e] : factor_integer(m))
    if (e % 2 == 1) kernel *= prime;
  return sgn(value) < 0 ? BigInt(-kernel) : kernel;
}

std::uint64_t reduce_mod(const BigRational& q, std::uint64_t p) {
  BigInt pm(std::to_string(p), 10);
  BigInt d = q.get_den() % pm;
  if (d == 0) throw MathError(std::to_string(p) + " divides a denominator");
  BigInt n = q.get_num() % pm;
  if (n < 0) n += pm;
  std::uint64_t nn = std::stoull(n.get_str());
  std::uint64_t dd = std::stoull(d.get_str());
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(nn) * mod_inverse(dd, p)) % p);
}

}  // namespace k3mw
