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

#include "k3mw/exact/prime_field.hpp"

#include <string>

#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"

namespace k3mw {

PrimeFieldCtx::PrimeFieldCtx(std::uint64_t p) : field_(p) {
  if (!is_prime(p)) throw MathError(std::to_string(p) + " is not prime");
}

PrimeFieldCtx::PrimeFieldCtx(std::uint64_t p, std::uint64_t nonresidue) : PrimeFieldCtx(p) {
  if (p == 2) throw MathError("quadratic extension of F_2 is unsupported");
  if (legendre(nonresidue, p) != -1)
    throw MathError(std::to_string(nonresidue) + " is not a non-residue mod " + std::to_string(p));
  n_ = nonresidue % p;
}

PrimeFieldCtx PrimeFieldCtx::with_extension(std::uint64_t p) { return {p, least_nonresidue(p)}; }

void PrimeFieldCtx::require_extension() const {
  if (!has_extension()) throw MathError("prime field context has no quadratic extension");
}

FpPoly PrimeFieldCtx::extension_modulus() const {
  require_extension();
  return FpPoly(field_, {field_.neg(n_), 0, 1});
}

Fp2 PrimeFieldCtx::add(const Fp2& x, const Fp2& y) const {
  return {field_.add(x.a, y.a), field_.add(x.b, y.b)};
}

Fp2 PrimeFieldCtx::mul(const Fp2& x, const Fp2& y) const {
  require_extension();
  std::uint64_t a = field_.add(field_.mul(x.a, y.a), field_.mul(n_, field_.mul(x.b, y.b)));
  std::uint64_t b = field_.add(field_.mul(x.a, y.b), field_.mul(x.b, y.a));
  return {a, b};
}

std::uint64_t PrimeFieldCtx::norm(const Fp2& x) const {
  return field_.sub(field_.mul(x.a, x.a), field_.mul(n_, field_.mul(x.b, x.b)));
}

int PrimeFieldCtx::chi2(const Fp2& x) const {
  require_extension();
  return legendre(norm(x), p());
}

}  // namespace k3mw
