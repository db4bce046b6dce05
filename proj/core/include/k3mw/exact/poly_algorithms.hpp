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

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "k3mw/error.hpp"
#include "k3mw/exact/poly.hpp"

namespace k3mw {

// ---------------------------------------------------------------------------
// gcd

namespace detail {

template <class Field>
Poly<Field> euclid_gcd(Poly<Field> a, Poly<Field> b) {
  while (!b.is_zero()) {
    Poly<Field> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace detail

/// gcd over Q via primitive integer remainder sequences.
UniPoly rational_gcd(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
template <class Field>
Poly<Field> poly_gcd(const Poly<Field>& a, const Poly<Field>& b) {
  if constexpr (std::is_same_v<Field, RationalField>) {
    return rational_gcd(a, b);
  } else {
    return detail::euclid_gcd(a, b);
  }
}

// ---------------------------------------------------------------------------
// squarefree decomposition

template <class Field>
struct SquarefreeDecomposition {
  typename Field::Elem unit;
  /// Monic, squarefree, pairwise coprime; ascending multiplicity.
  std::vector<std::pair<Poly<Field>, unsigned>> factors;
};

/// Yun's algorithm.  Requires characteristic 0 or p > deg a.
template <class Field>
SquarefreeDecomposition<Field> squarefree_decompose(const Poly<Field>& a) {
  if (a.is_zero()) throw MathError("squarefree decomposition of the zero polynomial");
  const Field& f = a.field();
  std::uint64_t p = f.characteristic();
  if (p != 0 && static_cast<std::uint64_t>(a.degree()) >= p)
    throw MathError("squarefree decomposition needs characteristic 0 or p > degree");
  SquarefreeDecomposition<Field> out{a.leading(), {}};
  Poly<Field> monic_a = a.monic();
  if (monic_a.degree() == 0) return out;
  Poly<Field> da = monic_a.derivative();
  Poly<Field> b = poly_gcd(monic_a, da);
  Poly<Field> c = monic_a.exact_div(b);
  Poly<Field> d = da.exact_div(b) - c.derivative();
  for (unsigned i = 1; c.degree() > 0; ++i) {
    Poly<Field> ai = poly_gcd(c, d);
    c = c.exact_div(ai);
    d = d.exact_div(ai) - c.derivative();
    if (ai.degree() > 0) out.factors.emplace_back(std::move(ai).monic(), i);
  }
  return out;
}

template <class Field>
Poly<Field> squarefree_part(const Poly<Field>& a) {
  auto dec = squarefree_decompose(a);
  Poly<Field> out = Poly<Field>::constant(a.field(), a.field().one());
  for (const auto& [fac, m] : dec.factors) out *= fac;
  return out;
}

// ---------------------------------------------------------------------------
// resultant

/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a,
/// which equals the Sylvester determinant with a's coefficients in the
/// top rows.  Throws MathError for a zero input.
template <class Field>
typename Field::Elem resultant(const Poly<Field>& a, const Poly<Field>& b) {
  if (a.is_zero() || b.is_zero()) throw MathError("resultant of a zero polynomial");
  const Field f = a.field();
  using Elem = typename Field::Elem;
  Elem acc = f.one();
  Poly<Field> x = a;
  Poly<Field> y = b;
  auto power = [&f](Elem base, long e) {
    Elem r = f.one();
    for (long i = 0; i < e; ++i) r = f.mul(r, base);
    return r;
  };
  while (true) {
    long m = x.degree();
    long n = y.degree();
    if (n == 0) return f.mul(acc, power(y.leading(), m));
    if (m == 0) return f.mul(acc, power(x.leading(), n));
    Poly<Field> r = x % y;
    if (r.is_zero()) return f.zero();
    // Res(x, y) = (-1)^{mn} lc(y)^{m - deg r} Res(y, r)
    if ((m * n) % 2 != 0) acc = f.neg(acc);
    acc = f.mul(acc, power(y.leading(), m - r.degree()));
    x = std::move(y);
    y = std::move(r);
  }
}

/// (-1)^{n(n-1)/2} Res(a, a') / lc(a).
template <class Field>
typename Field::Elem discriminant(const Poly<Field>& a) {
  const Field& f = a.field();
  if (a.degree() < 1) throw MathError("discriminant of a constant polynomial");
  if (a.degree() == 1) return f.one();
  auto r = f.div(resultant(a, a.derivative()), a.leading());
  long n = a.degree();
  return ((n * (n - 1) / 2) % 2 != 0) ? f.neg(r) : r;
}

// ---------------------------------------------------------------------------
// rationals

/// Primitive integer polynomial proportional to a, positive leading
/// coefficient.
std::vector<BigInt> primitive_integer_model(const UniPoly& a);
UniPoly from_integers(const std::vector<BigInt>& coeffs);

/// All rational roots with multiplicity, ascending.
std::vector<BigRational> rational_roots(const UniPoly& a);

/// Monic squarefree pairwise-coprime polynomials such that every input is a
/// unit times a product of powers of them.  Zero inputs are ignored.
std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& inputs);

/// Exponent of q in a (q nonconstant, a nonzero).
unsigned multiplicity(const UniPoly& a, const UniPoly& q);

/// Res_y(a(y), b(x - y)) as a polynomial in x: its roots are alpha + beta.
UniPoly composed_sum(const UniPoly& a, const UniPoly& b);

// ---------------------------------------------------------------------------
// prime fields

/// base^e mod m over F_p.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/// Rabin's irreducibility test.
bool is_irreducible(const FpPoly& a);

/// Degrees of the irreducible factors of a squarefree polynomial (distinct
/// degree factorization), ascending, with repetition.
std::vector<unsigned> factor_degree_pattern(const FpPoly& a);

/// Roots in F_p by enumeration (small p).
std::vector<std::uint64_t> roots_mod_p(const FpPoly& a);

}  // namespace k3mw
