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

#include "k3mw/exact/poly_algorithms.hpp"

#include <algorithm>

#include "k3mw/exact/integer.hpp"

namespace k3mw {

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void make_primitive(IntPoly& a) {
  trim(a);
  if (a.empty()) return;
  BigInt g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    BigInt la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

BigInt eval_int(const IntPoly& a, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt eval_mod(const IntPoly& a, const BigInt& x, const BigInt& m) {
  BigInt acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

}  // namespace

std::vector<BigInt> primitive_integer_model(const UniPoly& a) {
  BigInt l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(v);
  return v;
}

UniPoly from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<BigRational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return UniPoly(RationalField{}, std::move(v));
}

UniPoly rational_gcd(const UniPoly& a, const UniPoly& b) {
  IntPoly x = primitive_integer_model(a);
  IntPoly y = primitive_integer_model(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return from_integers(x).monic();
}

std::vector<BigRational> rational_roots(const UniPoly& a) {
  if (a.is_zero()) throw MathError("rational roots of the zero polynomial");
  std::vector<BigRational> out;
  if (a.degree() < 1) return out;
  UniPoly s = squarefree_part(a);
  IntPoly g = primitive_integer_model(s);
  const std::size_t n = g.size() - 1;
  const BigInt lc = g.back();

  // h(y) = lc^(n-1) g(y/lc) is monic with integer coefficients; the
  // rational roots of g are the integer roots of h divided by lc.
  IntPoly h(n + 1);
  h[n] = 1;
  BigInt power = 1;
  for (std::size_t i = n; i-- > 0;) {
    h[i] = g[i] * power;
    power *= lc;
  }

  BigInt bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, BigInt(abs(h[i])));
  bound += 1;

  auto reduce = [&h](std::uint64_t p) {
    std::vector<std::uint64_t> v;
    v.reserve(h.size());
    for (const auto& c : h) v.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    return FpPoly(PrimeField(p), std::move(v));
  };
  std::uint64_t p = 3;
  for (;; p += 2) {
    if (!is_prime(p) || p <= n) continue;
    FpPoly hp = reduce(p);
    if (poly_gcd(hp, hp.derivative()).degree() == 0) break;
    if (p > 100000) throw InternalError("no squarefree reduction found");
  }
  IntPoly dh(n);
  for (std::size_t i = 1; i <= n; ++i) dh[i - 1] = h[i] * static_cast<unsigned long>(i);

  BigInt target = 2 * bound + 1;
  std::vector<BigInt> int_roots;
  for (std::uint64_t r0 : roots_mod_p(reduce(p))) {
    BigInt r = static_cast<unsigned long>(r0);
    BigInt m = static_cast<unsigned long>(p);
    while (m < target) {
      m *= m;
      BigInt hr = eval_mod(h, r, m);
      BigInt dr = eval_mod(dh, r, m);
      BigInt inv;
      if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("Hensel lifting hit a singular root");
      r = (r - hr * inv) % m;
      if (r < 0) r += m;
    }
    if (r > m / 2) r -= m;
    if (eval_int(h, r) == 0) int_roots.push_back(r);
  }
  for (const auto& y : int_roots) {
    BigRational x = make_rational(y, lc);
    UniPoly lin{-x, BigRational(1)};
    UniPoly rest = a;
    while (rest.degree() >= 1) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      out.push_back(x);
      rest = std::move(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& inputs) {
  std::vector<UniPoly> basis;
  for (const auto& input : inputs) {
    if (input.is_zero() || input.degree() < 1) continue;
    for (const auto& [factor, mult] : squarefree_decompose(input).factors) {
      UniPoly rest = factor;
      std::vector<UniPoly> next;
      for (auto& b : basis) {
        if (rest.degree() < 1) {
          next.push_back(std::move(b));
          continue;
        }
        UniPoly g = poly_gcd(rest, b);
        if (g.degree() < 1) {
          next.push_back(std::move(b));
          continue;
        }
        UniPoly cofactor = b.exact_div(g).monic();
        rest = rest.exact_div(g);
        next.push_back(std::move(g));
        if (cofactor.degree() >= 1) next.push_back(std::move(cofactor));
      }
      if (rest.degree() >= 1) next.push_back(rest.monic());
      basis = std::move(next);
    }
  }
  std::sort(basis.begin(), basis.end(), [](const UniPoly& x, const UniPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    auto cx = x.coeffs();
    auto cy = y.coeffs();
    return std::lexicographical_compare(cx.begin(), cx.end(), cy.begin(), cy.end());
  });
  return basis;
}

unsigned multiplicity(const UniPoly& a, const UniPoly& q) {
  if (a.is_zero()) throw MathError("multiplicity in the zero polynomial");
  if (q.degree() < 1) throw MathError("multiplicity of a constant");
  unsigned m = 0;
  UniPoly rest = a;
  while (rest.degree() >= q.degree()) {
    auto [quot, rem] = rest.divmod(q);
    if (!rem.is_zero()) break;
    ++m;
    rest = std::move(quot);
  }
  return m;
}

UniPoly composed_sum(const UniPoly& a, const UniPoly& b) {
  if (a.degree() < 1 || b.degree() < 1) throw MathError("composed sum needs nonconstant inputs");
  const RationalField q;
  const long n = a.degree() * b.degree();
  std::vector<BigRational> xs;
  std::vector<BigRational> ys;
  for (long k = 0; k <= n; ++k) {
    BigRational xk(k);
    UniPoly shifted = b.compose(UniPoly{xk, BigRational(-1)});
    xs.push_back(xk);
    ys.push_back(resultant(a, shifted));
  }
  // Newton divided differences.
  std::vector<BigRational> coef = ys;
  for (long j = 1; j <= n; ++j)
    for (long i = n; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly result = UniPoly::constant(q, coef[n]);
  for (long i = n - 1; i >= 0; --i) result = result * UniPoly{-xs[i], BigRational(1)} + UniPoly::constant(q, coef[i]);
  return result;
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  const PrimeField& f = m.field();
  FpPoly result = FpPoly::constant(f, f.one()) % m;
  FpPoly b = base % m;
  while (e) {
    if (e & 1U) result = (result * b) % m;
    e >>= 1U;
    if (e) b = (b * b) % m;
  }
  return result;
}

namespace {

FpPoly frobenius_power(const FpPoly& x, unsigned k, const FpPoly& m) {
  FpPoly r = x;
  for (unsigned i = 0; i < k; ++i) r = powmod(r, m.field().p, m);
  return r;
}

}  // namespace

bool is_irreducible(const FpPoly& a) {
  if (a.degree() < 1) return false;
  if (a.degree() == 1) return true;
  const PrimeField& f = a.field();
  FpPoly m = a.monic();
  FpPoly x = FpPoly::variable(f);
  auto n = static_cast<unsigned>(m.degree());
  for (const auto& [prime, e] : factor_integer(BigInt(n))) {
    unsigned k = n / static_cast<unsigned>(prime.get_ui());
    FpPoly h = frobenius_power(x, k, m) - x;
    if (poly_gcd(h, m).degree() != 0) return false;
  }
  return (frobenius_power(x, n, m) - x).is_zero();
}

std::vector<unsigned> factor_degree_pattern(const FpPoly& a) {
  if (a.degree() < 1) return {};
  const PrimeField& f = a.field();
  FpPoly rest = a.monic();
  if (poly_gcd(rest, rest.derivative()).degree() != 0)
    throw MathError("degree pattern needs a squarefree polynomial");
  std::vector<unsigned> pattern;
  FpPoly x = FpPoly::variable(f);
  FpPoly h = x;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
    h = powmod(h, f.p, rest);
    FpPoly g = poly_gcd(h - x, rest);
    if (g.degree() > 0) {
      for (long i = 0; i < g.degree() / static_cast<long>(d); ++i) pattern.push_back(d);
      rest = rest.exact_div(g);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) pattern.push_back(static_cast<unsigned>(rest.degree()));
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::vector<std::uint64_t> roots_mod_p(const FpPoly& a) {
  std::vector<std::uint64_t> out;
  if (a.is_zero()) throw MathError("roots of the zero polynomial");
  const std::uint64_t p = a.field().p;
  for (std::uint64_t x = 0; x < p; ++x)
    if (a.eval(x) == 0) out.push_back(x);
  return out;
}

}  // namespace k3mw
