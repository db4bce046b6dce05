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

#include "k3mw/ellsurf/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "k3mw/error.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

namespace {

using RF = RationalFunction;

RF map_coefficients(const RF& f, const BigRational& lambda, long e) { return f.substitute_monomial(lambda, e); }

WeierstrassSurface map_surface(const WeierstrassSurface& s, const BigRational& lambda, long e) {
  return {map_coefficients(s.a1, lambda, e), map_coefficients(s.a2, lambda, e), map_coefficients(s.a3, lambda, e),
          map_coefficients(s.a4, lambda, e), map_coefficients(s.a6, lambda, e)};
}

}  // namespace

WeierstrassSurface WeierstrassSurface::from_a246(RF a2, RF a4, RF a6) {
  return {RF(), std::move(a2), RF(), std::move(a4), std::move(a6)};
}

WeierstrassSurface WeierstrassSurface::short_form(RF a4, RF a6) {
  return {RF(), RF(), RF(), std::move(a4), std::move(a6)};
}

std::string WeierstrassSurface::str() const {
  auto term = [](const RF& c, const std::string& mono) -> std::string {
    if (c.is_zero()) return "";
    std::string coef = c.is_polynomial() && c.num().degree() > 0 && c.num().coeffs().size() > 1 ? "(" + c.str() + ")"
                                                                                             : c.str();
    if (mono.empty()) return " + " + (c.is_polynomial() ? coef : "(" + coef + ")");
    if (c == RF(1)) return " + " + mono;
    return " + (" + c.str() + ")*" + mono;
  };
  std::string lhs = "y^2" + term(a1, "x*y") + term(a3, "y");
  std::string rhs = "x^3" + term(a2, "x^2") + term(a4, "x") + term(a6, "");
  return lhs + " = " + rhs;
}

WeierstrassQuantities c4_c6_disc(const WeierstrassSurface& s) {
  WeierstrassQuantities q;
  q.b2 = s.a1 * s.a1 + RF(4) * s.a2;
  q.b4 = RF(2) * s.a4 + s.a1 * s.a3;
  q.b6 = s.a3 * s.a3 + RF(4) * s.a6;
  q.b8 = s.a1 * s.a1 * s.a6 + RF(4) * s.a2 * s.a6 - s.a1 * s.a3 * s.a4 + s.a2 * s.a3 * s.a3 - s.a4 * s.a4;
  q.c4 = q.b2 * q.b2 - RF(24) * q.b4;
  q.c6 = -(q.b2 * q.b2 * q.b2) + RF(36) * q.b2 * q.b4 - RF(216) * q.b6;
  q.disc = -(q.b2 * q.b2 * q.b8) - RF(8) * q.b4 * q.b4 * q.b4 - RF(27) * q.b6 * q.b6 + RF(9) * q.b2 * q.b4 * q.b6;
  if (q.disc.is_zero()) throw MathError("singular equation: the discriminant vanishes identically");
  return q;
}

RF j_invariant(const WeierstrassSurface& s) {
  auto q = c4_c6_disc(s);
  return q.c4 * q.c4 * q.c4 / q.disc;
}

WeierstrassSurface base_change(const WeierstrassSurface& s, long n) {
  if (n <= 0) throw MathError("base change needs a positive degree");
  return map_surface(s, BigRational(1), n);
}

WeierstrassSurface substitute(const WeierstrassSurface& s, const BigRational& lambda, long e) {
  return map_surface(s, lambda, e);
}

WeierstrassSurface quadratic_twist(const WeierstrassSurface& s, const BigRational& d) {
  if (sgn(d) == 0) throw MathError("quadratic twist by 0");
  if (!s.is_three_term()) throw MathError("quadratic twist needs a1 = a3 = 0");
  RF dd(d);
  return WeierstrassSurface::from_a246(dd * s.a2, dd * dd * s.a4, dd * dd * dd * s.a6);
}

WeierstrassSurface rescale(const WeierstrassSurface& s, const RF& u) {
  if (u.is_zero()) throw MathError("rescaling by 0");
  RF u2 = u * u;
  RF u3 = u2 * u;
  return {s.a1 / u, s.a2 / u2, s.a3 / u3, s.a4 / (u2 * u2), s.a6 / (u3 * u3)};
}

std::string describe(const IsoMatch& m) {
  std::string s = m.g == 1 ? "t" : "t^" + std::to_string(m.g);
  std::string target = m.exponent == 1 ? s : "1/" + s;
  return s + " -> " + to_string(m.mu) + "*" + target + ", u^2 = " + m.u2.str() + ", twist d = " + to_string(m.d);
}

namespace {

void collect_exponents(const UniPoly& p, long& g) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (sgn(p.coeffs()[i]) != 0) g = std::gcd(g, static_cast<long>(i));
}

void collect_exponents(const RF& f, long& g) {
  collect_exponents(f.num(), g);
  collect_exponents(f.den(), g);
}

UniPoly compress(const UniPoly& p, long g) {
  std::vector<BigRational> v;
  for (std::size_t i = 0; i < p.coeffs().size(); i += static_cast<std::size_t>(g)) v.push_back(p.coeffs()[i]);
  return UniPoly(RationalField{}, std::move(v));
}

// f(t) = F(t^g) -> F(s).
RF compress(const RF& f, long g) { return RF(compress(f.num(), g), compress(f.den(), g)); }

// Candidates for m with N(m s) proportional to M(s), from two exponents of
// the common support.
std::vector<BigRational> scaling_candidates(const UniPoly& n, const UniPoly& m) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n.coeffs().size(); ++i)
    if (sgn(n.coeffs()[i]) != 0) support.push_back(i);
  std::vector<std::size_t> other;
  for (std::size_t i = 0; i < m.coeffs().size(); ++i)
    if (sgn(m.coeffs()[i]) != 0) other.push_back(i);
  if (support != other || support.size() < 2) return {};
  std::size_t i = support[0];
  std::size_t k = support[1];
  BigRational ratio = (m[k] / m[i]) / (n[k] / n[i]);
  auto e = static_cast<unsigned>(k - i);
  std::vector<BigRational> out;
  if (auto r = exact_root(ratio, e)) {
    out.push_back(*r);
    if (e % 2 == 0) out.push_back(-*r);
  }
  return out;
}

std::vector<BigRational> candidates_for(const RF& j1, const RF& j2) {
  auto c = scaling_candidates(j1.num(), j2.num());
  if (c.empty()) c = scaling_candidates(j1.den(), j2.den());
  if (c.empty() && j1.num().degree() == j2.num().degree() && j1.den().degree() == j2.den().degree()) {
    // Monomial numerator and denominator: j = c s^k.
    long k = static_cast<long>(j1.num().low_degree()) - static_cast<long>(j1.den().low_degree());
    if (k != 0 && j1.num().coeffs().size() > 0) {
      BigRational ratio = (j2.num().leading() / j2.den().leading()) / (j1.num().leading() / j1.den().leading());
      auto e = static_cast<unsigned>(k > 0 ? k : -k);
      if (k < 0) ratio = 1 / ratio;
      if (auto r = exact_root(ratio, e)) {
        c.push_back(*r);
        if (e % 2 == 0) c.push_back(-*r);
      }
    }
  }
  if (c.empty() && j1.is_constant()) c.push_back(BigRational(1));
  return c;
}

// Some k-th root of f in Q(t) up to a constant: f = c * h^k.
std::optional<std::pair<BigRational, RF>> root_up_to_constant(const RF& f, unsigned k) {
  auto part = [k](const UniPoly& p) -> std::optional<std::pair<BigRational, UniPoly>> {
    auto dec = squarefree_decompose(p);
    UniPoly h = UniPoly::constant(RationalField{}, BigRational(1));
    for (const auto& [fac, m] : dec.factors) {
      if (m % k != 0) return std::nullopt;
      h *= fac.pow(m / k);
    }
    return std::make_pair(dec.unit, h);
  };
  auto n = part(f.num());
  auto d = part(f.den());
  if (!n || !d) return std::nullopt;
  return std::make_pair(n->first / d->first, RF(n->second, d->second));
}

std::optional<IsoMatch> match_after_substitution(const WeierstrassQuantities& q1, const WeierstrassQuantities& q2) {
  IsoMatch m;
  if (!q1.c4.is_zero() && !q1.c6.is_zero()) {
    if (q2.c4.is_zero() || q2.c6.is_zero()) return std::nullopt;
    RF r4 = q2.c4 / q1.c4;
    RF r6 = q2.c6 / q1.c6;
    RF w = r6 / r4;
    if (w * w != r4) return std::nullopt;
    auto sq = root_up_to_constant(w, 2);
    if (!sq) return std::nullopt;
    m.d = squarefree_kernel(sq->first);
    m.u2 = w / RF(BigRational(m.d));
    return m;
  }
  if (q1.c6.is_zero()) {
    // j = 1728: c4 scales by w^2 with w = d u^2.
    if (!q2.c6.is_zero()) return std::nullopt;
    auto r = root_up_to_constant(q2.c4 / q1.c4, 4);
    if (!r) return std::nullopt;
    auto s = exact_root(r->first, 2);
    if (!s) return std::nullopt;
    m.d = squarefree_kernel(*s);
    m.u2 = r->second * r->second * RF(BigRational(*s / BigRational(m.d)));
    return m;
  }
  // j = 0: c6 scales by w^3 with w = d u^2.
  if (!q2.c4.is_zero()) return std::nullopt;
  auto r = root_up_to_constant(q2.c6 / q1.c6, 6);
  if (!r) return std::nullopt;
  m.d = squarefree_kernel(r->first);
  BigRational d(m.d);
  auto v = exact_root(BigRational(r->first / (d * d * d)), 6);
  if (!v) return std::nullopt;
  m.u2 = r->second * r->second * RF(BigRational(*v * *v));
  return m;
}

}  // namespace

std::optional<IsoMatch> same_surface_up_to_iso(const WeierstrassSurface& s1, const WeierstrassSurface& s2) {
  auto q1 = c4_c6_disc(s1);
  auto q2 = c4_c6_disc(s2);
  long g = 0;
  for (const auto* f : {&q1.c4, &q1.c6, &q2.c4, &q2.c6}) collect_exponents(*f, g);
  if (g == 0) g = 1;

  const RF j1 = compress(j_invariant(s1), g);
  const RF j2 = compress(j_invariant(s2), g);
  const RF c4a = compress(q1.c4, g), c6a = compress(q1.c6, g);
  const RF c4b = compress(q2.c4, g), c6b = compress(q2.c6, g);

  for (long e : {1L, -1L}) {
    RF base = e == 1 ? j1 : j1.substitute_monomial(BigRational(1), -1);
    for (const auto& nu : candidates_for(base, j2)) {
      BigRational mu = e == 1 ? nu : BigRational(1 / nu);
      if (j1.substitute_monomial(mu, e) != j2) continue;
      WeierstrassQuantities a;
      a.c4 = c4a.substitute_monomial(mu, e);
      a.c6 = c6a.substitute_monomial(mu, e);
      WeierstrassQuantities b;
      b.c4 = c4b;
      b.c6 = c6b;
      auto m = match_after_substitution(a, b);
      if (!m) continue;
      m->mu = mu;
      m->exponent = e;
      m->g = g;
      m->u2 = m->u2.substitute_monomial(BigRational(1), g);
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace k3mw
