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

#include "k3mw/constructions/elliptic_curve.hpp"

#include <map>
#include <set>

#include "k3mw/error.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

namespace {

using Q = BigRational;

struct BQuantities {
  Q b2, b4, b6, b8;
};

BQuantities b_quantities(const EllipticCurveQ& e) {
  BQuantities q;
  q.b2 = e.a1 * e.a1 + 4 * e.a2;
  q.b4 = 2 * e.a4 + e.a1 * e.a3;
  q.b6 = e.a3 * e.a3 + 4 * e.a6;
  q.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
  return q;
}

void require_short(const EllipticCurveQ& e) {
  if (e.a1 != 0 || e.a2 != 0 || e.a3 != 0) throw MathError("expected a short Weierstrass model");
}

}  // namespace

void EllipticCurveQ::validate() const {
  if (discriminant() == 0) throw MathError("singular curve");
}

Q EllipticCurveQ::c4() const {
  BQuantities q = b_quantities(*this);
  return q.b2 * q.b2 - 24 * q.b4;
}

Q EllipticCurveQ::c6() const {
  BQuantities q = b_quantities(*this);
  return -q.b2 * q.b2 * q.b2 + 36 * q.b2 * q.b4 - 216 * q.b6;
}

Q EllipticCurveQ::discriminant() const {
  BQuantities q = b_quantities(*this);
  return -q.b2 * q.b2 * q.b8 - 8 * q.b4 * q.b4 * q.b4 - 27 * q.b6 * q.b6 + 9 * q.b2 * q.b4 * q.b6;
}

EllipticCurveQ EllipticCurveQ::short_model() const { return short_form(Q(-27 * c4()), Q(-54 * c6())); }

EllipticCurveQ EllipticCurveQ::short_form(Q a, Q b) { return {Q(0), Q(0), Q(0), std::move(a), std::move(b)}; }

Q ec_j_invariant(const EllipticCurveQ& e) {
  e.validate();
  Q c4 = e.c4();
  return Q(c4 * c4 * c4 / e.discriminant());
}

EllipticCurveQ ec_quadratic_twist(const EllipticCurveQ& e, const Q& d) {
  if (d == 0) throw MathError("quadratic twist by 0");
  e.validate();
  EllipticCurveQ s = e.a1 == 0 && e.a2 == 0 && e.a3 == 0 ? e : e.short_model();
  return EllipticCurveQ::short_form(Q(d * d * s.a4), Q(d * d * d * s.a6));
}

std::optional<Q> ec_isomorphism_scale(const EllipticCurveQ& e1, const EllipticCurveQ& e2) {
  EllipticCurveQ s1 = e1.a1 == 0 && e1.a2 == 0 && e1.a3 == 0 ? e1 : e1.short_model();
  EllipticCurveQ s2 = e2.a1 == 0 && e2.a2 == 0 && e2.a3 == 0 ? e2 : e2.short_model();
  s1.validate();
  s2.validate();
  if ((s1.a4 == 0) != (s2.a4 == 0) || (s1.a6 == 0) != (s2.a6 == 0)) return std::nullopt;
  std::optional<Q> u;
  if (s1.a4 == 0) {
    u = exact_root(Q(s1.a6 / s2.a6), 6);
  } else if (s1.a6 == 0) {
    u = exact_root(Q(s1.a4 / s2.a4), 4);
  } else {
    Q u2 = (s2.a4 * s1.a6) / (s1.a4 * s2.a6);
    u = exact_root(u2, 2);
  }
  if (!u) return std::nullopt;
  Q u4 = pow(*u, 4);
  if (s1.a4 != u4 * s2.a4 || s1.a6 != u4 * *u * *u * s2.a6) return std::nullopt;
  return u;
}

EcPoint ec_add(const EllipticCurveQ& shortm, const EcPoint& p, const EcPoint& q) {
  require_short(shortm);
  if (p.infinity) return q;
  if (q.infinity) return p;
  Q lambda;
  if (p.x == q.x) {
    if (p.y + q.y == 0) return EcPoint{};
    lambda = (3 * p.x * p.x + shortm.a4) / (2 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Q x3 = lambda * lambda - p.x - q.x;
  Q y3 = lambda * (p.x - x3) - p.y;
  return EcPoint{false, x3, y3};
}

EcPoint ec_multiply(const EllipticCurveQ& shortm, const EcPoint& p, long k) {
  EcPoint base = p;
  if (k < 0) {
    k = -k;
    if (!base.infinity) base.y = -base.y;
  }
  EcPoint acc;
  while (k) {
    if (k & 1) acc = ec_add(shortm, acc, base);
    k >>= 1;
    if (k) base = ec_add(shortm, base, base);
  }
  return acc;
}

UniPoly division_polynomial(const Q& A, const Q& B, long n) {
  if (n < 0) throw MathError("division polynomial index must be non-negative");
  const UniPoly F({B, A, Q(0), Q(1)});
  std::map<long, UniPoly> memo;
  memo[0] = UniPoly();
  memo[1] = UniPoly({Q(1)});
  memo[2] = UniPoly({Q(2)});
  memo[3] = UniPoly({Q(-A * A), Q(12 * B), Q(6 * A), Q(0), Q(3)});
  memo[4] = UniPoly({Q(-4 * (8 * B * B + A * A * A)), Q(-16 * A * B), Q(-20 * A * A), Q(80 * B), Q(20 * A), Q(0),
                     Q(4)});
  auto rec = [&](auto&& self, long k) -> UniPoly {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    long m = k / 2;
    UniPoly r;
    if (k % 2 == 1) {
      UniPoly lhs = self(self, m + 2) * self(self, m).pow(3);
      UniPoly rhs = self(self, m - 1) * self(self, m + 1).pow(3);
      if (m % 2 == 0) {
        lhs = lhs * F * F;
      } else {
        rhs = rhs * F * F;
      }
      r = lhs - rhs;
    } else {
      UniPoly inner = self(self, m + 2) * self(self, m - 1).pow(2) - self(self, m - 2) * self(self, m + 1).pow(2);
      r = inner * self(self, m) * Q(1, 2);
    }
    memo[k] = r;
    return r;
  };
  return rec(rec, n);
}

std::vector<EcPoint> rational_points_of_order(const EllipticCurveQ& e, long n) {
  if (n < 2 || n > 12) throw MathError("torsion order must be in 2..12");
  e.validate();
  EllipticCurveQ s = e.a1 == 0 && e.a2 == 0 && e.a3 == 0 ? e : e.short_model();
  const UniPoly F({s.a6, s.a4, Q(0), Q(1)});
  std::set<Q> xs;
  for (const Q& x : rational_roots(division_polynomial(s.a4, s.a6, n))) xs.insert(x);
  if (n % 2 == 0)
    for (const Q& x : rational_roots(F)) xs.insert(x);
  std::vector<EcPoint> out;
  for (const Q& x : xs) {
    std::optional<Q> y = exact_root(F.eval(x), 2);
    if (!y) continue;
    for (const Q& yy : {*y, Q(-*y)}) {
      EcPoint p{false, x, yy};
      long order = 0;
      EcPoint acc = p;
      for (long k = 1; k <= n; ++k) {
        if (acc.infinity) {
          order = k;
          break;
        }
        acc = ec_add(s, acc, p);
      }
      if (order == n) out.push_back(p);
      if (yy == 0) break;
    }
  }
  return out;
}

bool has_rational_n_torsion(const EllipticCurveQ& e, long n) {
  if (n < 2 || n > 6) throw MathError("has_rational_n_torsion supports n in 2..6");
  return !rational_points_of_order(e, n).empty();
}

}  // namespace k3mw
