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

#include <optional>
#include <vector>

#include "k3mw/exact/poly.hpp"
#include "k3mw/exact/rational.hpp"

namespace k3mw {

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct EllipticCurveQ {
  BigRational a1, a2, a3, a4, a6;

  /// Throws MathError("singular curve") when the discriminant vanishes.
  void validate() const;

  BigRational c4() const;
  BigRational c6() const;
  BigRational discriminant() const;

  /// y^2 = x^3 - 27 c4 x - 54 c6.
  EllipticCurveQ short_model() const;

  static EllipticCurveQ short_form(BigRational a, BigRational b);
  friend bool operator==(const EllipticCurveQ&, const EllipticCurveQ&) = default;
};

BigRational ec_j_invariant(const EllipticCurveQ& e);

/// Twist of the short model by d: (A, B) -> (d^2 A, d^3 B).
EllipticCurveQ ec_quadratic_twist(const EllipticCurveQ& e, const BigRational& d);

/// u with (A1, B1) = (u^4 A2, u^6 B2) on short models, when one exists
/// over Q.
std::optional<BigRational> ec_isomorphism_scale(const EllipticCurveQ& e1, const EllipticCurveQ& e2);

/// Affine or infinite point on a short model y^2 = x^3 + A x + B.
struct EcPoint {
  bool infinity = true;
  BigRational x, y;
  friend bool operator==(const EcPoint&, const EcPoint&) = default;
};

EcPoint ec_add(const EllipticCurveQ& shortm, const EcPoint& p, const EcPoint& q);
EcPoint ec_multiply(const EllipticCurveQ& shortm, const EcPoint& p, long k);

/// x-only division polynomial f_n of y^2 = x^3 + A x + B with psi_n = f_n
/// for odd n and psi_n = y f_n for even n.
UniPoly division_polynomial(const BigRational& A, const BigRational& B, long n);

/// Rational points of exact order n on the short model, n in 2..12.
std::vector<EcPoint> rational_points_of_order(const EllipticCurveQ& e, long n);

/// Whether E(Q) has a point of order n; n in 2..6.
bool has_rational_n_torsion(const EllipticCurveQ& e, long n);

}  // namespace k3mw
