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

#include <array>
#include <map>
#include <optional>

#include "k3mw/ellsurf/surface.hpp"
#include "k3mw/genus2/curve.hpp"

namespace k3mw {

/// y^2 = x^3 - t^3 (I4/12 t + 1) x + t^5 (I10/4 t^2 + (I2 I4 - 3 I6)/108 t + I2/24).
/// II* at infinity and III* at 0.
WeierstrassSurface shioda_inose_surface(const IgusaClebsch& ic);

/// G^(n): y^2 = x^3 - (I4/12 + 1/t^n) x + (I10/4 t^n + (I2 I4 - 3 I6)/108 + I2/(24 t^n)).
/// Throws MathError unless 1 <= n <= 4.
WeierstrassSurface g_surface(const IgusaClebsch& ic, long n);

/// y^2 = x^3 - 108 t^4 (48 t^2 + I4) x + 108 t^4 (72 I2 t^4 + (4 I4 I2 - 12 I6) t^2 + 27 I10),
/// isomorphic to G^(2) via (x, y, t) -> (t^2 x / 9, t^3 y / 27, 1 / (2t)).
WeierstrassSurface kummer_fibration13(const IgusaClebsch& ic);

/// Applies (x, y, t) -> (t^2 x / 9, t^3 y / 27, 1 / (2t)) to a three-term
/// model and returns the monic-in-y^2 result.
WeierstrassSurface fibration13_to_g2(const WeierstrassSurface& fib13);

/// Homogeneous quartic in (x, y, z, w), keyed by exponent vectors.
struct HomogeneousQuartic {
  using Exponents = std::array<int, 4>;
  std::map<Exponents, BigRational> terms;

  /// True when every monomial has total degree 4.
  bool is_homogeneous() const;
};

/// y^2 z w - x^3 z + (I4/12 w + z) x z w - (I10/4 w^2 + I2/24 z^2) w^2
///   - ((I2 I4 - 3 I6)/108) z w^3.
HomogeneousQuartic inose_quartic(const IgusaClebsch& ic);

/// x -> t^i x, y -> t^j y, (z, w) -> (1, t) carrying the quartic onto a
/// Weierstrass model (after division by the y^2 coefficient).
struct QuarticChart {
  int i = 0;
  int j = 0;
  /// The y^2 coefficient that was divided out.
  RationalFunction multiplier;
  WeierstrassSurface surface;
};

/// Searches i, j in [-bound, bound] for a chart giving exactly `target`.
std::optional<QuarticChart> find_quartic_chart(const HomogeneousQuartic& q, const WeierstrassSurface& target,
                                               int bound = 3);

}  // namespace k3mw
