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
#include <string>

#include "k3mw/exact/ratfunc.hpp"

namespace k3mw {

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q(t).
struct WeierstrassSurface {
  RationalFunction a1;
  RationalFunction a2;
  RationalFunction a3;
  RationalFunction a4;
  RationalFunction a6;

  /// y^2 = x^3 + a2 x^2 + a4 x + a6.
  static WeierstrassSurface from_a246(RationalFunction a2, RationalFunction a4, RationalFunction a6);
  /// y^2 = x^3 + a4 x + a6.
  static WeierstrassSurface short_form(RationalFunction a4, RationalFunction a6);

  bool is_three_term() const { return a1.is_zero() && a3.is_zero(); }
  /// "y^2 + ... = x^3 + ..." in the variable t.
  std::string str() const;

  friend bool operator==(const WeierstrassSurface&, const WeierstrassSurface&) = default;
};

struct WeierstrassQuantities {
  RationalFunction b2, b4, b6, b8;
  RationalFunction c4, c6, disc;
};

/// Standard b-, c- and discriminant quantities, 1728 disc = c4^3 - c6^2.
/// Throws MathError("singular equation") when disc vanishes identically.
WeierstrassQuantities c4_c6_disc(const WeierstrassSurface& s);

/// c4^3 / disc, so that y^2 = x^3 + x has j = 1728.
RationalFunction j_invariant(const WeierstrassSurface& s);

/// t -> t^n in every coefficient; throws MathError for n = 0.
WeierstrassSurface base_change(const WeierstrassSurface& s, long n);

/// t -> lambda t^e in every coefficient.
WeierstrassSurface substitute(const WeierstrassSurface& s, const BigRational& lambda, long e);

/// (a2, a4, a6) -> (d a2, d^2 a4, d^3 a6); needs a1 = a3 = 0 and d != 0.
WeierstrassSurface quadratic_twist(const WeierstrassSurface& s, const BigRational& d);

/// The model obtained from x = u^2 x', y = u^3 y': a_i -> a_i / u^i.
WeierstrassSurface rescale(const WeierstrassSurface& s, const RationalFunction& u);

/// Result of a successful isomorphism search: s2 is isomorphic to s1 after
/// the base substitution s -> mu s^e with s = t^g, followed by the
/// rescaling x -> u^2 x and the quadratic twist by d.
struct IsoMatch {
  BigRational mu;
  long exponent = 1;
  long g = 1;
  /// u^2 as a rational function in t.
  RationalFunction u2;
  /// Squarefree integer twist parameter (1 for none).
  BigInt d;
};

std::string describe(const IsoMatch& m);

/// Searches monomial reparameterizations s -> mu s^(+-1) (s = t^g for the
/// largest g with both surfaces defined over Q(t^g)) together with
/// Weierstrass rescalings and constant quadratic twists.  nullopt means
/// that no match was found, not that none exists.
std::optional<IsoMatch> same_surface_up_to_iso(const WeierstrassSurface& s1, const WeierstrassSurface& s2);

}  // namespace k3mw
