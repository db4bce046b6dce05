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

#include "k3mw/constructions/cover.hpp"

#include <algorithm>

#include "k3mw/error.hpp"

namespace k3mw {

std::string CoverCheck::describe() const {
  if (ok) return "cover verified, degree " + std::to_string(degree);
  return "cover fails: residue " + residue_even.str("x") + " + (" + residue_odd.str("x") + ")*y";
}

CoverCheck verify_cover(const Genus2Curve& c, const EllipticCurveQ& e, const CoverMap& m) {
  if (m.x_map.is_zero() || m.y_factor.is_zero()) throw MathError("cover map components must be nonzero");
  using RF = RationalFunction;
  const RF& X = m.x_map;
  const RF& r = m.y_factor;
  // Y = r y with y^2 = f(x).
  RF even = r * r * RF(c.f()) - (X * X * X + RF(e.a2) * X * X + RF(e.a4) * X + RF(e.a6));
  RF odd = (RF(e.a1) * X + RF(e.a3)) * r;
  CoverCheck out;
  out.residue_even = even;
  out.residue_odd = odd;
  out.ok = even.is_zero() && odd.is_zero();
  if (out.ok) out.degree = std::max(X.num().degree(), X.den().degree());
  return out;
}

}  // namespace k3mw
