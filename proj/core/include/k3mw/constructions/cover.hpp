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

#include <string>

#include "k3mw/constructions/elliptic_curve.hpp"
#include "k3mw/exact/ratfunc.hpp"
#include "k3mw/genus2/curve.hpp"

namespace k3mw {

/// (x, y) -> (X(x), Y(x) y) from a hyperelliptic curve to an elliptic curve.
struct CoverMap {
  RationalFunction x_map;
  RationalFunction y_factor;
};

/// Residue of the elliptic-curve equation after substitution and
/// reduction by y^2 = f(x): even + odd * y.
struct CoverCheck {
  bool ok = false;
  long degree = 0;
  RationalFunction residue_even;
  RationalFunction residue_odd;

  std::string describe() const;
};

/// Requires a nonzero y_factor.  On success degree = max(deg num X, deg den X).
CoverCheck verify_cover(const Genus2Curve& c, const EllipticCurveQ& e, const CoverMap& m);

}  // namespace k3mw
