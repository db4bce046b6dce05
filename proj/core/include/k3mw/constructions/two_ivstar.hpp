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

#include "k3mw/ellsurf/surface.hpp"
#include "k3mw/genus2/curve.hpp"

namespace k3mw {

/// Branch points 0, 1, a, b, c (and infinity) of y^2 = x(x-1)(x-a)(x-b)(x-c).
struct HParams {
  BigRational a;
  BigRational b;
  BigRational c;

  /// Throws MathError unless {0, 1, a, b, c} are pairwise distinct.
  void validate() const;
};

struct HCoefficients {
  BigRational A, B1, B2, B3, C1, C2;
};

/// Coefficients of the Jacobian fibration with two IV* fibers
///   Y^2 = X^3 + A X^2 + (B1 T + B2 + B3/T) X + (C1 T + C2/T)^2.
HCoefficients h_coefficients(const HParams& p);

/// H^(n), the base change T = t^n of the fibration above.  Throws
/// MathError unless 1 <= n <= 3.
WeierstrassSurface h_surface(const HParams& p, long n);

/// The fibration in (x1, y1, t1) with I6 fibers at 0 and infinity:
///   y1^2 = x1 (x1^2 + a2(t1) x1 + a4(t1)).
WeierstrassSurface intermediate_fibration(const HParams& p);

/// Carried data of the two neighbor steps, as strings in a, b, c.
struct NeighborStepData {
  std::string section_x;
  std::string section_y;
  std::string parameter_t1;
  std::string parameter_t2;
};

const NeighborStepData& neighbor_step_data();

/// y^2 = x (x - 1) (x - a) (x - b) (x - c).
Genus2Curve genus2_from_hparams(const HParams& p);

}  // namespace k3mw
