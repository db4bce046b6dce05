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
#include <vector>

#include "k3mw/exact/poly.hpp"

namespace k3mw {

enum class GaloisClass { kReducible, kS4, kA4, kD4, kC4, kV4 };

std::string to_string(GaloisClass c);

/// Intermediate data of the quartic Galois computation.
struct QuarticGaloisReport {
  GaloisClass galois = GaloisClass::kReducible;
  UniPoly resolvent;
  std::vector<BigRational> resolvent_roots;
  BigRational discriminant;
  /// A rational root or monic quadratic factor when reducible.
  std::optional<UniPoly> factor;
};

/// Galois group of a monic rational quartic.  Throws MathError for other
/// degrees or a non-monic input.
QuarticGaloisReport analyze_quartic(const UniPoly& q);
GaloisClass quartic_galois_class(const UniPoly& q);

/// x^3 - b x^2 + (ac - 4d) x - (a^2 d - 4 b d + c^2) for x^4 + a x^3 + b x^2 + c x + d.
UniPoly resolvent_cubic(const UniPoly& q);

}  // namespace k3mw
