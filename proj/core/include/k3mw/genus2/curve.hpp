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

#include "k3mw/exact/poly.hpp"
#include "k3mw/exact/rational.hpp"

namespace k3mw {

/// The genus-2 curve y^2 = f(x), deg f in {5, 6}, f squarefree.
class Genus2Curve {
 public:
  /// Throws MathError("not a genus-2 curve: ...") on invalid f.
  explicit Genus2Curve(UniPoly f);

  const UniPoly& f() const { return f_; }
  long degree() const { return f_.degree(); }
  /// f_i for 0 <= i <= 6 (f_6 = 0 for quintics).
  BigRational coefficient(std::size_t i) const { return f_[i]; }

 private:
  UniPoly f_;
};

struct IgusaClebsch {
  BigRational I2;
  BigRational I4;
  BigRational I6;
  BigRational I10;
  friend bool operator==(const IgusaClebsch&, const IgusaClebsch&) = default;
};

/// Igusa-Clebsch invariants of the binary sextic attached to f, in the
/// classical root-difference normalization:
///   I2  = f6^2  sum_15 (12)^2 (34)^2 (56)^2
///   I4  = f6^4  sum_10 (12)^2 (23)^2 (31)^2 (45)^2 (56)^2 (64)^2
///   I6  = f6^6  sum_60 (12)^2 (23)^2 (31)^2 (45)^2 (56)^2 (64)^2 (14)^2 (25)^2 (36)^2
///   I10 = f6^10 prod_{i<j} (ij)^2
/// A quintic is read as a sextic with a root at infinity.
IgusaClebsch igusa_clebsch(const Genus2Curve& curve);

}  // namespace k3mw
