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

#include <cstdint>
#include <optional>
#include <string>

#include "k3mw/exact/prime_field.hpp"
#include "k3mw/genus2/curve.hpp"

namespace k3mw {

/// Largest field size accepted by count_points.
inline constexpr std::uint64_t kMaxCountingFieldSize = std::uint64_t{1} << 22;

/// Reason the curve has bad reduction at p, or nullopt when the reduction
/// is good.  p = 2 is always reported as unsupported.
std::optional<std::string> bad_reduction_reason(const Genus2Curve& curve, std::uint64_t p);

/// Points of the smooth projective model over F_p (extension_degree 1) or
/// F_{p^2} (extension_degree 2, which needs ctx.has_extension()).
std::uint64_t count_points(const Genus2Curve& curve, const PrimeFieldCtx& ctx, int extension_degree);

/// x^4 - a1 x^3 + a2 x^2 - p a1 x + p^2.
struct WeilPolynomial {
  std::uint64_t p = 0;
  long a1 = 0;
  long a2 = 0;

  UniPoly poly() const;
  friend bool operator==(const WeilPolynomial&, const WeilPolynomial&) = default;
};

struct FrobeniusData {
  WeilPolynomial weil;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
};

FrobeniusData frobenius_data(const Genus2Curve& curve, std::uint64_t p);
WeilPolynomial frobenius_charpoly(const Genus2Curve& curve, std::uint64_t p);

}  // namespace k3mw
