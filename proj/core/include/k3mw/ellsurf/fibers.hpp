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

#include "k3mw/ellsurf/surface.hpp"
#include "k3mw/exact/poly.hpp"

namespace k3mw {

/// A closed point of the base line: a rational value of t, t = infinity,
/// or a bundle of conjugate points given by a monic squarefree polynomial
/// of degree >= 2 without rational roots.
struct Place {
  enum class Kind { kRational, kInfinity, kCluster };
  Kind kind = Kind::kRational;
  BigRational value;
  UniPoly cluster;

  static Place rational(BigRational r) { return {Kind::kRational, std::move(r), UniPoly()}; }
  static Place infinity() { return {Kind::kInfinity, BigRational(0), UniPoly()}; }
  static Place bundle(UniPoly q) { return {Kind::kCluster, BigRational(0), std::move(q)}; }

  /// Number of geometric points.
  long degree() const { return kind == Kind::kCluster ? cluster.degree() : 1; }
  std::string str(const std::string& var = "t") const;
};

enum class KodairaKind { kIn, kInStar, kII, kIII, kIV, kIVStar, kIIIStar, kIIStar };

struct KodairaType {
  KodairaKind kind = KodairaKind::kIn;
  /// n for I_n and I_n*; 0 otherwise.
  int n = 0;

  /// Components of the fiber (m_P).
  int components() const;
  int euler() const;
  /// "I6", "I0*", "IV*", ...
  std::string name() const;
  /// Inverse of name(); throws ParseError.
  static KodairaType parse(const std::string& name);

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// Minimal-model Kodaira type from the valuations of c4, c6 and the
/// discriminant of any (not necessarily minimal or integral) model, in
/// residue characteristic 0.  nullopt for v4 or v6 means the quantity
/// vanishes identically.  Returns nullopt for a smooth fiber.
std::optional<KodairaType> kodaira_from_valuations(std::optional<long> v4, std::optional<long> v6, long vdisc);

struct KodairaFiber {
  KodairaType type;
  Place place;
  /// Geometric points bundled by the place.
  long count = 1;
  int components = 1;
  int euler = 0;
};

struct FiberConfiguration {
  std::vector<KodairaFiber> fibers;
  long euler_total = 0;

  /// Sum of (m_P - 1) over all geometric fibers.
  long reducible_correction() const;
  /// Total number of geometric fibers of the given type.
  long count(const KodairaType& t) const;
  /// Compact "IV* + I0* + 10 I1" form, in classification order.
  std::string summary() const;
};

/// Singular fibers of the Kodaira-Neron model, ordered by place: rational
/// places ascending, clusters by degree then coefficients, infinity last.
FiberConfiguration classify_fibers(const WeierstrassSurface& s);

/// Euler number 24.
bool is_k3(const FiberConfiguration& cfg);

/// rho_NS - 2 - sum (m_P - 1); throws MathError("inconsistent Picard
/// input") when negative and MathError when rho_NS < 2.
long shioda_tate_rank(const FiberConfiguration& cfg, long rho_NS);

/// k in "rank = k + rho" when rho_NS = 16 + rho.
long rank_offset(const FiberConfiguration& cfg);
/// "rho-1", "4+rho", ...
std::string rank_formula(const FiberConfiguration& cfg);

}  // namespace k3mw
