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
#include <vector>

#include "k3mw/genus2/curve.hpp"
#include "k3mw/genus2/galois.hpp"
#include "k3mw/genus2/point_count.hpp"

namespace k3mw {

/// First prime whose Frobenius quartic has Galois group D4; primes of bad
/// reduction are skipped.  nullopt means inconclusive.
std::optional<std::uint64_t> certify_simple(const Genus2Curve& curve, const std::vector<std::uint64_t>& primes);

/// The minimal polynomial x^2 - a1 x + (a2 - 2p) of alpha + p/alpha.
struct RealWeilQuadratic {
  UniPoly quadratic;
  BigInt discriminant;
  /// Squarefree kernel of the discriminant.
  BigInt kernel;
  /// The kernel is 0 or 1, so no real quadratic field is generated.
  bool degenerate = false;
};

RealWeilQuadratic real_weil_quadratic(const WeilPolynomial& w);

struct PrimeRecord {
  std::uint64_t p = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  WeilPolynomial weil;
  QuarticGaloisReport galois;
  RealWeilQuadratic real_quadratic;
};

/// Disjointness evidence for a pair of primes.
struct DisjointnessWitness {
  enum class Route { kResultantIrreducible, kSubfieldKernels };
  Route route = Route::kSubfieldKernels;
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  /// Prime modulo which the evidence was found.
  std::uint64_t ell = 0;
  /// Degree-16 composed-sum resultant (resultant route).
  UniPoly resultant;
  /// Factorization degree patterns mod ell (subfield route).
  std::vector<unsigned> pattern1;
  std::vector<unsigned> pattern2;
};

std::string to_string(DisjointnessWitness::Route r);

struct PicardCertificate {
  UniPoly curve;
  std::vector<std::uint64_t> primes_requested;
  std::vector<std::uint64_t> primes_used;
  /// (prime, reason) for discarded primes.
  std::vector<std::pair<std::uint64_t, std::string>> primes_rejected;
  std::vector<PrimeRecord> records;
  std::optional<std::uint64_t> simplicity_witness;
  std::optional<DisjointnessWitness> disjointness;
  /// Largest prime tried by the resultant route.
  std::uint64_t resultant_route_bound = 1000;
  bool resultant_route_succeeded = false;
  /// 1 when certified, nullopt for inconclusive.
  std::optional<int> rho;
  std::string summary;
};

/// Certifies rho(J(C)) = 1 from Frobenius data at two or more primes.
/// Throws MathError when fewer than two distinct primes of good reduction
/// are supplied.
PicardCertificate certify_picard_one(const Genus2Curve& curve, const std::vector<std::uint64_t>& primes);

enum class EndomorphismClass {
  kSimpleRational,
  kSimpleRealQuadratic,
  kSimpleQuaternion,
  kSimpleCmQuartic,
  kSplitNonIsogenous,
  kSplitIsogenousNoCm,
  kSplitIsogenousCm,
};

/// Accepts "simple-Q", "simple-real-quadratic", "simple-quaternion",
/// "simple-CM-quartic", "split-nonisogenous", "split-isogenous-noCM",
/// "split-isogenous-CM"; throws MathError otherwise.
EndomorphismClass parse_endomorphism_class(const std::string& name);
std::string to_string(EndomorphismClass c);

/// Picard number of an abelian surface over an algebraically closed field
/// of characteristic 0 with the given endomorphism class.
int picard_from_endomorphism_class(EndomorphismClass c);

}  // namespace k3mw
