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

#include "k3mw/genus2/galois.hpp"

#include <algorithm>

#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

std::string to_string(GaloisClass c) {
  switch (c) {
    case GaloisClass::kReducible: return "reducible";
    case GaloisClass::kS4: return "S4";
    case GaloisClass::kA4: return "A4";
    case GaloisClass::kD4: return "D4";
    case GaloisClass::kC4: return "C4";
    case GaloisClass::kV4: return "V4";
  }
  throw InternalError("unknown Galois class");
}

UniPoly resolvent_cubic(const UniPoly& q) {
  const BigRational a = q[3], b = q[2], c = q[1], d = q[0];
  return UniPoly{BigRational(-(a * a * d - 4 * b * d + c * c)), BigRational(a * c - 4 * d), BigRational(-b),
                 BigRational(1)};
}

namespace {

// Monic integer quadratic factor of a monic integer quartic without
// rational roots, by running over the factorizations of the constant term.
std::optional<UniPoly> quadratic_factor(const UniPoly& q) {
  const BigInt p3 = q[3].get_num(), p2 = q[2].get_num(), p1 = q[1].get_num(), p0 = q[0].get_num();
  for (const auto& div : positive_divisors(p0)) {
    for (int sign : {1, -1}) {
      BigInt b = sign * div;
      BigInt d = p0 / b;
      std::vector<BigInt> candidates;
      if (b != d) {
        BigInt num = p1 - b * p3;
        BigInt den = d - b;
        if (num % den != 0) continue;
        candidates.push_back(num / den);
      } else {
        if (p1 != b * p3) continue;
        // a + c = p3, a c = p2 - 2b: a is an integer root of y^2 - p3 y + (p2 - 2b).
        BigInt disc = p3 * p3 - 4 * (p2 - 2 * b);
        if (disc < 0) continue;
        BigInt s = sqrt(disc);
        if (s * s != disc || (p3 + s) % 2 != 0) continue;
        candidates.push_back((p3 + s) / 2);
      }
      for (const auto& a : candidates) {
        BigInt c = p3 - a;
        if (b + d + a * c == p2 && a * d + b * c == p1)
          return UniPoly{BigRational(b), BigRational(a), BigRational(1)};
      }
    }
  }
  return std::nullopt;
}

bool square_in_quadratic_field(const BigRational& e, const BigRational& disc) {
  return sgn(e) == 0 || is_square(e) || is_square(BigRational(e * disc));
}

}  // namespace

QuarticGaloisReport analyze_quartic(const UniPoly& input) {
  if (input.degree() != 4) throw MathError("quartic_galois_class needs a degree-4 polynomial");
  if (input.leading() != 1) throw MathError("quartic_galois_class needs a monic polynomial");

  // y = D x turns the quartic into a monic integer one with the same field.
  BigInt D = 1;
  for (const auto& c : input.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigRational> scaled(5);
  BigRational power = 1;
  for (std::size_t i = 5; i-- > 0;) {
    scaled[i] = input[i] * power;
    power *= D;
  }
  UniPoly q(RationalField{}, std::move(scaled));

  QuarticGaloisReport report;
  report.discriminant = discriminant(input);
  report.resolvent = resolvent_cubic(input);
  auto roots = rational_roots(report.resolvent);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  report.resolvent_roots = roots;

  if (auto lin = rational_roots(input); !lin.empty()) {
    report.factor = UniPoly{BigRational(-lin.front()), BigRational(1)};
    return report;
  }
  if (auto quad = quadratic_factor(q)) {
    // Undo the scaling: x^2 + a x + b in y gives x^2 + (a/D) x + b/D^2.
    BigRational d(D);
    report.factor = UniPoly{BigRational((*quad)[0] / (d * d)), BigRational((*quad)[1] / d), BigRational(1)};
    return report;
  }

  const BigRational& disc = report.discriminant;
  if (roots.size() == 3) {
    report.galois = GaloisClass::kV4;
  } else if (roots.empty()) {
    report.galois = is_square(disc) ? GaloisClass::kA4 : GaloisClass::kS4;
  } else {
    // Kappe-Warren: C4 iff (x^2 - r x + d)(x^2 + a x + (b - r)) splits over
    // Q(sqrt(disc)).
    const BigRational& r = roots.front();
    BigRational e1 = input[3] * input[3] - 4 * (input[2] - r);
    BigRational e2 = r * r - 4 * input[0];
    bool cyclic = square_in_quadratic_field(e1, disc) && square_in_quadratic_field(e2, disc);
    report.galois = cyclic ? GaloisClass::kC4 : GaloisClass::kD4;
  }
  return report;
}

GaloisClass quartic_galois_class(const UniPoly& q) { return analyze_quartic(q).galois; }

}  // namespace k3mw
