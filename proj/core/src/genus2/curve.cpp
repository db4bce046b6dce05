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

#include <array>
#include <cstdint>

#include "k3mw/error.hpp"
#include "k3mw/exact/poly_algorithms.hpp"
#include "k3mw/genus2/curve.hpp"

namespace k3mw {

namespace {

template <std::size_t Deg>
struct Term {
  long coef;
  std::array<std::uint8_t, Deg> idx;
};

#include "igusa_clebsch_terms.inc"

template <std::size_t Deg, std::size_t N>
BigRational evaluate(const std::array<Term<Deg>, N>& terms, const std::array<BigRational, 7>& f) {
  BigRational sum = 0;
  for (const auto& term : terms) {
    BigRational prod = term.coef;
    for (auto i : term.idx) prod *= f[i];
    sum += prod;
  }
  return sum;
}

}  // namespace

Genus2Curve::Genus2Curve(UniPoly f) : f_(std::move(f)) {
  if (f_.degree() != 5 && f_.degree() != 6)
    throw MathError("not a genus-2 curve: degree " + std::to_string(f_.degree()) + " is not 5 or 6");
  if (poly_gcd(f_, f_.derivative()).degree() != 0) throw MathError("not a genus-2 curve: f is not squarefree");
}

IgusaClebsch igusa_clebsch(const Genus2Curve& curve) {
  std::array<BigRational, 7> f;
  for (std::size_t i = 0; i < 7; ++i) f[i] = curve.coefficient(i);
  IgusaClebsch ic;
  ic.I2 = evaluate(kI2Terms, f);
  ic.I4 = evaluate(kI4Terms, f);
  ic.I6 = evaluate(kI6Terms, f);
  ic.I10 = discriminant(curve.f());
  if (curve.degree() == 5) ic.I10 *= f[5] * f[5];
  return ic;
}

}  // namespace k3mw
