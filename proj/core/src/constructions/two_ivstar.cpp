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

#include "k3mw/constructions/two_ivstar.hpp"

#include <array>

#include "k3mw/error.hpp"

namespace k3mw {

namespace {

using RF = RationalFunction;
using Q = BigRational;

Q pw(const Q& x, long e) { return pow(x, e); }

}  // namespace

void HParams::validate() const {
  const std::array<Q, 5> pts{Q(0), Q(1), a, b, c};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw MathError("degenerate parameters: 0, 1, a, b, c must be distinct (a = " + to_string(a) +
                        ", b = " + to_string(b) + ", c = " + to_string(c) + ")");
}

HCoefficients h_coefficients(const HParams& p) {
  p.validate();
  const Q &a = p.a, &b = p.b, &c = p.c;
  const Q a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  const Q b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const Q c2 = c * c, c3 = c2 * c, c4 = c3 * c;

  HCoefficients h;
  h.A = 4 * (a * b * c2 + b * c2 - 2 * a * c2 + a * b2 * c - 2 * b2 * c - 2 * a2 * b * c + b * c + 4 * a2 * c -
             2 * a * c + a * b2 - 2 * a2 * b + a * b);
  h.B1 = (a - 1) * c - a * (b - 1);
  Q bracket = a * b2 * c4 - a2 * b * c4 - a * b * c4 + a2 * c4 + a2 * b3 * c3 - a * b3 * c3 - b3 * c3 -
              a3 * b2 * c3 + 2 * a2 * b2 * c3 - 2 * a * b2 * c3 + b2 * c3 + a2 * b * c3 + 2 * a * b * c3 -
              2 * a2 * c3 - a * b4 * c2 + b4 * c2 - a3 * b3 * c2 - 2 * a2 * b3 * c2 + 6 * a * b3 * c2 - b3 * c2 +
              a4 * b2 * c2 + a3 * b2 * c2 - 3 * a2 * b2 * c2 - 2 * a * b2 * c2 + a2 * b * c2 - a * b * c2 +
              a2 * c2 + a2 * b4 * c - a * b4 * c + 2 * a3 * b3 * c - 2 * a2 * b3 * c - a * b3 * c -
              2 * a4 * b2 * c + a3 * b2 * c + 2 * a2 * b2 * c + a * b2 * c - a2 * b * c - a3 * b3 + a2 * b3 +
              a4 * b2 - a3 * b2;
  h.B2 = -16 * bracket;
  h.C1 = 1;
  h.C2 = a * b2 * c * (a - 1) * (b - 1) * pw(c - 1, 2) * (a - b) * (b - c) * (c - a);
  h.B3 = -h.C2 * h.B1;
  return h;
}

WeierstrassSurface h_surface(const HParams& p, long n) {
  if (n < 1 || n > 3) throw MathError("H^(n) is K3 only for n <= 3 (n must be 1..3, got " + std::to_string(n) + ")");
  HCoefficients h = h_coefficients(p);
  RF a4 = RF::monomial(h.B1, n) + RF(h.B2) + RF::monomial(h.B3, -n);
  RF a6 = (RF::monomial(h.C1, n) + RF::monomial(h.C2, -n)).pow(2);
  return WeierstrassSurface::from_a246(RF(h.A), a4, a6);
}

WeierstrassSurface intermediate_fibration(const HParams& p) {
  p.validate();
  const Q &a = p.a, &b = p.b, &c = p.c;
  Q t2 = (3 * b * b * c * c - a * b * c * c - 4 * b * c * c + 2 * a * c * c - 4 * a * b * b * c - b * b * c +
          2 * a * a * b * c + 3 * a * b * c + 2 * b * c - 4 * a * a * c + 2 * a * c + 2 * a * b * b + 2 * a * a * b -
          4 * a * b) /
         2;
  UniPoly quad_x({b * b * pw(b - a, 2) * c * c * pw(c - 1, 2), 2 * (b - 1) * b * (b - a) * (c - 1) * c * (c - a), t2,
                  (b - 1) * (c - a) / 2, Q(1, 16)});
  Q lead = -(a - 1) * a * (b - 1) * (c - a) * (c - b) / 2;
  UniPoly lin_x = UniPoly({Q(0), Q(0), Q(0), lead}) * UniPoly({2 * b * c - 2 * b, Q(1)}) *
                  UniPoly({2 * b * c - 2 * a * c, Q(1)});
  return WeierstrassSurface::from_a246(RF(quad_x), RF(lin_x), RF());
}

const NeighborStepData& neighbor_step_data() {
  static const NeighborStepData data{
      "-4(a-1)(b-1) t (t-c) (c t - a b)",
      "-8(a-1)(b-1)(c-a)(c-b) t^2 (t - a b)(t - c)",
      "((y + y_s)/(x - x_s) - 2a(b-1)(c-a)) / (t - a)",
      "x1 / (t1 + 2(b-a)c)",
  };
  return data;
}

Genus2Curve genus2_from_hparams(const HParams& p) {
  p.validate();
  UniPoly f({Q(0), Q(1)});
  for (const Q& r : {Q(1), p.a, p.b, p.c}) f = f * UniPoly({Q(-r), Q(1)});
  return Genus2Curve(f);
}

}  // namespace k3mw
