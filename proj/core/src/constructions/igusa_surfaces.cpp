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

#include "k3mw/constructions/igusa_surfaces.hpp"

#include <utility>

#include "k3mw/error.hpp"

namespace k3mw {

namespace {

using RF = RationalFunction;

RF mono(const BigRational& c, long k) { return RF::monomial(c, k); }

BigRational mixed_term(const IgusaClebsch& ic) { return BigRational((ic.I2 * ic.I4 - 3 * ic.I6) / 108); }

}  // namespace

WeierstrassSurface shioda_inose_surface(const IgusaClebsch& ic) {
  RF a4 = -(mono(BigRational(ic.I4 / 12), 4) + mono(BigRational(1), 3));
  RF a6 = mono(BigRational(ic.I10 / 4), 7) + mono(mixed_term(ic), 6) + mono(BigRational(ic.I2 / 24), 5);
  return WeierstrassSurface::short_form(a4, a6);
}

WeierstrassSurface g_surface(const IgusaClebsch& ic, long n) {
  if (n < 1 || n > 4) throw MathError("G^(n) is K3 only for n <= 4 (n must be 1..4, got " + std::to_string(n) + ")");
  RF a4 = -(RF(BigRational(ic.I4 / 12)) + mono(BigRational(1), -n));
  RF a6 = mono(BigRational(ic.I10 / 4), n) + RF(mixed_term(ic)) + mono(BigRational(ic.I2 / 24), -n);
  return WeierstrassSurface::short_form(a4, a6);
}

WeierstrassSurface kummer_fibration13(const IgusaClebsch& ic) {
  RF a4 = mono(BigRational(-108 * 48), 6) + mono(BigRational(-108 * ic.I4), 4);
  RF a6 = mono(BigRational(108 * 72 * ic.I2), 8) + mono(BigRational(108 * (4 * ic.I4 * ic.I2 - 12 * ic.I6)), 6) +
          mono(BigRational(108 * 27 * ic.I10), 4);
  return WeierstrassSurface::short_form(a4, a6);
}

WeierstrassSurface fibration13_to_g2(const WeierstrassSurface& fib13) {
  if (!fib13.a1.is_zero() || !fib13.a2.is_zero() || !fib13.a3.is_zero())
    throw MathError("fibration13_to_g2 expects a short Weierstrass model");
  // X = 9 x / t^2, Y = 27 y / t^3, T = 1 / (2t).
  RF tau = mono(BigRational(1, 2), -1);
  RF a4 = fib13.a4.compose(tau) * mono(BigRational(1, 81), 4);
  RF a6 = fib13.a6.compose(tau) * mono(BigRational(1, 729), 6);
  return WeierstrassSurface::short_form(a4, a6);
}

bool HomogeneousQuartic::is_homogeneous() const {
  for (const auto& [e, c] : terms)
    if (e[0] + e[1] + e[2] + e[3] != 4) return false;
  return true;
}

HomogeneousQuartic inose_quartic(const IgusaClebsch& ic) {
  HomogeneousQuartic q;
  auto add = [&](HomogeneousQuartic::Exponents e, const BigRational& c) {
    auto& slot = q.terms[e];
    slot += c;
    if (slot == 0) q.terms.erase(e);
  };
  add({0, 2, 1, 1}, BigRational(1));
  add({3, 0, 1, 0}, BigRational(-1));
  add({1, 0, 1, 2}, BigRational(ic.I4 / 12));
  add({1, 0, 2, 1}, BigRational(1));
  add({0, 0, 0, 4}, BigRational(-ic.I10 / 4));
  add({0, 0, 2, 2}, BigRational(-ic.I2 / 24));
  add({0, 0, 1, 3}, BigRational(-mixed_term(ic)));
  return q;
}

std::optional<QuarticChart> find_quartic_chart(const HomogeneousQuartic& q, const WeierstrassSurface& target,
                                               int bound) {
  for (int i = -bound; i <= bound; ++i) {
    for (int j = -bound; j <= bound; ++j) {
      std::map<std::pair<int, int>, RF> coeff;
      for (const auto& [e, c] : q.terms) coeff[{e[0], e[1]}] += mono(c, i * e[0] + j * e[1] + e[3]);
      const std::pair<int, int> allowed[] = {{0, 2}, {1, 1}, {0, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}};
      bool shape = true;
      for (const auto& [k, v] : coeff) {
        if (v.is_zero()) continue;
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == k;
        shape = shape && ok;
      }
      RF m = coeff[{0, 2}];
      if (!shape || m.is_zero() || !(coeff[{3, 0}] == -m)) continue;
      WeierstrassSurface s{coeff[{1, 1}] / m, -coeff[{2, 0}] / m, coeff[{0, 1}] / m, -coeff[{1, 0}] / m,
                           -coeff[{0, 0}] / m};
      if (s == target) return QuarticChart{i, j, m, s};
    }
  }
  return std::nullopt;
}

}  // namespace k3mw
