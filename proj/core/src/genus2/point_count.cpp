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

#include "k3mw/genus2/point_count.hpp"

#include <vector>

#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

std::optional<std::string> bad_reduction_reason(const Genus2Curve& curve, std::uint64_t p) {
  const std::string at = " at p = " + std::to_string(p);
  if (p == 2) return "p = 2 is unsupported";
  if (!is_prime(p)) return std::to_string(p) + " is not prime";
  for (const auto& c : curve.f().coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return "p divides a coefficient denominator" + at;
  FpPoly fbar = reduce_mod(curve.f(), p);
  if (fbar.degree() != curve.degree()) return "leading coefficient vanishes" + at;
  if (poly_gcd(fbar, fbar.derivative()).degree() != 0) return "discriminant vanishes" + at;
  return std::nullopt;
}

namespace {

void require_good(const Genus2Curve& curve, std::uint64_t p) {
  if (auto reason = bad_reduction_reason(curve, p)) throw MathError("bad reduction: " + *reason);
}

}  // namespace

std::uint64_t count_points(const Genus2Curve& curve, const PrimeFieldCtx& ctx, int extension_degree) {
  const std::uint64_t p = ctx.p();
  if (extension_degree != 1 && extension_degree != 2) throw MathError("extension degree must be 1 or 2");
  require_good(curve, p);
  const std::uint64_t q = extension_degree == 1 ? p : p * p;
  if (q > kMaxCountingFieldSize) throw MathError("field of size " + std::to_string(q) + " exceeds the counting cap");

  const PrimeField& f = ctx.base();
  FpPoly fbar = reduce_mod(curve.f(), p);
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) chi[f.mul(x, x)] = 1;

  std::uint64_t affine = 0;
  auto tally = [&affine](int c) { affine += static_cast<std::uint64_t>(1 + c); };
  std::uint64_t infinity = 0;
  if (extension_degree == 1) {
    for (std::uint64_t x = 0; x < p; ++x) tally(chi[fbar.eval(x)]);
    if (curve.degree() == 5) {
      infinity = 1;
    } else {
      infinity = chi[fbar.leading()] == 1 ? 2 : 0;
    }
  } else {
    if (!ctx.has_extension()) throw MathError("counting over F_{p^2} needs an extension context");
    const auto coeffs = fbar.coeffs();
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        Fp2 x{a, b};
        Fp2 acc{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), ctx.embed(*it));
        tally(chi[ctx.norm(acc)]);
      }
    }
    // Every element of F_p is a square in F_{p^2}.
    infinity = curve.degree() == 5 ? 1 : 2;
  }
  return affine + infinity;
}

UniPoly WeilPolynomial::poly() const {
  const BigInt P(static_cast<unsigned long>(p));
  std::vector<BigRational> c{BigRational(P * P), BigRational(-P * a1), BigRational(a2), BigRational(-a1),
                             BigRational(1)};
  return UniPoly(RationalField{}, std::move(c));
}

FrobeniusData frobenius_data(const Genus2Curve& curve, std::uint64_t p) {
  require_good(curve, p);
  FrobeniusData d;
  d.n1 = count_points(curve, PrimeFieldCtx(p), 1);
  d.n2 = count_points(curve, PrimeFieldCtx::with_extension(p), 2);
  const auto P = static_cast<long>(p);
  long a1 = P + 1 - static_cast<long>(d.n1);
  long s2 = P * P + 1 - static_cast<long>(d.n2);
  long twice_a2 = a1 * a1 - s2;
  if (twice_a2 % 2 != 0) throw InternalError("non-integral a2 from point counts");
  d.weil = WeilPolynomial{p, a1, twice_a2 / 2};
  return d;
}

WeilPolynomial frobenius_charpoly(const Genus2Curve& curve, std::uint64_t p) { return frobenius_data(curve, p).weil; }

}  // namespace k3mw
