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

#include "k3mw/exact/field.hpp"
#include "k3mw/exact/poly.hpp"

namespace k3mw {

/// Element a + b*u of F_p[u]/(u^2 - n).
struct Fp2 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Fp2&, const Fp2&) = default;
};

/// A prime field with an optional quadratic extension F_p[u]/(u^2 - n).
class PrimeFieldCtx {
 public:
  /// Throws MathError unless p is prime.
  explicit PrimeFieldCtx(std::uint64_t p);
  /// Prime field with the extension defined by the non-residue n.
  PrimeFieldCtx(std::uint64_t p, std::uint64_t nonresidue);
  /// Extension by the least quadratic non-residue (p odd).
  static PrimeFieldCtx with_extension(std::uint64_t p);

  std::uint64_t p() const { return field_.p; }
  const PrimeField& base() const { return field_; }
  bool has_extension() const { return n_ != 0; }
  std::uint64_t nonresidue() const { return n_; }
  /// u^2 - n over F_p; throws MathError without an extension.
  FpPoly extension_modulus() const;

  Fp2 embed(std::uint64_t x) const { return {x % p(), 0}; }
  Fp2 add(const Fp2& x, const Fp2& y) const;
  Fp2 mul(const Fp2& x, const Fp2& y) const;
  /// Norm x * conj(x) = a^2 - n b^2 in F_p.
  std::uint64_t norm(const Fp2& x) const;
  /// Quadratic character of F_{p^2} (0 at 0).
  int chi2(const Fp2& x) const;

 private:
  void require_extension() const;

  PrimeField field_;
  std::uint64_t n_ = 0;
};

}  // namespace k3mw
