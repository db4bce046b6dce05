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
#include <string>

#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"
#include "k3mw/exact/rational.hpp"

namespace k3mw {

// Coefficient fields for Poly<Field>.  A field value is carried inside
// every polynomial so the prime-field modulus travels with the data.

struct RationalField {
  using Elem = BigRational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw MathError("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  std::uint64_t characteristic() const { return 0; }
  std::string str(const Elem& a) const { return to_string(a); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// F_p for an odd or even prime p < 2^63.
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<Elem>(r < 0 ? r + static_cast<long>(p) : r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw MathError("division by zero in F_" + std::to_string(p));
    return mod_inverse(a, p);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::uint64_t characteristic() const { return p; }
  std::string str(Elem a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

}  // namespace k3mw
