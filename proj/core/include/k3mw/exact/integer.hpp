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
#include <utility>
#include <vector>

#include "k3mw/exact/rational.hpp"

namespace k3mw {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t mod);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod);

/// Legendre symbol for odd prime p: 0, 1 or -1.
int legendre(std::uint64_t a, std::uint64_t p);

std::uint64_t least_nonresidue(std::uint64_t p);

/// Odd primes in [lo, hi).
std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi);

/// Prime factorization of |n| (n != 0): ascending primes with exponents.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// All positive divisors of |n|, ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

}  // namespace k3mw
