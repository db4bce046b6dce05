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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace k3mw {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (whitespace around the value is ignored).
/// The result is in lowest terms with a positive denominator.
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

BigRational make_rational(const BigInt& num, const BigInt& den);

inline BigInt numerator(const BigRational& q) { return q.get_num(); }
inline BigInt denominator(const BigRational& q) { return q.get_den(); }

BigRational pow(const BigRational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Exact k-th root of a rational, if one exists.  For even k the
/// non-negative root is returned.
std::optional<BigRational> exact_root(const BigRational& value, unsigned k);

bool is_square(const BigRational& value);

/// Signed squarefree integer s with value = s * (rational square).
/// Zero maps to zero.
BigInt squarefree_kernel(const BigRational& value);

/// Reduction of q modulo a prime p; throws MathError when p divides the
/// denominator.
std::uint64_t reduce_mod(const BigRational& q, std::uint64_t p);

}  // namespace k3mw
