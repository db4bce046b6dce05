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

#include "k3mw/exact/integer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "k3mw/error.hpp"

namespace k3mw {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exponent) {
    if (exponent & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (auto w : kWitnesses) {
    std::uint64_t x = mod_pow(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
  __int128 t = 0;
  __int128 new_t = 1;
  __int128 r = mod;
  __int128 new_r = a % mod;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::pair<__int128, __int128>(new_t, t - q * new_t);
    std::tie(r, new_r) = std::pair<__int128, __int128>(new_r, r - q * new_r);
  }
  if (r != 1) throw MathError("no modular inverse");
  if (t < 0) t += mod;
  return static_cast<std::uint64_t>(t);
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw MathError("least non-residue needs an odd prime");
  for (std::uint64_t n = 2;; ++n)
    if (legendre(n, p) == -1) return n;
}

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n < hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

namespace {

bool probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of the
// composite n.
BigInt rho_factor(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2;
    BigInt x;
    BigInt g = 1;
    BigInt q = 1;
    BigInt ys;
    const unsigned long m = 128;
    for (unsigned long r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(BigInt(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = rho_factor(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
  if (n == 0) throw MathError("factorization of zero");
  BigInt m = abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      m /= p;
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [prime, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    BigInt power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace k3mw
