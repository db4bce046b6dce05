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

#include <doctest.h>

#include <random>

#include "k3mw/exact/integer.hpp"
#include "k3mw/exact/poly_algorithms.hpp"
#include "k3mw/exact/prime_field.hpp"
#include "k3mw/exact/ratfunc.hpp"
#include "oracles.hpp"

using namespace k3mw;

namespace {

const RationalField Q{};
BigRational R(long n, long d = 1) { return make_rational(n, d); }
UniPoly P(std::initializer_list<BigRational> c) { return UniPoly(c); }
const UniPoly T = UniPoly::variable(Q);

}  // namespace

TEST_CASE("rational literals round-trip in lowest terms") {
  CHECK(parse_rational("6/4") == R(3, 2));
  CHECK(parse_rational(" -10/5 ") == R(-2));
  CHECK(to_string(parse_rational("-12/8")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("3/"), ParseError);
}

TEST_CASE("roots, squares and kernels") {
  CHECK(exact_root(R(27, 8), 3) == R(3, 2));
  CHECK(exact_root(R(-27, 8), 3) == R(-3, 2));
  CHECK_FALSE(exact_root(R(2), 2).has_value());
  CHECK(is_square(R(49, 4)));
  CHECK_FALSE(is_square(R(-4)));
  CHECK(squarefree_kernel(R(128)) == 2);
  CHECK(squarefree_kernel(R(320)) == 5);
  CHECK(squarefree_kernel(R(-12, 5)) == -15);
  CHECK(squarefree_kernel(R(0)) == 0);
  CHECK(reduce_mod(R(1, 2), 7) == 4);
  CHECK(reduce_mod(R(-1), 7) == 6);
  CHECK_THROWS_AS(reduce_mod(R(1, 7), 7), MathError);
}

TEST_CASE("integer utilities") {
  CHECK(is_prime(37));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(1));
  CHECK(least_nonresidue(37) == 2);
  CHECK(least_nonresidue(41) == 3);
  CHECK(legendre(3, 11) == 1);
  CHECK(mod_inverse(3, 7) == 5);
  auto f = factor_integer(BigInt("96393"));
  REQUIRE(f.size() == 4);
  CHECK(f[0].first == 3);
  CHECK(f[3].first == 127);
  BigInt big = BigInt("1000000007") * BigInt("998244353") * BigInt("998244353");
  auto g = factor_integer(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == BigInt("998244353"));
  CHECK(g[0].second == 2);
  CHECK(positive_divisors(BigInt(12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(T * T - P({1}), T - P({1})) == T - P({1}));
  CHECK(poly_gcd(T * T + P({1}), T + P({2})) == P({1}));
  UniPoly a = (T - P({1})).pow(2) * (T + P({2}));
  UniPoly b = (T - P({1})) * (T + P({3}));
  UniPoly g = poly_gcd(a, b);
  CHECK(g == T - P({1}));
  CHECK(a.divisible_by(g));
  CHECK(b.divisible_by(g));
  CHECK(poly_gcd(UniPoly(Q), UniPoly(Q)).is_zero());
  CHECK(poly_gcd(UniPoly(Q), b.scale(R(5))) == b);
}

TEST_CASE("poly_gcd property: gcd(ac, bc) = c gcd(a, b)") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly a = oracle::random_poly(rng, 1 + trial % 4);
    UniPoly b = oracle::random_poly(rng, 1 + trial % 3);
    UniPoly c = oracle::random_poly(rng, 1 + trial % 5);
    CHECK(poly_gcd(a * c, b * c) == (c * poly_gcd(a, b)).monic());
  }
}

TEST_CASE("poly_gcd over a prime field") {
  PrimeField f(7);
  FpPoly x = FpPoly::variable(f);
  FpPoly one = FpPoly::constant(f, 1);
  FpPoly a = (x - one) * (x + one);
  FpPoly b = (x - one) * (x - one.scale(3));
  CHECK(poly_gcd(a, b) == x - one);
}

TEST_CASE("squarefree_decompose") {
  auto d = squarefree_decompose((T - P({1})).pow(2) * (T + P({2})));
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].first == T + P({2}));
  CHECK(d.factors[0].second == 1);
  CHECK(d.factors[1].first == T - P({1}));
  CHECK(d.factors[1].second == 2);

  auto e = squarefree_decompose(T.pow(5).scale(R(3)));
  REQUIRE(e.factors.size() == 1);
  CHECK(e.factors[0].first == T);
  CHECK(e.factors[0].second == 5);
  CHECK(e.unit == 3);

  CHECK_THROWS_AS(squarefree_decompose(UniPoly(Q)), MathError);
  PrimeField f(3);
  CHECK_THROWS_AS(squarefree_decompose(FpPoly::variable(f).pow(3)), MathError);
}

TEST_CASE("squarefree_decompose round-trip on random products") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly a = oracle::random_poly(rng, 1 + trial % 3);
    UniPoly b = oracle::random_poly(rng, 1 + trial % 2);
    UniPoly input = a * b.pow(1 + trial % 3) * oracle::random_poly(rng, 0);
    auto dec = squarefree_decompose(input);
    UniPoly prod = UniPoly::constant(Q, dec.unit);
    for (const auto& [fac, m] : dec.factors) {
      CHECK(poly_gcd(fac, fac.derivative()) == P({1}));
      prod *= fac.pow(m);
    }
    CHECK(prod == input);
    for (std::size_t i = 0; i < dec.factors.size(); ++i)
      for (std::size_t j = i + 1; j < dec.factors.size(); ++j)
        CHECK(poly_gcd(dec.factors[i].first, dec.factors[j].first) == P({1}));
  }
}

TEST_CASE("resultant matches the Sylvester determinant") {
  CHECK(resultant(T - P({1}), T - P({2})) == -1);
  CHECK(oracle::sylvester_resultant(T - P({1}), T - P({2})) == -1);
  CHECK(resultant(T * T - P({1}), T - P({1})) == 0);
  CHECK_THROWS_AS(resultant(UniPoly(Q), T), MathError);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly a = oracle::random_poly(rng, 1 + trial % 4);
    UniPoly b = oracle::random_poly(rng, trial % 5);
    BigRational r = resultant(a, b);
    CHECK(r == oracle::sylvester_resultant(a, b));
    long sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    CHECK(resultant(b, a) == sign * r);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({1, 0, 1})) == -4);
  CHECK(discriminant(P({-2, 0, 0, 1})) == -108);
  CHECK(discriminant(P({1, 0, 0, 0, 1})) == 256);
}

TEST_CASE("rational_roots agrees with divisor search") {
  CHECK(rational_roots(T.pow(3) - T.scale(R(4))) == std::vector<BigRational>{R(-2), R(0), R(2)});
  CHECK(rational_roots(T * T + P({1})).empty());
  CHECK(rational_roots(P({5})).empty());
  UniPoly m = (T - R(3, 7)).pow(2) * (T + R(5, 2)) * (T * T + P({3}));
  CHECK(rational_roots(m) == std::vector<BigRational>{R(-5, 2), R(3, 7), R(3, 7)});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly a = P({1});
    for (int k = 0; k < 1 + trial % 4; ++k) a *= T - oracle::random_rational(rng, 20);
    a *= oracle::random_poly(rng, 2, 5);
    CHECK(rational_roots(a) == oracle::divisor_search_roots(a));
  }
}

TEST_CASE("rational_roots handles large coefficients") {
  BigRational big(BigInt("123456789012345678901234567890"), BigInt("97"));
  UniPoly a = (T - big) * (T + R(1, 3)) * (T * T - P({2}));
  CHECK(rational_roots(a) == std::vector<BigRational>{R(-1, 3), big});
}

TEST_CASE("coprime_basis") {
  UniPoly a = (T - P({1})).pow(2) * (T * T + P({1}));
  UniPoly b = (T - P({1})) * (T + P({2}));
  auto basis = coprime_basis({a, b, UniPoly(Q), P({7})});
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == T - P({1}));
  CHECK(basis[1] == T + P({2}));
  CHECK(basis[2] == T * T + P({1}));
  CHECK(multiplicity(a, basis[0]) == 2);
  CHECK(multiplicity(b, basis[2]) == 0);
}

TEST_CASE("composed_sum agrees with Newton power sums") {
  UniPoly a = T.pow(4) - T.pow(3).scale(R(4)) + T.pow(2).scale(R(46)) - T.scale(R(148)) + P({1369});
  UniPoly b = T.pow(4) + T.pow(3).scale(R(4)) + T.pow(2).scale(R(6)) + T.scale(R(164)) + P({1681});
  UniPoly c = composed_sum(a, b);
  CHECK(c.degree() == 16);
  CHECK(c.monic() == oracle::newton_composed_sum(a, b));
  CHECK(composed_sum(T - P({1}), T - P({2})).monic() == T - P({3}));
}

TEST_CASE("prime-field factor patterns") {
  PrimeField f(5);
  FpPoly x = FpPoly::variable(f);
  FpPoly one = FpPoly::constant(f, 1);
  FpPoly irr2 = x * x - one.scale(2);
  CHECK(is_irreducible(irr2));
  CHECK_FALSE(is_irreducible(x * x - one));
  CHECK(is_irreducible(x.pow(4) + one.scale(2)));
  FpPoly mixed = (x - one) * irr2 * (x.pow(3) + x + one);
  CHECK(is_irreducible(x.pow(3) + x + one));
  CHECK(factor_degree_pattern(mixed) == std::vector<unsigned>{1, 2, 3});
  CHECK(factor_degree_pattern(x.pow(5) - x) == std::vector<unsigned>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(factor_degree_pattern(x * x), MathError);
  CHECK(roots_mod_p(x * x - one) == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("quadratic extension context") {
  auto ctx = PrimeFieldCtx::with_extension(37);
  CHECK(ctx.nonresidue() == 2);
  CHECK(is_irreducible(ctx.extension_modulus()));
  Fp2 u{0, 1};
  CHECK(ctx.mul(u, u) == ctx.embed(2));
  CHECK(ctx.chi2(ctx.embed(2)) == 1);
  CHECK(ctx.chi2(u) == -1);
  CHECK(ctx.chi2(Fp2{}) == 0);
  CHECK_THROWS_AS(PrimeFieldCtx(35), MathError);
  CHECK_THROWS_AS(PrimeFieldCtx(37, 3), MathError);
  CHECK_THROWS_AS(PrimeFieldCtx(37).mul(u, u), MathError);
}

TEST_CASE("rational functions normalize and substitute") {
  using RF = RationalFunction;
  const RF t = RF::variable();
  RF f = (t * t - RF(1)) / (t - RF(1)).pow(1);
  CHECK(f == t + RF(1));
  CHECK(f.is_polynomial());
  RF g = RF(P({2}), P({0, 4}));
  CHECK(g.num() == P({R(1, 2)}));
  CHECK(g.den() == T);
  CHECK(g.valuation_at_zero() == -1);
  CHECK(g.valuation_at_infinity() == 1);
  CHECK(RF::monomial(R(3), -2) == RF(3) / (t * t));
  CHECK_THROWS_AS(RF(T, UniPoly(Q)), MathError);
  CHECK_THROWS_AS(g.eval(R(0)), MathError);
  CHECK(g.eval(R(2)) == R(1, 4));

  RF h = (t.pow(3) + RF(R(1, 2))) / (t - RF(2));
  CHECK(h.substitute_monomial(R(1), 1) == h);
  RF inv = h.substitute_monomial(R(3), -2);
  CHECK(inv.eval(R(5)) == h.eval(R(3, 25)));
  CHECK(inv.substitute_monomial(R(1), -1).eval(R(5)) == h.eval(R(75)));
  CHECK(h.compose(RF(1) / t).eval(R(7)) == h.eval(R(1, 7)));
  CHECK(h.pow(-2) * h.pow(2) == RF(1));
  CHECK((h - h).is_zero());
}

TEST_CASE("rational function serialization") {
  using RF = RationalFunction;
  RF h = RF(P({R(1, 2), 0, 3}), P({-2, 1}));
  CHECK(h.serialize() == "[1/2,0,3]/[-2,1]");
  CHECK(RF::parse(h.serialize()) == h);
  CHECK(RF::parse("[0]").is_zero());
  CHECK(RF::parse("5/3") == RF(R(5, 3)));
  CHECK(RF(R(0)).serialize() == "[0]");
  CHECK_THROWS_AS(RF::parse("[1,2"), ParseError);
  CHECK_THROWS_AS(RF::parse("[1]/[0]"), ParseError);
  CHECK(h.str() == "(3*t^2 + 1/2)/(t - 2)");
}
