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

#include "k3mw/genus2/certify.hpp"

#include <algorithm>
#include <array>

#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

std::optional<std::uint64_t> certify_simple(const Genus2Curve& curve, const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw MathError("certify_simple needs at least one prime");
  for (auto p : primes) {
    if (bad_reduction_reason(curve, p)) continue;
    if (quartic_galois_class(frobenius_charpoly(curve, p).poly()) == GaloisClass::kD4) return p;
  }
  return std::nullopt;
}

RealWeilQuadratic real_weil_quadratic(const WeilPolynomial& w) {
  RealWeilQuadratic out;
  const BigInt p(static_cast<unsigned long>(w.p));
  const BigInt a1(static_cast<long>(w.a1));
  const BigInt a2(static_cast<long>(w.a2));
  out.quadratic = UniPoly{BigRational(a2 - 2 * p), BigRational(-a1), BigRational(1)};
  out.discriminant = a1 * a1 - 4 * a2 + 8 * p;
  out.kernel = squarefree_kernel(BigRational(out.discriminant));
  out.degenerate = out.kernel == 0 || out.kernel == 1;
  return out;
}

std::string to_string(DisjointnessWitness::Route r) {
  return r == DisjointnessWitness::Route::kResultantIrreducible ? "resultant-irreducible" : "subfield-kernels";
}

namespace {

bool unique_quadratic_subfield(GaloisClass c) { return c == GaloisClass::kD4 || c == GaloisClass::kC4; }

std::optional<FpPoly> squarefree_reduction(const UniPoly& a, std::uint64_t ell) {
  for (const auto& c : a.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), ell)) return std::nullopt;
  FpPoly r = reduce_mod(a, ell);
  if (r.degree() != a.degree()) return std::nullopt;
  if (poly_gcd(r, r.derivative()).degree() != 0) return std::nullopt;
  return r;
}

std::optional<DisjointnessWitness> resultant_route(const PrimeRecord& r1, const PrimeRecord& r2, std::uint64_t bound) {
  UniPoly res = composed_sum(r1.weil.poly(), r2.weil.poly());
  for (auto ell : odd_primes(3, bound)) {
    auto red = squarefree_reduction(res, ell);
    if (red && is_irreducible(*red)) {
      DisjointnessWitness w;
      w.route = DisjointnessWitness::Route::kResultantIrreducible;
      w.p1 = r1.p;
      w.p2 = r2.p;
      w.ell = ell;
      w.resultant = res;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<DisjointnessWitness> subfield_route(const PrimeRecord& r1, const PrimeRecord& r2, std::uint64_t bound) {
  if (!unique_quadratic_subfield(r1.galois.galois) || !unique_quadratic_subfield(r2.galois.galois)) return std::nullopt;
  if (r1.real_quadratic.degenerate || r2.real_quadratic.degenerate) return std::nullopt;
  if (r1.real_quadratic.kernel == r2.real_quadratic.kernel) return std::nullopt;
  UniPoly q1 = r1.weil.poly();
  UniPoly q2 = r2.weil.poly();
  for (auto ell : odd_primes(3, bound)) {
    auto a = squarefree_reduction(q1, ell);
    auto b = squarefree_reduction(q2, ell);
    if (!a || !b) continue;
    auto pa = factor_degree_pattern(*a);
    auto pb = factor_degree_pattern(*b);
    if (pa != pb) {
      DisjointnessWitness w;
      w.route = DisjointnessWitness::Route::kSubfieldKernels;
      w.p1 = r1.p;
      w.p2 = r2.p;
      w.ell = ell;
      w.pattern1 = std::move(pa);
      w.pattern2 = std::move(pb);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

PicardCertificate certify_picard_one(const Genus2Curve& curve, const std::vector<std::uint64_t>& primes) {
  PicardCertificate cert;
  cert.curve = curve.f();
  cert.primes_requested = primes;
  for (auto p : primes) {
    if (std::find(cert.primes_used.begin(), cert.primes_used.end(), p) != cert.primes_used.end()) {
      cert.primes_rejected.emplace_back(p, "duplicate prime");
      continue;
    }
    if (auto reason = bad_reduction_reason(curve, p)) {
      cert.primes_rejected.emplace_back(p, *reason);
      continue;
    }
    cert.primes_used.push_back(p);
  }
  if (cert.primes_used.size() < 2)
    throw MathError("certify_picard_one needs at least two distinct primes of good reduction");

  for (auto p : cert.primes_used) {
    PrimeRecord rec;
    auto data = frobenius_data(curve, p);
    rec.p = p;
    rec.n1 = data.n1;
    rec.n2 = data.n2;
    rec.weil = data.weil;
    rec.galois = analyze_quartic(data.weil.poly());
    rec.real_quadratic = real_weil_quadratic(data.weil);
    if (!cert.simplicity_witness && rec.galois.galois == GaloisClass::kD4) cert.simplicity_witness = p;
    cert.records.push_back(std::move(rec));
  }

  for (std::size_t i = 0; i < cert.records.size() && !cert.disjointness; ++i) {
    for (std::size_t j = i + 1; j < cert.records.size() && !cert.disjointness; ++j) {
      const auto& r1 = cert.records[i];
      const auto& r2 = cert.records[j];
      if (r1.galois.galois == GaloisClass::kReducible || r2.galois.galois == GaloisClass::kReducible) continue;
      if (auto w = resultant_route(r1, r2, cert.resultant_route_bound)) {
        cert.resultant_route_succeeded = true;
        cert.disjointness = std::move(w);
      } else if (auto v = subfield_route(r1, r2, cert.resultant_route_bound)) {
        cert.disjointness = std::move(v);
      }
    }
  }

  if (!cert.simplicity_witness) {
    cert.summary = "inconclusive: no Frobenius quartic with Galois group D4";
  } else if (!cert.disjointness) {
    cert.summary = "inconclusive: no pair of Frobenius fields certified to meet only in Q";
  } else {
    cert.rho = 1;
    cert.summary = "rho(J(C)) = 1";
  }
  return cert;
}

namespace {

struct ClassEntry {
  EndomorphismClass cls;
  const char* name;
  int rho;
};

constexpr std::array<ClassEntry, 7> kClasses{{
    {EndomorphismClass::kSimpleRational, "simple-Q", 1},
    {EndomorphismClass::kSimpleRealQuadratic, "simple-real-quadratic", 2},
    {EndomorphismClass::kSimpleQuaternion, "simple-quaternion", 3},
    {EndomorphismClass::kSimpleCmQuartic, "simple-CM-quartic", 2},
    {EndomorphismClass::kSplitNonIsogenous, "split-nonisogenous", 2},
    {EndomorphismClass::kSplitIsogenousNoCm, "split-isogenous-noCM", 3},
    {EndomorphismClass::kSplitIsogenousCm, "split-isogenous-CM", 4},
}};

}  // namespace

EndomorphismClass parse_endomorphism_class(const std::string& name) {
  for (const auto& e : kClasses)
    if (name == e.name) return e.cls;
  throw MathError("unknown endomorphism class '" + name + "'");
}

std::string to_string(EndomorphismClass c) {
  for (const auto& e : kClasses)
    if (e.cls == c) return e.name;
  throw MathError("unknown endomorphism class");
}

int picard_from_endomorphism_class(EndomorphismClass c) {
  for (const auto& e : kClasses)
    if (e.cls == c) return e.rho;
  throw MathError("unknown endomorphism class");
}

}  // namespace k3mw
