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

// Acceptance checks 1 to 8; prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "k3mw/constructions/cover.hpp"
#include "k3mw/constructions/elliptic_curve.hpp"
#include "k3mw/constructions/igusa_surfaces.hpp"
#include "k3mw/constructions/two_ivstar.hpp"
#include "k3mw/ellsurf/fibers.hpp"
#include "k3mw/error.hpp"
#include "k3mw/exact/integer.hpp"
#include "k3mw/exact/poly_algorithms.hpp"
#include "k3mw/genus2/certify.hpp"
#include "k3mw/genus2/galois.hpp"
#include "k3mw/genus2/point_count.hpp"
#include "oracles.hpp"

using namespace k3mw;

namespace {

using RF = RationalFunction;
using Row = std::map<std::string, long>;

BigRational R(long n, long d = 1) { return make_rational(n, d); }
RF c(long n, long d = 1) { return RF(R(n, d)); }
RF mono(const BigRational& q, long k) { return RF::monomial(q, k); }
UniPoly P(std::initializer_list<long> coeffs) {
  std::vector<BigRational> v;
  for (long x : coeffs) v.emplace_back(x);
  return UniPoly(v);
}

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }

  /// Runs body, turning exceptions into failures.
  void run(const std::function<void(Criterion&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
  }

  bool passed() const { return failures_.empty() && checks_ > 0; }

  void print() const {
    std::cout << "criterion " << id_ << ": " << (passed() ? "PASS" : "FAIL") << "  " << title_ << " (" << checks_
              << " checks)\n";
    for (const auto& f : failures_) std::cout << "    failed: " << f << "\n";
    for (const auto& n : notes_) std::cout << "    note: " << n << "\n";
  }

 private:
  int id_;
  std::string title_;
  long checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Row row_of(const FiberConfiguration& cfg) {
  Row r;
  for (const auto& f : cfg.fibers) r[f.type.name()] += f.count;
  return r;
}

std::string row_str(const Row& r) {
  std::string out;
  for (const auto& [k, v] : r) out += (out.empty() ? "" : ", ") + std::to_string(v) + " " + k;
  return "{" + out + "}";
}

/// Every fiber away from t = 0 and t = infinity is I1.
bool is_general(const FiberConfiguration& cfg) {
  for (const auto& f : cfg.fibers) {
    bool at_ends = f.place.kind == Place::Kind::kInfinity ||
                   (f.place.kind == Place::Kind::kRational && f.place.value == 0);
    if (!at_ends && !(f.type == KodairaType{KodairaKind::kIn, 1})) return false;
  }
  return true;
}

std::string symbolic_rank(long offset) {
  if (offset == 0) return "ρ";
  return offset < 0 ? "ρ" + std::to_string(offset) : std::to_string(offset) + "+ρ";
}

/// Fiber rows, Euler numbers and symbolic ranks of one family member.
void check_row(Criterion& cr, const std::string& label, const FiberConfiguration& cfg, const Row& expected,
               long offset) {
  cr.check(row_of(cfg) == expected, label + ": fibers " + row_str(row_of(cfg)) + ", expected " + row_str(expected));
  cr.check(cfg.euler_total == 24, label + ": euler total " + std::to_string(cfg.euler_total));
  cr.check(rank_formula(cfg) == symbolic_rank(offset), label + ": rank formula " + rank_formula(cfg));
  for (long rho = 1; rho <= 4; ++rho) {
    long want = offset + rho;
    long got = want >= 0 ? shioda_tate_rank(cfg, 16 + rho) : -1;
    cr.check(got == want, label + ": rank for rho = " + std::to_string(rho));
  }
}

UniPoly qm_poly() {
  return UniPoly({R(7, 2), R(0), R(1)}) * UniPoly({R(-1813, 120), R(49), R(-1519, 30), R(14), R(83, 30)});
}

UniPoly split_poly() { return P({12, 13}) * P({-13, 7}) * P({252, -273, 107}) * P({31, 104, 56}) * R(-96393); }

const HParams kParams{R(-1), R(1, 7), R(-6, 7)};

UniPoly mobius(const UniPoly& f, const BigRational& a, const BigRational& b, const BigRational& cc,
               const BigRational& d) {
  UniPoly num({b, a}), den({d, cc});
  UniPoly out;
  for (unsigned i = 0; i <= 6; ++i) out += (num.pow(i) * den.pow(6 - i)).scale(f[i]);
  return out;
}

std::vector<BigRational> absolute_ratios(const IgusaClebsch& ic) {
  return {pow(ic.I2, 5) / ic.I10, pow(ic.I2, 3) * ic.I4 / ic.I10, ic.I2 * ic.I2 * ic.I6 / ic.I10,
          ic.I4 * ic.I6 / ic.I10};
}

HParams random_hparams(std::mt19937& rng) {
  for (;;) {
    HParams p{oracle::random_rational(rng, 12), oracle::random_rational(rng, 12), oracle::random_rational(rng, 12)};
    try {
      p.validate();
      return p;
    } catch (const MathError&) {
    }
  }
}

UniPoly random_squarefree_sextic(std::mt19937& rng) {
  for (;;) {
    UniPoly f = oracle::random_poly(rng, 6, 9);
    if (f.degree() == 6 && poly_gcd(f, f.derivative()).degree() == 0) return f;
  }
}

// Criterion 1.
void g_table(Criterion& cr) {
  const std::vector<Row> rows{{{"II*", 1}, {"III*", 1}, {"I1", 5}},
                              {{"IV*", 1}, {"I0*", 1}, {"I1", 10}},
                              {{"I0*", 1}, {"III", 1}, {"I1", 15}},
                              {{"IV", 1}, {"I1", 20}}};
  const long offsets[] = {-1, 4, 9, 12};
  std::mt19937 rng(20260101);
  std::vector<std::pair<std::string, IgusaClebsch>> inputs{{"QM curve", igusa_clebsch(Genus2Curve(qm_poly()))}};
  int violations = 0;
  while (inputs.size() < 6) {
    IgusaClebsch ic = igusa_clebsch(Genus2Curve(random_squarefree_sextic(rng)));
    bool general = true;
    for (long n = 1; n <= 4; ++n) general = general && is_general(classify_fibers(g_surface(ic, n)));
    if (!general) {
      ++violations;
      continue;
    }
    inputs.emplace_back("random curve " + std::to_string(inputs.size()), ic);
  }
  for (const auto& [label, ic] : inputs)
    for (long n = 1; n <= 4; ++n)
      check_row(cr, label + ", G^(" + std::to_string(n) + ")", classify_fibers(g_surface(ic, n)), rows[n - 1],
                offsets[n - 1]);
  cr.note(std::to_string(violations) + " random curves were not general and were redrawn");
}

// Criterion 2.
void h_table(Criterion& cr) {
  const std::vector<Row> rows{{{"IV*", 2}, {"I1", 8}}, {{"IV", 2}, {"I1", 12}}, {{"I1", 24}}};
  const long offsets[] = {2, 10, 14};
  std::mt19937 rng(20260202);
  std::vector<std::pair<std::string, HParams>> inputs{{"(a,b,c) = (-1,1/7,-6/7)", kParams}};
  int violations = 0;
  while (inputs.size() < 6) {
    HParams p = random_hparams(rng);
    bool general = true;
    for (long n = 1; n <= 3; ++n) general = general && is_general(classify_fibers(h_surface(p, n)));
    if (!general) {
      ++violations;
      continue;
    }
    inputs.emplace_back("random parameters " + std::to_string(inputs.size()), p);
  }
  for (const auto& [label, p] : inputs)
    for (long n = 1; n <= 3; ++n)
      check_row(cr, label + ", H^(" + std::to_string(n) + ")", classify_fibers(h_surface(p, n)), rows[n - 1],
                offsets[n - 1]);
  cr.note(std::to_string(violations) + " random parameter triples were not general and were redrawn");
}

// Criterion 3.
void fibration13(Criterion& cr) {
  std::mt19937 rng(20260303);
  for (int trial = 0; trial < 4; ++trial) {
    IgusaClebsch ic{oracle::random_rational(rng, 40, true), oracle::random_rational(rng, 40, true),
                    oracle::random_rational(rng, 40, true), oracle::random_rational(rng, 40, true)};
    cr.check(fibration13_to_g2(kummer_fibration13(ic)) == g_surface(ic, 2),
             "random invariants " + std::to_string(trial) + ": substituted fibration 13 differs from G^(2)");
  }
  IgusaClebsch qm = igusa_clebsch(Genus2Curve(qm_poly()));
  cr.check(fibration13_to_g2(kummer_fibration13(qm)) == g_surface(qm, 2), "QM invariants");
}

// Criterion 4.
void qm_example(Criterion& cr) {
  IgusaClebsch ic = igusa_clebsch(Genus2Curve(qm_poly()));
  WeierstrassSurface g4 = g_surface(ic, 4);
  WeierstrassSurface reference = WeierstrassSurface::short_form(
      c(529200) * (c(6) - mono(R(5), -4)), c(-9261000) * (mono(R(4), 4) + c(20) - mono(R(3431), -4)));
  WeierstrassSurface simple =
      WeierstrassSurface::short_form(c(12) * (c(6) - mono(R(5), -4)), -(mono(R(4), 4) + c(20) - mono(R(3431), -4)));
  auto m = same_surface_up_to_iso(g4, reference);
  cr.check(m.has_value(), "G^(4) of the QM curve is not matched to the reference equation");
  if (m) cr.note("G^(4) match: " + describe(*m));
  auto mt = same_surface_up_to_iso(quadratic_twist(reference, R(210)), simple);
  cr.check(mt.has_value() && mt->d == 1, "twist by 210 does not give the simplified equation");
  auto cfg = classify_fibers(g4);
  long rho = picard_from_endomorphism_class(EndomorphismClass::kSimpleQuaternion);
  cr.check(rho == 3, "quaternionic Picard number");
  cr.check(shioda_tate_rank(cfg, 16 + rho) == 15, "rank of G^(4) given rho = 3");
}

// Criterion 5.
void split_example(Criterion& cr) {
  EllipticCurveQ e1{R(1), R(0), R(1), R(4), R(-6)};
  EllipticCurveQ e2{R(1), R(0), R(1), R(-36), R(-70)};
  cr.check(ec_j_invariant(e1) == pow(R(215, 28), 3), "j(E1)");
  cr.check(ec_j_invariant(e2) == pow(R(1705, 98), 3), "j(E2)");
  cr.check(has_rational_n_torsion(e1, 6), "E1 rational 6-torsion");
  cr.check(has_rational_n_torsion(e2, 6), "E2 rational 6-torsion");
  Genus2Curve curve(split_poly());
  auto e1s = EllipticCurveQ::short_form(R(5805), R(-285714));
  auto e2t = EllipticCurveQ::short_form(R(-5115), R(115414));
  cr.check(ec_isomorphism_scale(e1, e1s).has_value(), "E1 short model");
  cr.check(ec_isomorphism_scale(ec_quadratic_twist(e2, R(-3)), e2t).has_value(), "E2 twisted short model");
  CoverMap phi1{RF(-P({86895, 3627, 0, 156260}), P({-13, 7}) * P({31, 104, 56}) * R(3)),
                RF(-P({-6, 13}) * P({126, 273, 214}) * R(4), (P({-13, 7}) * P({31, 104, 56})).pow(2) * R(9))};
  CoverMap phi2{RF(P({-211380, 0, 4173, 47485}), P({12, 13}) * P({252, -273, 107})),
                RF(-P({26, 7}) * P({31, -52, 14}) * R(12), (P({12, 13}) * P({252, -273, 107})).pow(2))};
  auto r1 = verify_cover(curve, e1s, phi1);
  auto r2 = verify_cover(curve, e2t, phi2);
  cr.check(r1.ok && r1.degree == 3 && r1.residue_even.is_zero(), "phi1: " + r1.describe());
  cr.check(r2.ok && r2.degree == 3 && r2.residue_even.is_zero(), "phi2: " + r2.describe());
  WeierstrassSurface reference = WeierstrassSurface::short_form(
      c(33) * (c(2933005) - mono(R(1126255812), -4)),
      c(-2) * (mono(R(28449792), 4) - c(8690133815) - mono(BigRational("274280846290470"), -4)));
  WeierstrassSurface g4 = g_surface(igusa_clebsch(curve), 4);
  auto m = same_surface_up_to_iso(g4, reference);
  cr.check(m.has_value(), "G^(4) of the split curve is not matched to the reference equation");
  long rho = picard_from_endomorphism_class(EndomorphismClass::kSplitIsogenousNoCm);
  cr.check(shioda_tate_rank(classify_fibers(g4), 16 + rho) == 15, "rank of G^(4) given rho = 3");
}

// Criterion 6.
void certificate_example(Criterion& cr) {
  Genus2Curve curve = genus2_from_hparams(kParams);
  UniPoly p37 = P({1369, -148, 46, -4, 1});
  UniPoly p41 = P({1681, 164, 6, 4, 1});
  cr.check(frobenius_charpoly(curve, 37).poly() == p37, "charpoly at 37");
  cr.check(frobenius_charpoly(curve, 41).poly() == p41, "charpoly at 41");
  cr.check(quartic_galois_class(p37) == GaloisClass::kD4, "Galois group of p_37");
  PicardCertificate cert = certify_picard_one(curve, {37, 41});
  cr.check(cert.rho == 1, "certificate conclusion: " + cert.summary);
  if (cert.disjointness) cr.note("disjointness route: " + to_string(cert.disjointness->route));
  std::map<std::uint64_t, BigInt> kernels;
  for (const auto& rec : cert.records) kernels[rec.p] = rec.real_quadratic.kernel;
  cr.check(kernels[37] == 2 && kernels[41] == 5, "real quadratic kernels 2 and 5");
  WeierstrassSurface reference = WeierstrassSurface::from_a246(
      c(-1354, 7), c(936, 7) * (mono(R(1), 3) + c(42989, 819) + mono(R(4), -3)),
      c(6084, 49) * (mono(R(1), 3) - mono(R(4), -3)).pow(2));
  WeierstrassSurface h3 = h_surface(kParams, 3);
  cr.check(same_surface_up_to_iso(h3, reference).has_value(),
           "H^(3) at (-1, 1/7, -6/7) is not matched to the reference equation");
  cr.check(cert.rho && shioda_tate_rank(classify_fibers(h3), 16 + *cert.rho) == 15, "rank of H^(3)");
}

// Criterion 7.
void intermediate(Criterion& cr) {
  auto cfg = classify_fibers(intermediate_fibration(kParams));
  auto at = [&](const BigRational& r) -> std::string {
    for (const auto& f : cfg.fibers)
      if (f.place.kind == Place::Kind::kRational && f.place.value == r) return f.type.name();
    return "smooth";
  };
  const BigRational &a = kParams.a, &b = kParams.b, &cc = kParams.c;
  cr.check(at(R(0)) == "I6", "fiber at t1 = 0 is " + at(R(0)));
  BigRational p1 = -2 * (b - a) * cc, p2 = -2 * b * (cc - 1);
  cr.check(at(p1) == "I2", "fiber at t1 = -2(b-a)c is " + at(p1));
  cr.check(at(p2) == "I2", "fiber at t1 = -2b(c-1) is " + at(p2));
  cr.check(cfg.euler_total == 24, "euler total " + std::to_string(cfg.euler_total));
}

// Criterion 8.
void properties(Criterion& cr) {
  std::mt19937 rng(20260808);
  int mobius_checked = 0;
  while (mobius_checked < 20) {
    UniPoly f = random_squarefree_sextic(rng);
    IgusaClebsch ic = igusa_clebsch(Genus2Curve(f));
    BigRational a = oracle::random_rational(rng, 5), b = oracle::random_rational(rng, 5);
    BigRational cc = oracle::random_rational(rng, 5), d = oracle::random_rational(rng, 5);
    if (a * d - b * cc == 0 || ic.I10 == 0) continue;
    UniPoly g = mobius(f, a, b, cc, d);
    if (g.degree() < 5) continue;
    cr.check(absolute_ratios(igusa_clebsch(Genus2Curve(g))) == absolute_ratios(ic), "absolute invariants, Mobius");
    BigRational lambda = oracle::random_rational(rng, 7, true);
    IgusaClebsch s = igusa_clebsch(Genus2Curve(f.scale(lambda)));
    cr.check(s.I2 == pow(lambda, 2) * ic.I2 && s.I4 == pow(lambda, 4) * ic.I4 && s.I6 == pow(lambda, 6) * ic.I6 &&
                 s.I10 == pow(lambda, 10) * ic.I10,
             "homogeneity under lambda f");
    ++mobius_checked;
  }

  std::vector<Genus2Curve> curves{genus2_from_hparams(kParams), Genus2Curve(qm_poly()), Genus2Curve(split_poly())};
  for (int i = 0; i < 2; ++i) curves.emplace_back(random_squarefree_sextic(rng));
  long reciprocity = 0;
  for (const auto& curve : curves) {
    for (std::uint64_t p : odd_primes(3, 60)) {
      if (bad_reduction_reason(curve, p)) continue;
      UniPoly w = frobenius_charpoly(curve, p).poly();
      UniPoly lhs = w.reversed(4);
      std::vector<BigRational> scaled;
      for (std::size_t k = 0; k <= 4; ++k) scaled.push_back(w[k] * pow(BigRational(static_cast<long>(p)), k));
      cr.check(UniPoly(scaled) == lhs.scale(BigRational(static_cast<long>(p * p))),
               "Weil reciprocity at p = " + std::to_string(p));
      ++reciprocity;
    }
  }
  cr.note(std::to_string(reciprocity) + " Frobenius polynomials checked for reciprocity");

  Genus2Curve e = genus2_from_hparams(kParams);
  for (std::uint64_t p : {37, 41, 43}) {
    std::uint64_t reference = count_points(e, PrimeFieldCtx::with_extension(p), 2);
    for (std::uint64_t n = 2; n < p; ++n)
      if (legendre(n, p) == -1)
        cr.check(count_points(e, PrimeFieldCtx(p, n), 2) == reference,
                 "F_{p^2} count with non-residue " + std::to_string(n) + " mod " + std::to_string(p));
  }

  for (int trial = 0; trial < 100; ++trial) {
    UniPoly f = oracle::random_poly(rng, 1 + trial % 4, 5);
    UniPoly g = oracle::random_poly(rng, 1 + trial % 3, 5);
    if (f.is_zero() || g.is_zero()) continue;
    UniPoly a = f * f * g * (trial % 2 ? f : g);
    auto sq = squarefree_decompose(a);
    UniPoly prod = UniPoly({sq.unit});
    bool factors_ok = true;
    for (const auto& [factor, mult] : sq.factors) {
      prod = prod * factor.pow(static_cast<unsigned>(mult));
      factors_ok = factors_ok && poly_gcd(factor, factor.derivative()).degree() == 0;
    }
    cr.check(prod == a && factors_ok, "squarefree decomposition round trip " + std::to_string(trial));
  }

  std::vector<WeierstrassSurface> surfaces{g_surface(igusa_clebsch(Genus2Curve(qm_poly())), 3),
                                           h_surface(kParams, 1), intermediate_fibration(kParams)};
  for (const auto& s : surfaces) {
    Row base = row_of(classify_fibers(s));
    for (int trial = 0; trial < 3; ++trial) {
      RF u = mono(oracle::random_rational(rng, 9, true), static_cast<long>(rng() % 5) - 2);
      cr.check(row_of(classify_fibers(rescale(s, u))) == base, "classifier invariance under rescaling");
    }
  }

  for (int trial = 0; trial < 50; ++trial) {
    auto h = h_coefficients(random_hparams(rng));
    cr.check(h.B3 == -h.B1 * h.C2, "B3 = -B1 C2");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto add = [&](int id, const std::string& title, void (*body)(Criterion&)) {
    Criterion cr(id, title);
    cr.run(body);
    cr.print();
    results.push_back(cr);
  };
  add(1, "G^(n) fiber and rank table", g_table);
  add(2, "H^(n) fiber and rank table", h_table);
  add(3, "fibration 13 equals G^(2) after the change of variables", fibration13);
  add(4, "QM example", qm_example);
  add(5, "split example", split_example);
  add(6, "Frobenius data and rho = 1 certificate for (a,b,c) = (-1,1/7,-6/7)", certificate_example);
  add(7, "intermediate fibration", intermediate);
  add(8, "property suites", properties);
  int failed = 0;
  for (const auto& r : results) failed += r.passed() ? 0 : 1;
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
