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

#include <filesystem>

#include "k3mw/constructions/cover.hpp"
#include "k3mw/constructions/elliptic_curve.hpp"
#include "k3mw/constructions/igusa_surfaces.hpp"
#include "k3mw/constructions/two_ivstar.hpp"
#include "k3mw/error.hpp"
#include "k3mw/genus2/certify.hpp"
#include "k3mw/genus2/galois.hpp"
#include "k3mw/genus2/point_count.hpp"
#include "k3mw_cli/cli.hpp"
#include "report.hpp"

namespace k3mw::cli {

namespace {

std::string iso_detail(const std::optional<IsoMatch>& m) { return m ? describe(*m) : "no match found"; }

std::optional<KodairaType> type_at(const FiberConfiguration& cfg, const Place& where) {
  for (const auto& f : cfg.fibers) {
    if (f.place.kind != where.kind) continue;
    if (where.kind == Place::Kind::kRational && f.place.value != where.value) continue;
    return f.type;
  }
  return std::nullopt;
}

Place place_from_string(const std::string& s) {
  return s == "infinity" ? Place::infinity() : Place::rational(parse_rational(s));
}

/// Rank of G^(n) or H^(n) and the endomorphism-class lookup for rho.
long rank_from_class(CheckList& checks, Json& out, const FiberConfiguration& cfg, const std::string& cls,
                     long expected) {
  EndomorphismClass ec = parse_endomorphism_class(cls);
  long rho = picard_from_endomorphism_class(ec);
  long rank = shioda_tate_rank(cfg, 16 + rho);
  out["rho"] = Json{{"value", rho}, {"source", "endomorphism class " + to_string(ec)}};
  out["rank"] = rank;
  checks.add("rank " + std::to_string(expected) + " given rho = " + std::to_string(rho), rank == expected,
             "rank " + std::to_string(rank));
  return rank;
}

void check_fibers(CheckList& checks, const FiberConfiguration& cfg, const std::string& expected) {
  checks.add("fiber configuration " + expected, cfg.summary() == expected, cfg.summary());
  checks.add("euler total 24", is_k3(cfg), std::to_string(cfg.euler_total));
}

Report reproduce_qm(const Json& data) {
  Report r;
  CheckList checks;
  Genus2Curve c = io::curve_from_json(data);
  IgusaClebsch ic = igusa_clebsch(c);
  long n = data.at("n").get<long>();
  WeierstrassSurface g = g_surface(ic, n);
  FiberConfiguration cfg = classify_fibers(g);
  WeierstrassSurface ref = io::surface_from_json(data.at("reference_surface"));
  auto m = same_surface_up_to_iso(g, ref);
  checks.add("constructed G^(4) is isomorphic to the reference equation", m.has_value(), iso_detail(m));

  const Json& tw = data.at("twist");
  BigRational d = parse_rational(tw.at("d").get<std::string>());
  WeierstrassSurface simple = io::surface_from_json(tw.at("reference_surface"));
  auto mt = same_surface_up_to_iso(quadratic_twist(ref, d), simple);
  checks.add("twist by " + to_string(d) + " gives the simplified equation", mt.has_value() && mt->d == 1,
             iso_detail(mt));
  checks.add("simplified equation twisted back by " + to_string(d) + " is the reference",
             quadratic_twist(simple, d) == ref);
  check_fibers(checks, cfg, data.at("expected").at("fibers").get<std::string>());
  r.json["igusa_clebsch"] = io::to_json(ic);
  r.json["surface"] = surface_block("G^(4)", g, cfg, std::nullopt);
  long rank = rank_from_class(checks, r.json, cfg, data.at("endomorphism_class").get<std::string>(),
                              data.at("expected").at("rank").get<long>());
  r.json["checks"] = checks.json();
  checks.render(r);
  r.line("rank of G^(4): " + std::to_string(rank) + " (given ρ = 3, quaternionic multiplication)");
  r.exit_code = checks.all_passed() ? kSuccess : kMathFailure;
  return r;
}

Report reproduce_split(const Json& data) {
  Report r;
  CheckList checks;
  Genus2Curve c = io::curve_from_json(data);
  const Json& ecs = data.at("elliptic_curves");
  EllipticCurveQ e1 = io::elliptic_curve_from_json(ecs.at("E1").at("model"));
  EllipticCurveQ e2 = io::elliptic_curve_from_json(ecs.at("E2").at("model"));
  EllipticCurveQ e1s = io::elliptic_curve_from_json(ecs.at("E1").at("short_model"));
  EllipticCurveQ e2t = io::elliptic_curve_from_json(ecs.at("E2").at("twisted_short_model"));
  BigRational j1 = ec_j_invariant(e1), j2 = ec_j_invariant(e2);
  checks.add("j(E1) = (215/28)^3", j1 == parse_rational(ecs.at("E1").at("j").get<std::string>()), to_string(j1));
  checks.add("j(E2) = (1705/98)^3", j2 == parse_rational(ecs.at("E2").at("j").get<std::string>()), to_string(j2));
  checks.add("E1 has a rational 6-torsion point", has_rational_n_torsion(e1, 6));
  checks.add("E2 has a rational 6-torsion point", has_rational_n_torsion(e2, 6));
  checks.add("short model of E1", e1.short_model() == e1s);
  BigRational d = parse_rational(ecs.at("E2").at("twist_d").get<std::string>());
  auto u = ec_isomorphism_scale(ec_quadratic_twist(e2, d), e2t);
  checks.add("twist of E2 by " + to_string(d) + " matches its short model", u.has_value(),
             u ? "u = " + to_string(*u) : "no scaling");

  Json covers;
  for (const auto& [key, target] : {std::pair{"phi1", e1s}, std::pair{"phi2", e2t}}) {
    CoverMap m = io::cover_from_json(data.at("covers").at(key));
    CoverCheck cc = verify_cover(c, target, m);
    covers[key] = Json{{"ok", cc.ok}, {"degree", cc.degree}};
    long expected = data.at("expected").at("cover_degree").get<long>();
    checks.add(std::string(key) + " is a cover of degree " + std::to_string(expected), cc.ok && cc.degree == expected,
               cc.describe());
  }
  r.json["covers"] = covers;

  IgusaClebsch ic = igusa_clebsch(c);
  long n = data.at("n").get<long>();
  WeierstrassSurface g = g_surface(ic, n);
  FiberConfiguration cfg = classify_fibers(g);
  auto m = same_surface_up_to_iso(g, io::surface_from_json(data.at("reference_surface")));
  checks.add("constructed G^(4) is isomorphic to the reference equation", m.has_value(), iso_detail(m));
  check_fibers(checks, cfg, data.at("expected").at("fibers").get<std::string>());

  std::vector<std::uint64_t> primes = data.at("certify_primes").get<std::vector<std::uint64_t>>();
  std::string outcome;
  bool certified_one = false;
  try {
    PicardCertificate cert = certify_picard_one(c, primes);
    certified_one = cert.rho.has_value();
    outcome = cert.summary;
  } catch (const MathError& e) {
    outcome = std::string("inconclusive: ") + e.what();
  }
  checks.add("Picard certificate never claims rho = 1", !certified_one, outcome);
  r.json["certification"] = Json{{"primes", primes}, {"outcome", outcome}};

  r.json["igusa_clebsch"] = io::to_json(ic);
  r.json["surface"] = surface_block("G^(4)", g, cfg, std::nullopt);
  long rank = rank_from_class(checks, r.json, cfg, data.at("endomorphism_class").get<std::string>(),
                              data.at("expected").at("rank").get<long>());
  r.json["documentation"] = data.at("documentation");
  r.json["checks"] = checks.json();
  checks.render(r);
  r.line("rank of G^(4): " + std::to_string(rank) + " (given ρ = 3, E1 and E2 isogenous without CM)");
  r.exit_code = checks.all_passed() ? kSuccess : kMathFailure;
  return r;
}

Report reproduce_example43(const Json& data) {
  Report r;
  CheckList checks;
  HParams p = io::hparams_from_json(data.at("hparams"));
  Genus2Curve c = genus2_from_hparams(p);
  checks.add("curve from (a, b, c)", c.f() == io::curve_from_json(data).f(), c.f().str("x"));
  const Json& expected = data.at("expected");

  Json charpolys;
  for (const auto& [key, coeffs] : data.at("reference_charpolys").items()) {
    std::uint64_t prime = std::stoull(key);
    UniPoly got = frobenius_charpoly(c, prime).poly();
    charpolys[key] = io::to_json(got);
    checks.add("Frobenius charpoly at " + key, got == io::poly_from_json(coeffs), got.str("x"));
  }
  r.json["charpolys"] = charpolys;
  GaloisClass g37 = quartic_galois_class(frobenius_charpoly(c, 37).poly());
  checks.add("Galois group at 37 is " + expected.at("galois_37").get<std::string>(),
             to_string(g37) == expected.at("galois_37").get<std::string>(), to_string(g37));

  std::vector<std::uint64_t> primes = data.at("primes").get<std::vector<std::uint64_t>>();
  PicardCertificate cert = certify_picard_one(c, primes);
  r.json["certificate"] = io::to_json(cert);
  checks.add("rho(J(C)) = 1 certified", cert.rho == 1, cert.summary);
  for (const auto& rec : cert.records) {
    std::string key = std::to_string(rec.p);
    if (!expected.at("real_quadratic_kernels").contains(key)) continue;
    std::string want = expected.at("real_quadratic_kernels").at(key).get<std::string>();
    checks.add("real quadratic kernel at " + key + " is " + want, to_string(rec.real_quadratic.kernel) == want,
               to_string(rec.real_quadratic.kernel));
  }

  long n = data.at("n").get<long>();
  WeierstrassSurface h = h_surface(p, n);
  FiberConfiguration cfg = classify_fibers(h);
  check_fibers(checks, cfg, expected.at("fibers").get<std::string>());
  auto m = same_surface_up_to_iso(h, io::surface_from_json(data.at("reference_surface")));
  checks.add("constructed H^(3) is isomorphic to the reference equation", m.has_value(), iso_detail(m));

  FiberConfiguration inter = classify_fibers(intermediate_fibration(p));
  for (const auto& [type, places] : expected.at("intermediate").items()) {
    for (const auto& where : places) {
      auto got = type_at(inter, place_from_string(where.get<std::string>()));
      checks.add("intermediate fibration has " + type + " at t1 = " + where.get<std::string>(),
                 got && got->name() == type, got ? got->name() : "smooth");
    }
  }
  checks.add("intermediate fibration euler total 24", is_k3(inter), std::to_string(inter.euler_total));
  r.json["intermediate"] = io::to_json(inter);

  long rho = cert.rho.value_or(1);
  long rank = shioda_tate_rank(cfg, 16 + rho);
  checks.add("rank " + std::to_string(expected.at("rank").get<long>()) + " given the certified rho",
             cert.rho && rank == expected.at("rank").get<long>(), std::to_string(rank));
  r.json["surface"] = surface_block("H^(3)", h, cfg, rho);
  r.json["checks"] = checks.json();
  checks.render(r);
  r.line("MW rank of H^(3) over the algebraic closure: " + std::to_string(rank));
  r.exit_code = checks.all_passed() ? kSuccess : kMathFailure;
  return r;
}

}  // namespace

Report cmd_reproduce(const std::string& example, const Options& o) {
  std::filesystem::path dir = o.data_dir.empty() ? default_data_dir() : o.data_dir;
  std::string file = example == "qm" ? "qm_curve.json" : example == "split" ? "split_curve.json" : "example43.json";
  Json data = io::read_json_file(dir / file);
  Report r;
  try {
    r = example == "qm" ? reproduce_qm(data) : example == "split" ? reproduce_split(data) : reproduce_example43(data);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(file + ": " + e.what());
  }
  Json out;
  out["command"] = "reproduce";
  out["example"] = example;
  out["inputs"] = Json{{"data", file}};
  for (auto& [k, v] : r.json.items()) out[k] = v;
  r.json = out;
  return r;
}

}  // namespace k3mw::cli
