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

#include <sstream>

#include "k3mw/constructions/igusa_surfaces.hpp"
#include "k3mw/constructions/two_ivstar.hpp"
#include "k3mw/error.hpp"
#include "k3mw/genus2/certify.hpp"
#include "k3mw/genus2/point_count.hpp"
#include "k3mw_cli/cli.hpp"
#include "report.hpp"

namespace k3mw::cli {

namespace {

std::optional<long> rank_or_none(const FiberConfiguration& cfg, long rho) {
  try {
    return shioda_tate_rank(cfg, 16 + rho);
  } catch (const MathError&) {
    return std::nullopt;
  }
}

HParams parse_abc(const std::vector<std::string>& abc) {
  if (abc.size() != 3) throw ParseError("--abc expects three rationals A B C");
  return {parse_rational(abc[0]), parse_rational(abc[1]), parse_rational(abc[2])};
}

Genus2Curve require_curve(const Options& o) {
  if (o.curve.empty()) throw ParseError("--curve FILE is required");
  return io::load_curve(o.curve);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

void CheckList::add(const std::string& name, bool pass, const std::string& detail) {
  entries_.push_back({name, pass, detail});
}

bool CheckList::all_passed() const {
  for (const auto& e : entries_)
    if (!e.pass) return false;
  return true;
}

Json CheckList::json() const {
  Json out = Json::array();
  for (const auto& e : entries_) out.push_back(Json{{"check", e.name}, {"pass", e.pass}, {"detail", e.detail}});
  return out;
}

void CheckList::render(Report& r) const {
  for (const auto& e : entries_)
    r.line(std::string(e.pass ? "[PASS] " : "[FAIL] ") + e.name + (e.detail.empty() ? "" : ": " + e.detail));
}

Json surface_block(const std::string& name, const WeierstrassSurface& s, const FiberConfiguration& cfg,
                   std::optional<long> rho) {
  Json out;
  out["name"] = name;
  out["surface"] = io::to_json(s);
  out["equation"] = s.str();
  out["fibers"] = io::to_json(cfg);
  out["rank_formula"] = rank_formula(cfg);
  Json by_rho;
  for (long r = 1; r <= 4; ++r) {
    auto v = rank_or_none(cfg, r);
    by_rho[std::to_string(r)] = v ? Json(*v) : Json(nullptr);
  }
  out["rank_by_rho"] = by_rho;
  if (rho) {
    out["rho"] = *rho;
    out["rank"] = shioda_tate_rank(cfg, 16 + *rho);
  }
  return out;
}

void render_surface(Report& r, const std::string& name, const WeierstrassSurface& s, const FiberConfiguration& cfg,
                    std::optional<long> rho) {
  r.line(name + ": " + s.str());
  r.line("  singular fibers: " + cfg.summary());
  r.line("  euler total: " + std::to_string(cfg.euler_total) + (is_k3(cfg) ? " (K3)" : " (not K3)"));
  r.line("  rank formula: " + rank_formula(cfg));
  std::vector<std::string> vals;
  for (long k = 1; k <= 4; ++k) {
    auto v = rank_or_none(cfg, k);
    vals.push_back(v ? std::to_string(*v) : "-");
  }
  r.line("  rank for rho = 1, 2, 3, 4: " + join(vals, ", "));
  if (rho) r.line("  rank (rho = " + std::to_string(*rho) + "): " + std::to_string(shioda_tate_rank(cfg, 16 + *rho)));
}

Report cmd_invariants(const Options& o) {
  Genus2Curve c = require_curve(o);
  IgusaClebsch ic = igusa_clebsch(c);
  Report r;
  r.json["command"] = "invariants";
  r.json["inputs"] = io::to_json(c);
  r.json["igusa_clebsch"] = io::to_json(ic);
  r.line("curve: y^2 = " + c.f().str("x"));
  r.line("I2  = " + to_string(ic.I2));
  r.line("I4  = " + to_string(ic.I4));
  r.line("I6  = " + to_string(ic.I6));
  r.line("I10 = " + to_string(ic.I10));
  return r;
}

Report cmd_construct(const std::string& kind, const Options& o) {
  long n = o.n_given ? o.n : 1;
  Report r;
  r.json["command"] = "construct";
  r.json["kind"] = kind;
  Json inputs;
  WeierstrassSurface s;
  std::string name;
  if (kind == "h") {
    if (n < 1 || n > 3) throw MathError("H^(n) is K3 only for n <= 3 (n must be 1..3)");
    HParams p = parse_abc(o.abc);
    inputs["hparams"] = io::to_json(p);
    inputs["n"] = n;
    s = h_surface(p, n);
    name = "H^(" + std::to_string(n) + ")";
  } else {
    if (kind == "g" && (n < 1 || n > 4)) throw MathError("G^(n) is K3 only for n <= 4 (n must be 1..4)");
    Genus2Curve c = require_curve(o);
    IgusaClebsch ic = igusa_clebsch(c);
    inputs["curve"] = io::to_json(c)["genus2"];
    inputs["igusa_clebsch"] = io::to_json(ic);
    if (kind == "g") {
      inputs["n"] = n;
      s = g_surface(ic, n);
      name = "G^(" + std::to_string(n) + ")";
    } else if (kind == "eq1") {
      s = shioda_inose_surface(ic);
      name = "II*/III* surface";
    } else {
      s = kummer_fibration13(ic);
      name = "fibration 13";
    }
  }
  r.json["inputs"] = inputs;
  FiberConfiguration cfg = classify_fibers(s);
  r.json["result"] = surface_block(name, s, cfg, o.rho);
  render_surface(r, name, s, cfg, o.rho);
  return r;
}

Report cmd_certify(const Options& o) {
  Genus2Curve c = require_curve(o);
  if (o.primes.empty()) throw ParseError("--primes P1 P2 ... is required");
  Report r;
  r.json["command"] = "certify";
  r.json["inputs"] = Json{{"curve", io::to_json(c)["genus2"]}, {"primes", o.primes}};
  PicardCertificate cert;
  try {
    cert = certify_picard_one(c, o.primes);
  } catch (const MathError& e) {
    Json rejected = Json::array();
    r.line("curve: y^2 = " + c.f().str("x"));
    for (auto p : o.primes) {
      if (auto why = bad_reduction_reason(c, p)) {
        rejected.push_back(Json{{"p", p}, {"reason", *why}});
        r.line("p = " + std::to_string(p) + " rejected: " + *why);
      }
    }
    r.json["certificate"] = Json{{"primes_rejected", rejected}, {"conclusion", "inconclusive"}, {"reason", e.what()}};
    r.line(std::string("no certificate: ") + e.what());
    r.line("conclusion: inconclusive");
    r.exit_code = kMathFailure;
    return r;
  }
  r.json["certificate"] = io::to_json(cert);
  r.line("curve: y^2 = " + c.f().str("x"));
  for (const auto& rec : cert.records)
    r.line("p = " + std::to_string(rec.p) + ": " + rec.weil.poly().str("x") + "  [" + to_string(rec.galois.galois) +
           ", real quadratic kernel " + to_string(rec.real_quadratic.kernel) + "]");
  for (const auto& [p, why] : cert.primes_rejected) r.line("p = " + std::to_string(p) + " rejected: " + why);
  r.line(cert.summary);
  r.line(cert.rho ? "conclusion: rho(J(C)) = " + std::to_string(*cert.rho) : "conclusion: inconclusive");
  r.exit_code = cert.rho ? kSuccess : kMathFailure;
  return r;
}

}  // namespace k3mw::cli
