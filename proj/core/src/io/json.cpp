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

#include "k3mw/io/json.hpp"

#include <fstream>
#include <sstream>

#include "k3mw/error.hpp"

namespace k3mw::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

BigRational rational_member(const Json& j, const char* key) {
  return parse_rational(string_value(member(j, key), key));
}

RationalFunction rf_member(const Json& j, const char* key) {
  if (!j.contains(key)) return RationalFunction();
  return RationalFunction::parse(string_value(j.at(key), key));
}

Json place_json(const Place& p) {
  Json out;
  switch (p.kind) {
    case Place::Kind::kRational:
      out["kind"] = "rational";
      out["value"] = to_string(p.value);
      break;
    case Place::Kind::kInfinity:
      out["kind"] = "infinity";
      break;
    case Place::Kind::kCluster:
      out["kind"] = "cluster";
      out["poly"] = to_json(p.cluster);
      break;
  }
  return out;
}

Json u64_list(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json pattern_json(const std::vector<unsigned>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& s : coefficient_strings(p)) out.push_back(s);
  return out;
}

UniPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of rational strings");
  std::vector<std::string> coeffs;
  for (const auto& x : j) coeffs.push_back(string_value(x, "coefficient"));
  return parse_poly(coeffs);
}

Json to_json(const Genus2Curve& c) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i <= 6; ++i) coeffs.push_back(to_string(c.coefficient(i)));
  return Json{{"genus2", coeffs}};
}

Genus2Curve curve_from_json(const Json& j) {
  const Json& coeffs = member(j, "genus2");
  if (!coeffs.is_array() || coeffs.size() > 7) throw ParseError("\"genus2\" must list at most 7 coefficients");
  return Genus2Curve(poly_from_json(coeffs));
}

Genus2Curve load_curve(const std::filesystem::path& path) { return curve_from_json(read_json_file(path)); }

Json to_json(const IgusaClebsch& ic) {
  return Json{{"I2", to_string(ic.I2)}, {"I4", to_string(ic.I4)}, {"I6", to_string(ic.I6)}, {"I10", to_string(ic.I10)}};
}

Json to_json(const WeierstrassSurface& s) {
  Json w;
  w["a1"] = s.a1.serialize();
  w["a2"] = s.a2.serialize();
  w["a3"] = s.a3.serialize();
  w["a4"] = s.a4.serialize();
  w["a6"] = s.a6.serialize();
  return Json{{"weierstrass", w}};
}

WeierstrassSurface surface_from_json(const Json& j) {
  const Json& w = member(j, "weierstrass");
  if (!w.is_object()) throw ParseError("\"weierstrass\" must be an object");
  return {rf_member(w, "a1"), rf_member(w, "a2"), rf_member(w, "a3"), rf_member(w, "a4"), rf_member(w, "a6")};
}

Json to_json(const FiberConfiguration& cfg) {
  Json fibers = Json::array();
  for (const auto& f : cfg.fibers) {
    Json e;
    e["type"] = f.type.name();
    e["place"] = place_json(f.place);
    e["count"] = f.count;
    e["components"] = f.components;
    e["euler"] = f.euler;
    fibers.push_back(e);
  }
  Json out;
  out["fibers"] = fibers;
  out["summary"] = cfg.summary();
  out["euler_total"] = cfg.euler_total;
  out["is_k3"] = is_k3(cfg);
  return out;
}

Json to_json(const HParams& p) { return Json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)}}; }

HParams hparams_from_json(const Json& j) {
  return {rational_member(j, "a"), rational_member(j, "b"), rational_member(j, "c")};
}

Json to_json(const EllipticCurveQ& e) {
  return Json{{"a1", to_string(e.a1)}, {"a2", to_string(e.a2)}, {"a3", to_string(e.a3)},
              {"a4", to_string(e.a4)}, {"a6", to_string(e.a6)}};
}

EllipticCurveQ elliptic_curve_from_json(const Json& j) {
  return {rational_member(j, "a1"), rational_member(j, "a2"), rational_member(j, "a3"), rational_member(j, "a4"),
          rational_member(j, "a6")};
}

Json to_json(const CoverMap& m) {
  return Json{{"x_num", to_json(m.x_map.num())},
              {"x_den", to_json(m.x_map.den())},
              {"y_num", to_json(m.y_factor.num())},
              {"y_den", to_json(m.y_factor.den())}};
}

CoverMap cover_from_json(const Json& j) {
  return {RationalFunction(poly_from_json(member(j, "x_num")), poly_from_json(member(j, "x_den"))),
          RationalFunction(poly_from_json(member(j, "y_num")), poly_from_json(member(j, "y_den")))};
}

Json to_json(const WeilPolynomial& w) {
  return Json{{"p", w.p}, {"a1", w.a1}, {"a2", w.a2}, {"poly", to_json(w.poly())}};
}

Json to_json(const PicardCertificate& cert) {
  Json out;
  out["curve"] = to_json(cert.curve);
  out["primes_requested"] = u64_list(cert.primes_requested);
  out["primes_used"] = u64_list(cert.primes_used);
  Json rejected = Json::array();
  for (const auto& [p, why] : cert.primes_rejected) rejected.push_back(Json{{"p", p}, {"reason", why}});
  out["primes_rejected"] = rejected;
  Json records = Json::array();
  for (const auto& r : cert.records) {
    Json rec;
    rec["p"] = r.p;
    rec["n1"] = r.n1;
    rec["n2"] = r.n2;
    rec["weil"] = to_json(r.weil);
    Json g;
    g["class"] = to_string(r.galois.galois);
    g["resolvent"] = to_json(r.galois.resolvent);
    Json roots = Json::array();
    for (const auto& x : r.galois.resolvent_roots) roots.push_back(to_string(x));
    g["resolvent_roots"] = roots;
    g["discriminant"] = to_string(r.galois.discriminant);
    if (r.galois.factor) g["factor"] = to_json(*r.galois.factor);
    rec["galois"] = g;
    rec["real_quadratic"] = Json{{"poly", to_json(r.real_quadratic.quadratic)},
                                 {"discriminant", to_string(r.real_quadratic.discriminant)},
                                 {"kernel", to_string(r.real_quadratic.kernel)},
                                 {"degenerate", r.real_quadratic.degenerate}};
    records.push_back(rec);
  }
  out["records"] = records;
  out["simplicity_witness"] = cert.simplicity_witness ? Json(*cert.simplicity_witness) : Json(nullptr);
  if (cert.disjointness) {
    const auto& d = *cert.disjointness;
    Json w;
    w["route"] = to_string(d.route);
    w["p1"] = d.p1;
    w["p2"] = d.p2;
    w["ell"] = d.ell;
    if (!d.resultant.is_zero()) w["resultant"] = to_json(d.resultant);
    if (!d.pattern1.empty()) {
      w["pattern1"] = pattern_json(d.pattern1);
      w["pattern2"] = pattern_json(d.pattern2);
    }
    out["disjointness"] = w;
  } else {
    out["disjointness"] = nullptr;
  }
  out["resultant_route_bound"] = cert.resultant_route_bound;
  out["resultant_route_succeeded"] = cert.resultant_route_succeeded;
  out["conclusion"] = cert.rho ? "rho = " + std::to_string(*cert.rho) : std::string("inconclusive");
  out["summary"] = cert.summary;
  return out;
}

}  // namespace k3mw::io
