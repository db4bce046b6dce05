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

#include "k3mw/ellsurf/fibers.hpp"

#include <algorithm>
#include <map>

#include "k3mw/error.hpp"
#include "k3mw/exact/poly_algorithms.hpp"

namespace k3mw {

std::string Place::str(const std::string& var) const {
  switch (kind) {
    case Kind::kRational: return var + " = " + to_string(value);
    case Kind::kInfinity: return var + " = oo";
    case Kind::kCluster: return cluster.str(var) + " = 0";
  }
  throw InternalError("unknown place kind");
}

int KodairaType::components() const {
  switch (kind) {
    case KodairaKind::kIn: return n;
    case KodairaKind::kInStar: return n + 5;
    case KodairaKind::kII: return 1;
    case KodairaKind::kIII: return 2;
    case KodairaKind::kIV: return 3;
    case KodairaKind::kIVStar: return 7;
    case KodairaKind::kIIIStar: return 8;
    case KodairaKind::kIIStar: return 9;
  }
  throw InternalError("unknown Kodaira kind");
}

int KodairaType::euler() const {
  switch (kind) {
    case KodairaKind::kIn: return n;
    case KodairaKind::kInStar: return n + 6;
    case KodairaKind::kII: return 2;
    case KodairaKind::kIII: return 3;
    case KodairaKind::kIV: return 4;
    case KodairaKind::kIVStar: return 8;
    case KodairaKind::kIIIStar: return 9;
    case KodairaKind::kIIStar: return 10;
  }
  throw InternalError("unknown Kodaira kind");
}

std::string KodairaType::name() const {
  switch (kind) {
    case KodairaKind::kIn: return "I" + std::to_string(n);
    case KodairaKind::kInStar: return "I" + std::to_string(n) + "*";
    case KodairaKind::kII: return "II";
    case KodairaKind::kIII: return "III";
    case KodairaKind::kIV: return "IV";
    case KodairaKind::kIVStar: return "IV*";
    case KodairaKind::kIIIStar: return "III*";
    case KodairaKind::kIIStar: return "II*";
  }
  throw InternalError("unknown Kodaira kind");
}

KodairaType KodairaType::parse(const std::string& name) {
  static const std::map<std::string, KodairaKind> kFixed{
      {"II", KodairaKind::kII},         {"III", KodairaKind::kIII},       {"IV", KodairaKind::kIV},
      {"IV*", KodairaKind::kIVStar},    {"III*", KodairaKind::kIIIStar}, {"II*", KodairaKind::kIIStar}};
  if (auto it = kFixed.find(name); it != kFixed.end()) return {it->second, 0};
  if (name.size() >= 2 && name[0] == 'I') {
    bool star = name.back() == '*';
    std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int n = std::stoi(digits);
      if (star || n >= 1) return {star ? KodairaKind::kInStar : KodairaKind::kIn, n};
    }
  }
  throw ParseError("unknown Kodaira type '" + name + "'");
}

std::optional<KodairaType> kodaira_from_valuations(std::optional<long> c4, std::optional<long> c6, long vdisc) {
  if (!c4 && !c6) throw MathError("singular equation: c4 and c6 both vanish");
  auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  long k = floor_div(vdisc, 12);
  if (c4) k = std::min(k, floor_div(*c4, 4));
  if (c6) k = std::min(k, floor_div(*c6, 6));
  constexpr long kInfinite = 1L << 40;
  long v4 = c4 ? *c4 - 4 * k : kInfinite;
  long v6 = c6 ? *c6 - 6 * k : kInfinite;
  vdisc -= 12 * k;
  if (vdisc == 0) return std::nullopt;
  if (v4 == 0) return KodairaType{KodairaKind::kIn, static_cast<int>(vdisc)};
  if (v4 == 2 && v6 == 3 && vdisc > 6) return KodairaType{KodairaKind::kInStar, static_cast<int>(vdisc - 6)};
  switch (vdisc) {
    case 2: return KodairaType{KodairaKind::kII, 0};
    case 3: return KodairaType{KodairaKind::kIII, 0};
    case 4: return KodairaType{KodairaKind::kIV, 0};
    case 6: return KodairaType{KodairaKind::kInStar, 0};
    case 8: return KodairaType{KodairaKind::kIVStar, 0};
    case 9: return KodairaType{KodairaKind::kIIIStar, 0};
    case 10: return KodairaType{KodairaKind::kIIStar, 0};
    default: break;
  }
  throw InternalError("valuations (" + std::to_string(v4) + ", " + std::to_string(v6) + ", " + std::to_string(vdisc) +
                      ") match no Kodaira type");
}

long FiberConfiguration::reducible_correction() const {
  long sum = 0;
  for (const auto& f : fibers) sum += (f.components - 1) * f.count;
  return sum;
}

long FiberConfiguration::count(const KodairaType& t) const {
  long sum = 0;
  for (const auto& f : fibers)
    if (f.type == t) sum += f.count;
  return sum;
}

std::string FiberConfiguration::summary() const {
  std::vector<std::pair<std::string, long>> order;
  for (const auto& f : fibers) {
    auto name = f.type.name();
    auto it = std::find_if(order.begin(), order.end(), [&name](const auto& e) { return e.first == name; });
    if (it == order.end()) {
      order.emplace_back(name, f.count);
    } else {
      it->second += f.count;
    }
  }
  std::string out;
  for (const auto& [name, n] : order) {
    if (!out.empty()) out += " + ";
    out += (n == 1 ? "" : std::to_string(n) + " ") + name;
  }
  return out.empty() ? "none" : out;
}

namespace {

std::optional<long> valuation(const RationalFunction& f, const UniPoly& q) {
  if (f.is_zero()) return std::nullopt;
  return static_cast<long>(multiplicity(f.num(), q)) - static_cast<long>(multiplicity(f.den(), q));
}

struct Valuations {
  std::optional<long> v4;
  std::optional<long> v6;
  long vdisc;
};

}  // namespace

FiberConfiguration classify_fibers(const WeierstrassSurface& s) {
  auto q = c4_c6_disc(s);
  std::vector<UniPoly> inputs{q.disc.num(), q.disc.den()};
  for (const auto* f : {&q.c4, &q.c6})
    if (!f->is_zero()) {
      inputs.push_back(f->num());
      inputs.push_back(f->den());
    }

  FiberConfiguration cfg;
  auto add = [&cfg](const Place& place, const Valuations& v) {
    auto type = kodaira_from_valuations(v.v4, v.v6, v.vdisc);
    if (!type) return;
    KodairaFiber f;
    f.type = *type;
    f.place = place;
    f.count = place.degree();
    f.components = type->components();
    f.euler = type->euler();
    cfg.fibers.push_back(std::move(f));
  };

  std::vector<std::pair<BigRational, Valuations>> rational;
  std::vector<std::pair<UniPoly, Valuations>> clusters;
  for (const auto& b : coprime_basis(inputs)) {
    Valuations v{valuation(q.c4, b), valuation(q.c6, b), *valuation(q.disc, b)};
    UniPoly rest = b;
    for (const auto& r : rational_roots(b)) {
      rational.emplace_back(r, v);
      rest = rest.exact_div(UniPoly{BigRational(-r), BigRational(1)});
    }
    if (rest.degree() >= 1) clusters.emplace_back(rest.monic(), v);
  }
  std::sort(rational.begin(), rational.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::stable_sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    auto ca = a.first.coeffs();
    auto cb = b.first.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  for (const auto& [r, v] : rational) add(Place::rational(r), v);
  for (const auto& [c, v] : clusters) add(Place::bundle(c), v);

  auto at_infinity = [](const RationalFunction& f) -> std::optional<long> {
    if (f.is_zero()) return std::nullopt;
    return f.valuation_at_infinity();
  };
  Valuations inf{at_infinity(q.c4), at_infinity(q.c6), q.disc.valuation_at_infinity()};
  add(Place::infinity(), inf);

  for (const auto& f : cfg.fibers) cfg.euler_total += static_cast<long>(f.euler) * f.count;
  return cfg;
}

bool is_k3(const FiberConfiguration& cfg) { return cfg.euler_total == 24; }

long shioda_tate_rank(const FiberConfiguration& cfg, long rho_NS) {
  if (rho_NS < 2) throw MathError("Picard number of an elliptic surface is at least 2");
  long rank = rho_NS - 2 - cfg.reducible_correction();
  if (rank < 0) throw MathError("inconsistent Picard input: Shioda-Tate gives a negative rank");
  return rank;
}

long rank_offset(const FiberConfiguration& cfg) { return 14 - cfg.reducible_correction(); }

std::string rank_formula(const FiberConfiguration& cfg) {
  long k = rank_offset(cfg);
  if (k == 0) return "ρ";
  if (k < 0) return "ρ" + std::to_string(k);
  return std::to_string(k) + "+ρ";
}

}  // namespace k3mw
