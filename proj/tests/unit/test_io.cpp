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

#include "k3mw/constructions/igusa_surfaces.hpp"
#include "k3mw/io/json.hpp"

using namespace k3mw;
using io::Json;

namespace {

BigRational R(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("curve records") {
  Genus2Curve c(UniPoly({R(1), R(0), R(0), R(0), R(0), R(1)}));
  Json j = io::to_json(c);
  CHECK(j.dump() == R"({"genus2":["1","0","0","0","0","1","0"]})");
  CHECK(io::curve_from_json(j).f() == c.f());
  CHECK(io::curve_from_json(Json::parse(R"({"genus2": ["-1/2", "0", "0", "0", "0", "0", "3"], "note": 1})")).degree() ==
        6);
  CHECK_THROWS_AS(io::curve_from_json(Json::parse(R"({"genus2": [1, 2]})")), ParseError);
  CHECK_THROWS_AS(io::curve_from_json(Json::parse(R"({"genus2": ["1/0"]})")), ParseError);
  CHECK_THROWS_AS(io::curve_from_json(Json::parse(R"({"g": []})")), ParseError);
  CHECK_THROWS_AS(io::curve_from_json(Json::parse(R"({"genus2": ["1","0","0","0","0","0","0","1"]})")), ParseError);
  CHECK_THROWS_AS(io::curve_from_json(Json::parse(R"({"genus2": ["1", "1"]})")), MathError);
}

TEST_CASE("surface records round-trip") {
  IgusaClebsch ic{R(3, 2), R(-5), R(7, 3), R(11)};
  for (long n = 1; n <= 4; ++n) {
    WeierstrassSurface s = g_surface(ic, n);
    Json j = io::to_json(s);
    CHECK(j.at("weierstrass").size() == 5);
    CHECK(io::surface_from_json(j) == s);
  }
  CHECK(io::surface_from_json(Json::parse(R"({"weierstrass": {"a4": "[1]", "a6": "[0,1]"}})")) ==
        WeierstrassSurface::short_form(RationalFunction(R(1)), RationalFunction::variable()));
  CHECK_THROWS_AS(io::surface_from_json(Json::parse(R"({"weierstrass": {"a4": "[1"}})")), ParseError);
}

TEST_CASE("parameter, curve and cover records") {
  HParams p{R(-1), R(1, 7), R(-6, 7)};
  Json jp = io::to_json(p);
  CHECK(jp.dump() == R"({"a":"-1","b":"1/7","c":"-6/7"})");
  HParams q = io::hparams_from_json(jp);
  CHECK((q.a == p.a && q.b == p.b && q.c == p.c));
  EllipticCurveQ e{R(1), R(0), R(1), R(4), R(-6)};
  CHECK(io::elliptic_curve_from_json(io::to_json(e)) == e);
  CoverMap m{RationalFunction(UniPoly({R(1), R(2)}), UniPoly({R(3), R(1)})), RationalFunction(R(5))};
  CoverMap back = io::cover_from_json(io::to_json(m));
  CHECK(back.x_map == m.x_map);
  CHECK(back.y_factor == m.y_factor);
}
