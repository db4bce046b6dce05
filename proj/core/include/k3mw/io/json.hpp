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

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "k3mw/constructions/cover.hpp"
#include "k3mw/constructions/elliptic_curve.hpp"
#include "k3mw/constructions/two_ivstar.hpp"
#include "k3mw/ellsurf/fibers.hpp"
#include "k3mw/ellsurf/surface.hpp"
#include "k3mw/genus2/certify.hpp"
#include "k3mw/genus2/curve.hpp"

namespace k3mw::io {

/// Objects keep insertion order, so equal values serialize identically.
using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::filesystem::path& path);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

Json to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

/// {"genus2": ["f0", ..., "f6"]}; other keys are ignored when reading.
Json to_json(const Genus2Curve& c);
/// Throws ParseError for malformed records and MathError when f does not
/// define a genus-2 curve.
Genus2Curve curve_from_json(const Json& j);
Genus2Curve load_curve(const std::filesystem::path& path);

Json to_json(const IgusaClebsch& ic);

/// {"weierstrass": {"a1": ..., "a2": ..., "a3": ..., "a4": ..., "a6": ...}}
Json to_json(const WeierstrassSurface& s);
WeierstrassSurface surface_from_json(const Json& j);

Json to_json(const FiberConfiguration& cfg);

/// {"a": ..., "b": ..., "c": ...}
Json to_json(const HParams& p);
HParams hparams_from_json(const Json& j);

/// {"a1": ..., "a2": ..., "a3": ..., "a4": ..., "a6": ...}
Json to_json(const EllipticCurveQ& e);
EllipticCurveQ elliptic_curve_from_json(const Json& j);

/// {"x_num": [...], "x_den": [...], "y_num": [...], "y_den": [...]}
Json to_json(const CoverMap& m);
CoverMap cover_from_json(const Json& j);

Json to_json(const WeilPolynomial& w);
Json to_json(const PicardCertificate& cert);

}  // namespace k3mw::io
