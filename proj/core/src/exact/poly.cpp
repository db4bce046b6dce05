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

#include "k3mw/exact/poly.hpp"

namespace k3mw {

FpPoly reduce_mod(const UniPoly& a, std::uint64_t p) {
  PrimeField f(p);
  std::vector<std::uint64_t> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(reduce_mod(c, p));
  return FpPoly(f, std::move(v));
}

UniPoly parse_poly(const std::vector<std::string>& coeffs) {
  std::vector<BigRational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_rational(s));
  return UniPoly(RationalField{}, std::move(v));
}

std::vector<std::string> coefficient_strings(const UniPoly& a) {
  std::vector<std::string> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace k3mw
