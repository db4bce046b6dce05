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

#include <stdexcept>
#include <string>

namespace k3mw {

/// A mathematical precondition failed or a computation has no answer
/// (singular equation, bad reduction, inconsistent Picard input, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that should hold by construction was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k3mw
