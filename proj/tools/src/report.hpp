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

#include <optional>
#include <string>
#include <vector>

#include "k3mw/ellsurf/fibers.hpp"
#include "k3mw/io/json.hpp"

namespace k3mw::cli {

using io::Json;

/// A command's output: the JSON report and its human-readable rendering.
struct Report {
  Json json;
  std::vector<std::string> lines;
  int exit_code = 0;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

/// Named pass/fail checks collected by the reproduce command.
class CheckList {
 public:
  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool all_passed() const;
  Json json() const;
  void render(Report& r) const;

 private:
  struct Entry {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Entry> entries_;
};

/// Surface, fibers, K3 test and rank formula; ranks for rho in 1..4 and
/// for the given rho when present.
Json surface_block(const std::string& name, const WeierstrassSurface& s, const FiberConfiguration& cfg,
                   std::optional<long> rho);
void render_surface(Report& r, const std::string& name, const WeierstrassSurface& s, const FiberConfiguration& cfg,
                    std::optional<long> rho);

struct Options {
  std::string curve;
  std::vector<std::string> abc;
  long n = 0;
  bool n_given = false;
  std::vector<std::uint64_t> primes;
  std::optional<long> rho;
  std::string json_path;
  std::string data_dir;
};

Report cmd_invariants(const Options& o);
Report cmd_construct(const std::string& kind, const Options& o);
Report cmd_certify(const Options& o);
Report cmd_reproduce(const std::string& example, const Options& o);

}  // namespace k3mw::cli
