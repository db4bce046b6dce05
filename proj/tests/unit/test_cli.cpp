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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "k3mw/io/json.hpp"
#include "k3mw_cli/cli.hpp"

using namespace k3mw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return cli::default_data_dir() + "/" + name; }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("invariants") {
  auto r = run({"invariants", "--curve", data("qm_curve.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "I10 = "));
  write(temp_file("k3mw_bad.json"), "{\"genus2\": [1,");
  CHECK(run({"invariants", "--curve", temp_file("k3mw_bad.json").string()}).code == 2);
  write(temp_file("k3mw_nocurve.json"), "{\"curve\": []}");
  CHECK(run({"invariants", "--curve", temp_file("k3mw_nocurve.json").string()}).code == 2);
  CHECK(run({"invariants", "--curve", temp_file("k3mw_missing_file.json").string()}).code == 2);
  write(temp_file("k3mw_sq.json"), "{\"genus2\": [\"0\", \"0\", \"1\", \"0\", \"0\", \"0\", \"1\"]}");
  auto sq = run({"invariants", "--curve", temp_file("k3mw_sq.json").string()});
  CHECK(sq.code == 1);
  CHECK(contains(sq.err, "not a genus-2 curve"));
}

TEST_CASE("construct") {
  auto g = run({"construct", "g", "--curve", data("qm_curve.json"), "--n", "4", "--rho", "3"});
  CHECK(g.code == 0);
  CHECK(contains(g.out, "singular fibers: 20 I1 + IV"));
  CHECK(contains(g.out, "rank (rho = 3): 15"));
  auto h = run({"construct", "h", "--abc", "-1", "1/7", "-6/7", "--n", "3"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "singular fibers: 24 I1"));
  CHECK(contains(h.out, "rank formula: 14+ρ"));
  auto bad = run({"construct", "g", "--n", "5"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "K3 only for n <= 4"));
  CHECK(run({"construct", "h", "--abc", "2", "3", "3"}).code == 1);
  CHECK(run({"construct", "h", "--abc", "2", "3"}).code == 2);
  CHECK(run({"construct", "q", "--curve", data("qm_curve.json")}).code == 2);
  CHECK(run({"construct", "eq1", "--curve", data("qm_curve.json")}).code == 0);
  auto f13 = run({"construct", "fib13", "--curve", data("qm_curve.json")});
  CHECK(f13.code == 0);
  CHECK(contains(f13.out, "rank formula: 4+ρ"));
  CHECK(run({"construct", "g", "--curve", data("qm_curve.json"), "--n", "x"}).code == 2);
}

TEST_CASE("certify") {
  auto ok = run({"certify", "--curve", data("example43.json"), "--primes", "37", "41"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "conclusion: rho(J(C)) = 1"));
  auto split = run({"certify", "--curve", data("split_curve.json"), "--primes", "5", "11"});
  CHECK(split.code == 1);
  CHECK(contains(split.out, "conclusion: inconclusive"));
  CHECK(run({"certify", "--curve", data("example43.json"), "--primes", "37"}).code == 1);
  CHECK(run({"certify", "--curve", data("example43.json")}).code == 2);
}

TEST_CASE("reproduce") {
  auto qm = run({"reproduce", "qm"});
  CHECK(qm.code == 0);
  CHECK(contains(qm.out, "rank of G^(4): 15 (given ρ = 3, quaternionic multiplication)"));
  auto split = run({"reproduce", "split"});
  CHECK(split.code == 0);
  CHECK(contains(split.out, "phi1 is a cover of degree 3"));
  CHECK(!contains(split.out, "[FAIL]"));
  auto ex = run({"reproduce", "example43"});
  CHECK(contains(ex.out, "MW rank of H^(3) over the algebraic closure: 15"));
  CHECK(contains(ex.out, "[PASS] rho(J(C)) = 1 certified"));
  CHECK(run({"reproduce", "nothing"}).code == 2);
  CHECK(run({"reproduce", "qm", "--data", temp_file("k3mw_no_such_dir").string()}).code == 2);
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "h", "--abc", "-1", "1/7", "-6/7", "--n", "2"},
           {"certify", "--curve", data("example43.json"), "--primes", "37", "41"},
           {"reproduce", "split"}}) {
    auto a = args, b = args;
    a.insert(a.end(), {"--json", temp_file("k3mw_det_a.json").string()});
    b.insert(b.end(), {"--json", temp_file("k3mw_det_b.json").string()});
    run(a);
    run(b);
    std::string ja = slurp(temp_file("k3mw_det_a.json"));
    CHECK(!ja.empty());
    CHECK(ja == slurp(temp_file("k3mw_det_b.json")));
    CHECK(!contains(ja, "elapsed"));
    auto parsed = io::Json::parse(ja);
    CHECK(parsed.contains("command"));
  }
}

TEST_CASE("data files are mirrored in docs") {
  for (const char* name : {"qm_curve.json", "split_curve.json", "example43.json"}) {
    auto docs = std::filesystem::path(cli::default_data_dir()).parent_path() / "docs" / "data" / name;
    CHECK(slurp(data(name)) == slurp(docs));
  }
}
