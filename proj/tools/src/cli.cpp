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

#include "k3mw_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>

#include "k3mw/error.hpp"
#include "report.hpp"

#ifndef K3MW_DATA_DIR
#define K3MW_DATA_DIR "data"
#endif

namespace k3mw::cli {

std::string default_data_dir() { return K3MW_DATA_DIR; }

namespace {

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--json", o.json_path, "Write the JSON report to PATH");
}

void write_report(const Report& r, const Options& o, std::ostream& out) {
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) throw ParseError("cannot write " + o.json_path);
    f << io::dump(r.json);
  }
  for (const auto& l : r.lines) out << l << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic K3 surfaces from genus-2 curves: constructions, fibers, ranks and Picard certificates", "k3mw"};
  app.require_subcommand(1);
  Options o;
  std::string kind;
  std::string example;

  auto* inv = app.add_subcommand("invariants", "Igusa-Clebsch invariants of a genus-2 curve");
  inv->add_option("--curve", o.curve, "Curve file {\"genus2\": [...]}")->required();
  add_common(inv, o);

  auto* con = app.add_subcommand("construct", "Build a surface and classify its singular fibers");
  con->add_option("kind", kind, "g, h, eq1 or fib13")->required()->check(CLI::IsMember({"g", "h", "eq1", "fib13"}));
  con->add_option("--curve", o.curve, "Curve file (kinds g, eq1, fib13)");
  con->add_option("--abc", o.abc, "Branch points A B C (kind h)")->expected(3)->allow_extra_args(false);
  auto* nopt = con->add_option("--n", o.n, "Base change degree");
  con->add_option("--rho", o.rho, "Picard number of J(C) for the rank");
  add_common(con, o);

  auto* cert = app.add_subcommand("certify", "Certify rho(J(C)) = 1 from Frobenius data");
  cert->add_option("--curve", o.curve, "Curve file")->required();
  cert->add_option("--primes", o.primes, "Odd primes of good reduction")->required();
  add_common(cert, o);

  auto* rep = app.add_subcommand("reproduce", "Run a worked example end to end");
  rep->add_option("example", example, "qm, split or example43")
      ->required()
      ->check(CLI::IsMember({"qm", "split", "example43"}));
  rep->add_option("--data", o.data_dir, "Directory with the example data files");
  add_common(rep, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  o.n_given = nopt->count() > 0;

  auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (app.got_subcommand(inv)) {
      r = cmd_invariants(o);
    } else if (app.got_subcommand(con)) {
      r = cmd_construct(kind, o);
    } else if (app.got_subcommand(cert)) {
      r = cmd_certify(o);
    } else {
      r = cmd_reproduce(example, o);
    }
    write_report(r, o, out);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed: " << ms << " ms\n";
    return r.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace k3mw::cli
