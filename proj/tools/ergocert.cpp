// Copyright 2026 The ergocert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ergocert/commands.hpp"
#include "ergocert/errors.hpp"

namespace {

struct Flags {
  std::string partition = "1";
  std::string format = "csv";
};

void add_common(CLI::App* sub, ergocert::RunConfig& cfg, Flags& flags) {
  sub->add_option("--system", cfg.system, "Named system (NAFP, BRTP, FAN, TMP, DBFM) or config file[:name]");
  sub->add_option("--family", cfg.family, "State family: bell-diag, werner, ghz, matrix");
  sub->add_option("--lambda", cfg.lambda, "Purity");
  sub->add_option("--beta", cfg.beta, "Bell-diagonal angle beta (radians)");
  sub->add_option("--gamma", cfg.gamma, "Bell-diagonal angle gamma (radians)");
  sub->add_option("--theta", cfg.theta, "Purity control angle, lambda = cos(theta)");
  sub->add_option("--n", cfg.n, "Register size");
  sub->add_option("--matrix", cfg.matrix_path, "Density matrix file");
  sub->add_option("--partition", flags.partition, "X side of the cut, e.g. 1,2");
  sub->add_option("--bound", cfg.bound, "gl, g, i or all")->check(CLI::IsMember({"gl", "g", "i", "all"}));
  sub->add_option("--out", cfg.out, "Output path (default: standard output)");
  sub->add_option("--format", flags.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--resolution", cfg.resolution, "Grid points per axis");
  sub->add_option("--seed", cfg.seed, "Seed for random batteries");
  sub->add_option("--units", cfg.units, "Reference gap label for normalisation, or MHz");
  sub->add_option("--threads", cfg.threads, "Worker threads for sweeps (0: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamic entanglement certification for qubit registers"};
  app.require_subcommand(1);

  ergocert::RunConfig cfg;
  Flags flags;
  for (const char* name : {"certify", "sweep", "threshold", "simulate", "oracle"}) {
    const char* help = "";
    std::string n = name;
    if (n == "certify") help = "Certify one state against all bounds";
    if (n == "sweep") help = "Tabulate certification over a parameter grid";
    if (n == "threshold") help = "Solve the purity threshold of a family";
    if (n == "simulate") help = "Run a preparation and passivization circuit";
    if (n == "oracle") help = "Run the oracle and invariant batteries";
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, cfg, flags);
    if (n == "simulate") {
      sub->add_option("program", cfg.program, "bell-diag, ghz, exp3 or a program file");
      sub->add_option("--dump", cfg.dump_path, "Write the final state as a matrix file");
    }
    sub->callback([&cfg, n] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ergocert::kExitInput;
  }

  try {
    cfg.partition = ergocert::parse_index_list(flags.partition);
    cfg.format = ergocert::parse_format(flags.format);
  } catch (const ergocert::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return ergocert::kExitInput;
  }
  return ergocert::execute(cfg, std::cout, std::cerr);
}
