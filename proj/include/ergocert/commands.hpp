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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ergocert/io.hpp"

namespace ergocert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitOracle = 4;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct RunConfig {
  std::string command;              // certify | sweep | threshold | simulate | oracle
  std::string system;               // named system, config file, or file:name
  std::string family;               // bell-diag | werner | ghz | matrix
  std::optional<double> lambda, beta, gamma, theta;
  std::optional<int> n;
  std::string matrix_path;          // state file for family "matrix" or simulate input
  std::string program;              // simulate: bell-diag | ghz | exp3 | program file
  std::vector<int> partition = {1};
  std::string bound = "all";        // gl | g | i | all
  std::string out;                  // empty: standard output
  Format format = Format::csv;
  std::optional<int> resolution;
  std::uint64_t seed = kDefaultSeed;
  std::string units;                // gap label, "MHz", or empty for the system default
  std::string dump_path;            // simulate: final state as a matrix file
  int threads = 0;                  // 0: hardware concurrency
};

struct CommandResult {
  Table table;
  int exit_code = kExitOk;
  std::string message;  // diagnostic for standard error, may be empty
};

CommandResult cmd_certify(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_threshold(const RunConfig& cfg);
CommandResult cmd_simulate(const RunConfig& cfg);
CommandResult cmd_oracle(const RunConfig& cfg);

/// Parses "1,2" into {1, 2}; InputError on malformed lists.
std::vector<int> parse_index_list(const std::string& s);

/// Runs cfg.command, writes the table to cfg.out or `out`, reports
/// errors on `err` and returns the process exit code.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ergocert
