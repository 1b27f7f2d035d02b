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

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ergocert/certify.hpp"

namespace ergocert {

/// Minimum of sum_i populations[perm(i)] * energies[i] over every
/// permutation. Throws InputError for unequal lengths or length > 8.
double brute_force_passive(std::span<const double> populations, std::span<const double> energies);

/// Basis permutations used to passivize a diagonal two-qubit state.
enum class PermutationGate {
  flip1,  // |0>_1 <-> |1>_1
  flip2,  // |0>_2 <-> |1>_2
  cnot1,  // control 1, target 2
  cnot2,  // control 2, target 1
};

struct RestrictedPermutation {
  std::string name;
  std::vector<PermutationGate> sequence;  // application order
  std::array<std::uint8_t, 4> image;      // basis state b is sent to image[b]
};

/// The 24 compositions global(local): local in {I, flip2, flip1,
/// flip1 flip2}, global in {I, cnot1, cnot2, cnot1 cnot2, cnot2 cnot1,
/// cnot1 cnot2 cnot1}.
const std::vector<RestrictedPermutation>& restricted_permutations();

struct RestrictedMinimum {
  double energy = 0.0;
  std::size_t index = 0;  // into restricted_permutations(), first minimiser
};

/// Lowest energy reachable from a diagonal two-qubit state through the
/// restricted set. populations and energies are indexed by basis state.
RestrictedMinimum restricted_passive(std::span<const double> populations, std::span<const double> energies);

/// Flat sample from the probability simplex.
std::vector<double> random_probability(std::size_t n, std::mt19937_64& rng);

/// Haar-random single-qubit pure state.
std::array<cplx, 2> random_qubit(std::mt19937_64& rng);

/// Mixture of between 1 and 2^n fully product pure states with flat
/// simplex weights.
DensityOperator random_separable(int qubit_count, std::mt19937_64& rng);

/// G G^dagger / Tr for a complex Gaussian G.
DensityOperator random_density(int qubit_count, std::mt19937_64& rng);

/// Diagonal state with flat simplex populations.
DensityOperator random_diagonal(int qubit_count, std::mt19937_64& rng);

struct OracleOptions {
  std::uint64_t seed = 20260101;
  int separable_samples = 1000;
  int passive_samples = 500;
  int closed_form_samples = 50;
  int npt_resolution = 101;
};

struct SuiteResult {
  std::string suite;
  std::string name;
  long cases = 0;
  long failures = 0;
  double worst = 0.0;      // largest slack or error observed
  double tolerance = 0.0;  // pass iff every case stays within this

  bool passed() const { return failures == 0; }
};

/// Delta against all three bounds for random separable states.
std::vector<SuiteResult> separable_battery(const OracleOptions& opts);

/// passive_state energy against full enumeration and the restricted set.
std::vector<SuiteResult> passive_equivalence(const OracleOptions& opts);

/// Vertex-scan bound_i against closed forms for the studied registers.
std::vector<SuiteResult> closed_form_bounds(const OracleOptions& opts);

/// Two-qubit Bell-diagonal grid: GL detection implies NPT.
std::vector<SuiteResult> npt_agreement(const OracleOptions& opts);

std::vector<SuiteResult> run_oracle_suites(const OracleOptions& opts);

}  // namespace ergocert
