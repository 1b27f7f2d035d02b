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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ergocert/tensor.hpp"

namespace ergocert {

/// One non-interacting qubit: levels offset (|0>) and offset + gap (|1>).
/// Energies are angular-frequency values in MHz.
struct QubitTerm {
  double offset = 0.0;
  double gap = 0.0;
  std::string label;  // nucleus or role name used for unit normalisation
};

class QubitHamiltonian {
 public:
  /// Throws InputError for an empty register or a negative gap.
  explicit QubitHamiltonian(std::vector<QubitTerm> qubits, std::string name = {});

  int qubit_count() const { return static_cast<int>(qubits_.size()); }
  const QubitTerm& qubit(int q) const { return qubits_.at(static_cast<std::size_t>(q - 1)); }
  const std::vector<QubitTerm>& qubits() const { return qubits_; }
  const std::string& name() const { return name_; }

  /// Scalar coupling in Hz. Metadata only, never enters level energies.
  std::optional<double> coupling_hz;

  /// Diagonal of the full Hamiltonian indexed by computational basis state.
  std::vector<double> basis_energies() const;

  /// Gap of the first qubit carrying `label`; throws InputError if absent.
  double gap_of(std::string_view label) const;

  /// Same Hamiltonian restricted to the given qubits (ascending order).
  QubitHamiltonian restricted_to(std::span<const int> subset) const;

 private:
  std::vector<QubitTerm> qubits_;
  std::string name_;
};

/// Sorted level ladder of a (sub)register: offsets n_j (or m_j) above the
/// ground energy, each paired with the basis state that carries it.
struct LevelStructure {
  std::vector<double> offsets;             // non-decreasing, offsets[0] == 0
  double ground_energy = 0.0;
  std::vector<std::uint64_t> basis_states; // local computational index per level
  int qubit_count = 0;

  std::size_t size() const { return offsets.size(); }
  /// Bitstring of level j, most significant qubit first.
  std::string label(std::size_t j) const;
};

/// Diagonal 2^N matrix with entry sum_l (E_l + b_l alpha_l) for bitstring b.
ComplexMatrix full_matrix(const QubitHamiltonian& h);

/// Levels of the qubits in `subset` (1-based). Ties are broken by
/// ascending bitstring value. Throws InputError on an empty or invalid
/// subset.
LevelStructure level_structure(const QubitHamiltonian& h, std::span<const int> subset);
LevelStructure level_structure(const QubitHamiltonian& h);

/// Register used by the experiments: "NAFP", "BRTP", "FAN", "TMP", "DBFM".
/// Throws InputError for an unknown name.
QubitHamiltonian named_system(std::string_view name);

/// N qubits with zero offset and equal gap.
QubitHamiltonian identical_qubits(int n, double gap);

/// Unit the CLI reports in by default for a named system ("P" for NAFP, "H"
/// otherwise); empty for unknown names.
std::string default_reference_label(std::string_view system_name);

/// Parses `name = gap1,gap2,...` lines ('#' starts a comment). Returned
/// systems carry zero offsets and labels q1..qN.
std::map<std::string, QubitHamiltonian> parse_system_config(std::string_view text);

}  // namespace ergocert
