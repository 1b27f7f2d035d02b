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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ergocert/hamiltonian.hpp"
#include "ergocert/states.hpp"

namespace ergocert {

enum class Axis { x, y, z };

/// exp(-i angle sum_t sigma_axis(t) / 2)
struct Rotation {
  Axis axis = Axis::y;
  double angle = 0.0;
  std::vector<int> targets;
};
struct Hadamard {
  int target = 1;
};
struct Cnot {
  int control = 1;
  int target = 2;
};
/// Removes every computational-basis coherence.
struct Crusher {};
struct Label {
  std::string text;
};

using Instruction = std::variant<Rotation, Hadamard, Cnot, Crusher, Label>;

/// Ordered instruction list on a fixed register. Qubits are 1-based.
class GateProgram {
 public:
  explicit GateProgram(int qubit_count);

  int qubit_count() const { return qubit_count_; }
  const std::vector<Instruction>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

  /// Throws InputError on an out-of-range index or non-finite angle.
  GateProgram& add(Instruction step);
  GateProgram& rotate(Axis axis, double angle, std::vector<int> targets);
  GateProgram& h(int target);
  GateProgram& cnot(int control, int target);
  GateProgram& crush();
  GateProgram& label(std::string text);
  GateProgram& append(const GateProgram& other);

 private:
  int qubit_count_;
  std::vector<Instruction> steps_;
};

struct Snapshot {
  std::string label;
  DensityOperator state;
};

struct SimulationTrace {
  std::vector<Snapshot> states;  // one per LABEL step, in program order
  DensityOperator final;
};

/// Ideal-gate evolution of `input`. Every snapshot and the final state are
/// checked against the density-operator invariants.
SimulationTrace run(const GateProgram& program, const DensityOperator& input);

/// Line format: `QUBITS n` (optional header), `RX|RY|RZ angle q...`,
/// `H q`, `CNOT c t`, `CRUSH`, `LABEL text`. '#' starts a comment; case
/// and spacing are free. Without a header the register is `qubit_count`
/// when given, else the largest index used. Errors carry line numbers.
GateProgram parse_program(std::string_view text, std::optional<int> qubit_count = std::nullopt);
std::string serialize(const GateProgram& program);

/// Maps |11><11| to bell_diagonal(params).
GateProgram bell_diag_program(const BellDiagonalParams& params);
DensityOperator bell_diag_input();

struct GhzPreparation {
  GateProgram program;
  DensityOperator input;  // pseudo-pure |0...0> with epsilon = purity
  double purity;          // cos(theta)
};

/// Star-topology GHZ preparation: H on the central qubit 1, then CNOT
/// from it to every satellite. Throws InputError for N < 2 or cos(theta)
/// outside [0, 1].
GhzPreparation ghz_program(int qubit_count, double theta);

/// 1 + (N-1) * satellite gap / central gap, qubit 1 central.
double star_lopsidedness(const QubitHamiltonian& h);

/// Chain preparation H(1), CNOT(1,2), CNOT(2,3) of the three-qubit GHZ.
GateProgram exp3_program();

struct BellDiagonalFamily {
  BellDiagonalParams params;
};
struct NoisyGhzFamily {
  int qubits = 3;
};
struct Exp3Family {};
using PassivizationFamily = std::variant<BellDiagonalFamily, NoisyGhzFamily, Exp3Family>;

/// Program taking the family's state to its passive state under h.
GateProgram passivization_program(const PassivizationFamily& family, const QubitHamiltonian& h);

/// Gate sequence, chosen from the restricted 24-permutation set, that
/// passivizes a diagonal two-qubit state under h. InputError if rho is
/// not diagonal.
GateProgram local_passivization_program(const DensityOperator& rho, const QubitHamiltonian& h);

/// Passive state of the two-qubit marginal of the chain family under the
/// first two qubits of DBFM, reached by local_passivization_program.
DensityOperator exp3_local_passive(const DensityOperator& rho12);

}  // namespace ergocert
