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
#include <string_view>
#include <vector>

#include "ergocert/tensor.hpp"

namespace ergocert {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;

/// Hermitian, unit-trace, positive matrix on qubit_count qubits. The
/// invariants are checked on construction.
class DensityOperator {
 public:
  /// Throws NumericalError naming the failed invariant, InputError on a
  /// dimension that does not match qubit_count.
  DensityOperator(ComplexMatrix matrix, int qubit_count);

  const ComplexMatrix& matrix() const { return matrix_; }
  int qubit_count() const { return qubit_count_; }
  std::size_t dim() const { return matrix_.dim(); }

  /// Eigenvalues sorted non-increasing.
  std::vector<double> spectrum() const { return eigvals_hermitian(matrix_); }

  DensityOperator marginal(std::span<const int> keep) const;

 private:
  ComplexMatrix matrix_;
  int qubit_count_;
};

/// Throws NumericalError if `m` violates a density-operator invariant.
void check_density_invariants(const ComplexMatrix& m);

/// Computational basis ket |b> on n qubits.
std::vector<cplx> basis_ket(std::uint64_t index, int qubit_count);

/// I / 2^n
DensityOperator maximally_mixed(int qubit_count);

/// (1 - epsilon) I/2^N + epsilon |psi><psi|. The logical model uses
/// epsilon = 1 (an ideal pseudo-pure state).
DensityOperator pseudo_pure(std::span<const cplx> ket, double epsilon = 1.0);

struct BellDiagonalParams {
  double beta = 0.0;   // radians, [0, pi]
  double gamma = 0.0;  // radians, [0, pi]
};

/// Bell-basis weights {p00, p01, p10, p11}.
std::array<double, 4> bell_weights(const BellDiagonalParams& p);

/// |B_0j> = (|00> + (-1)^j |11>)/sqrt2,  |B_1j> = (|01> + (-1)^j |10>)/sqrt2
std::vector<cplx> bell_ket(int i, int j);

DensityOperator bell_diagonal(const BellDiagonalParams& p);

struct NoisyGhzParams {
  double lambda = 0.0;  // purity, [0, 1]
  int qubits = 2;       // >= 2
};

std::vector<cplx> ghz_ket(int qubit_count);

/// (1 - lambda) I/2^N + lambda |GHZ_N><GHZ_N|
DensityOperator noisy_ghz(const NoisyGhzParams& p);

/// Analytic spectrum of noisy_ghz, non-increasing.
std::vector<double> noisy_ghz_spectrum(const NoisyGhzParams& p);

/// lambda |psi-><psi-| + (1 - lambda) I/4
DensityOperator werner(double lambda);
std::vector<double> werner_spectrum(double lambda);

/// exp(-tau / t_lls): purity of the singlet after storage time tau.
double werner_purity_at(double tau_seconds, double t_lls_seconds);

enum class GhzClass { fully_separable, biseparable_region, genuinely_entangled };

std::string_view to_string(GhzClass c);

/// Closed-form classification of the noisy-GHZ family by purity.
GhzClass ghz_classifier(const NoisyGhzParams& p);

}  // namespace ergocert
