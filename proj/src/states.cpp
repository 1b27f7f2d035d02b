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

#include "ergocert/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ergocert/errors.hpp"

namespace ergocert {
namespace {

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw InputError(std::string(what) + " must lie in [0, 1]");
}

ComplexMatrix mix_with_identity(const ComplexMatrix& pure, double weight) {
  const std::size_t dim = pure.dim();
  ComplexMatrix m = pure * weight;
  const double noise = (1.0 - weight) / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) += noise;
  return m;
}

}  // namespace

void check_density_invariants(const ComplexMatrix& m) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw NumericalError("density operator invariant violated: not Hermitian (defect " +
                         std::to_string(defect) + ")");
  }
  const cplx tr = m.trace();
  if (std::abs(tr - cplx{1.0, 0.0}) > kTraceTol) {
    throw NumericalError("density operator invariant violated: trace " + std::to_string(tr.real()) +
                         " != 1");
  }
  const auto w = eigvals_hermitian(m);
  if (!w.empty() && w.back() < -kPositivityTol) {
    throw NumericalError("density operator invariant violated: negative eigenvalue " +
                         std::to_string(w.back()));
  }
}

DensityOperator::DensityOperator(ComplexMatrix matrix, int qubit_count)
    : matrix_(std::move(matrix)), qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > 20 || matrix_.dim() != (std::size_t{1} << qubit_count)) {
    throw InputError("density operator dimension does not match qubit count");
  }
  check_density_invariants(matrix_);
}

DensityOperator DensityOperator::marginal(std::span<const int> keep) const {
  return DensityOperator(partial_trace(matrix_, keep, qubit_count_), static_cast<int>(keep.size()));
}

std::vector<cplx> basis_ket(std::uint64_t index, int qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (index >= dim) throw InputError("basis index out of range");
  std::vector<cplx> ket(dim);
  ket[index] = 1.0;
  return ket;
}

DensityOperator maximally_mixed(int qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  return DensityOperator(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)), qubit_count);
}

DensityOperator pseudo_pure(std::span<const cplx> ket, double epsilon) {
  check_unit_interval(epsilon, "pseudo-pure polarisation");
  const int n = qubits_for_dim(ket.size());
  return DensityOperator(mix_with_identity(ComplexMatrix::projector(ket), epsilon), n);
}

std::array<double, 4> bell_weights(const BellDiagonalParams& p) {
  for (double angle : {p.beta, p.gamma}) {
    if (!(angle >= 0.0 && angle <= std::numbers::pi)) {
      throw InputError("Bell-diagonal angles must lie in [0, pi]");
    }
  }
  const double sb = std::sin(p.beta / 2), cb = std::cos(p.beta / 2);
  const double sg = std::sin(p.gamma / 2), cg = std::cos(p.gamma / 2);
  return {sb * sb * sg * sg, sb * sb * cg * cg, cb * cb * sg * sg, cb * cb * cg * cg};
}

std::vector<cplx> bell_ket(int i, int j) {
  const double r = std::numbers::sqrt2 / 2;
  const double sign = j == 0 ? 1.0 : -1.0;
  std::vector<cplx> ket(4);
  if (i == 0) {
    ket[0b00] = r;
    ket[0b11] = sign * r;
  } else {
    ket[0b01] = r;
    ket[0b10] = sign * r;
  }
  return ket;
}

DensityOperator bell_diagonal(const BellDiagonalParams& p) {
  const auto w = bell_weights(p);
  ComplexMatrix m(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m += ComplexMatrix::projector(bell_ket(i, j)) * w[static_cast<std::size_t>(2 * i + j)];
  return DensityOperator(std::move(m), 2);
}

std::vector<cplx> ghz_ket(int qubit_count) {
  if (qubit_count < 1) throw InputError("GHZ state needs at least one qubit");
  std::vector<cplx> ket(std::size_t{1} << qubit_count);
  ket.front() = std::numbers::sqrt2 / 2;
  ket.back() = std::numbers::sqrt2 / 2;
  return ket;
}

DensityOperator noisy_ghz(const NoisyGhzParams& p) {
  check_unit_interval(p.lambda, "purity");
  if (p.qubits < 2) throw InputError("noisy GHZ needs at least two qubits");
  return DensityOperator(mix_with_identity(ComplexMatrix::projector(ghz_ket(p.qubits)), p.lambda),
                         p.qubits);
}

std::vector<double> noisy_ghz_spectrum(const NoisyGhzParams& p) {
  check_unit_interval(p.lambda, "purity");
  const double dim = std::ldexp(1.0, p.qubits);
  std::vector<double> w(static_cast<std::size_t>(dim), (1.0 - p.lambda) / dim);
  w.front() = (1.0 + (dim - 1.0) * p.lambda) / dim;
  return w;
}

DensityOperator werner(double lambda) {
  check_unit_interval(lambda, "purity");
  return DensityOperator(mix_with_identity(ComplexMatrix::projector(bell_ket(1, 1)), lambda), 2);
}

std::vector<double> werner_spectrum(double lambda) {
  check_unit_interval(lambda, "purity");
  return {(1.0 + 3.0 * lambda) / 4.0, (1.0 - lambda) / 4.0, (1.0 - lambda) / 4.0, (1.0 - lambda) / 4.0};
}

double werner_purity_at(double tau_seconds, double t_lls_seconds) {
  if (!(tau_seconds >= 0.0)) throw InputError("storage time must be non-negative");
  if (!(t_lls_seconds > 0.0)) throw InputError("decay constant must be positive");
  return std::exp(-tau_seconds / t_lls_seconds);
}

std::string_view to_string(GhzClass c) {
  switch (c) {
    case GhzClass::fully_separable: return "fully_separable";
    case GhzClass::biseparable_region: return "biseparable_region";
    case GhzClass::genuinely_entangled: return "genuinely_entangled";
  }
  return "unknown";
}

GhzClass ghz_classifier(const NoisyGhzParams& p) {
  check_unit_interval(p.lambda, "purity");
  if (p.qubits < 2) throw InputError("noisy GHZ needs at least two qubits");
  const double half = std::ldexp(1.0, p.qubits - 1);    // 2^(N-1)
  const double inv = std::ldexp(1.0, 1 - p.qubits);     // 2^(1-N)
  if (p.lambda <= 1.0 / (1.0 + half)) return GhzClass::fully_separable;
  if (p.lambda > (1.0 - inv) / (2.0 - inv)) return GhzClass::genuinely_entangled;
  return GhzClass::biseparable_region;
}

}  // namespace ergocert
