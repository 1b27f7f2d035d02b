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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ergocert {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-9;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  /// |v><v|
  static ComplexMatrix projector(std::span<const cplx> ket);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<cplx> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  cplx trace() const;
  std::vector<double> real_diagonal() const;
  ComplexMatrix adjoint() const;
  bool is_hermitian(double tol = kHermitianTol) const;
  /// Largest |m(i,j) - conj(m(j,i))|.
  double hermiticity_defect() const;
  bool is_diagonal() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Matrix product a*b.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Number of qubits n with 2^n == dim; throws InputError otherwise.
int qubits_for_dim(std::size_t dim);

/// Bit mask of qubit q (1-based, qubit 1 = most significant bit).
inline std::uint64_t qubit_mask(int qubit, int qubit_count) {
  return std::uint64_t{1} << (qubit_count - qubit);
}

/// Reduced matrix on the qubits in `keep` (1-based, any order, no
/// duplicates). The output orders kept qubits by ascending index.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> keep, int qubit_count);

/// Partition of basis indices into groups that no non-zero off-diagonal
/// entry of any of the given matrices connects. Each group is sorted and
/// groups are ordered by their smallest index.
std::vector<std::vector<std::size_t>> coupled_blocks(std::span<const ComplexMatrix* const> ms);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // non-increasing
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

/// Throws NumericalError for non-Hermitian input.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);
std::vector<double> eigvals_hermitian(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTol);

/// u * state * u^dagger. Throws NumericalError when u is not unitary and
/// InputError on dimension mismatch.
ComplexMatrix apply_unitary(const ComplexMatrix& state, const ComplexMatrix& u);

/// Re Tr[a b] for Hermitian a, b.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian square root with negative eigenvalues clipped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Uhlmann fidelity (Tr|sqrt(a) sqrt(b)|)^2 of two density matrices.
double fidelity(const ComplexMatrix& a, const ComplexMatrix& b);

/// (1/2) || a - b ||_1
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ergocert
