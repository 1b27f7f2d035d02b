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

#include "ergocert/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "ergocert/errors.hpp"
#include "ergocert/kernels.hpp"

namespace ergocert {
namespace {

using EigenMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

EigenMatrix gather(const ComplexMatrix& m, const std::vector<std::size_t>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  EigenMatrix out(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) out(a, b) = m(idx[a], idx[b]);
  return out;
}

void scatter(const EigenMatrix& sub, const std::vector<std::size_t>& idx, ComplexMatrix& m) {
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) m(idx[a], idx[b]) = sub(a, b);
}

void require_hermitian(const ComplexMatrix& m) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw NumericalError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

struct Eigenpair {
  double value;
  std::size_t block;
  Eigen::Index column;
};

template <bool WithVectors>
EigenDecomposition decompose(const ComplexMatrix& m) {
  require_hermitian(m);
  const ComplexMatrix* one[] = {&m};
  const auto blocks = coupled_blocks(one);

  std::vector<Eigen::VectorXd> values(blocks.size());
  std::vector<EigenMatrix> vectors(blocks.size());
  std::vector<Eigenpair> pairs;
  pairs.reserve(m.dim());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& idx = blocks[b];
    if (idx.size() == 1) {
      values[b] = Eigen::VectorXd::Constant(1, m(idx[0], idx[0]).real());
      if constexpr (WithVectors) vectors[b] = EigenMatrix::Identity(1, 1);
    } else {
      Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(
          gather(m, idx), WithVectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
      values[b] = solver.eigenvalues();
      if constexpr (WithVectors) vectors[b] = solver.eigenvectors();
    }
    for (Eigen::Index c = 0; c < values[b].size(); ++c) pairs.push_back({values[b](c), b, c});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.value > b.value; });

  EigenDecomposition out;
  out.eigenvalues.reserve(pairs.size());
  for (const auto& p : pairs) out.eigenvalues.push_back(p.value);
  if constexpr (WithVectors) {
    out.eigenvectors = ComplexMatrix(m.dim());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto& idx = blocks[pairs[j].block];
      const auto& vec = vectors[pairs[j].block];
      for (std::size_t a = 0; a < idx.size(); ++a) out.eigenvectors(idx[a], j) = vec(a, pairs[j].column);
    }
  }
  return out;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InputError("from_rows: matrix must be square");
    std::copy(r.begin(), r.end(), m.row(i++).begin());
  }
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const cplx> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
  std::vector<double> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i).real();
  return d;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

bool ComplexMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && (*this)(i, j) != cplx{}) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw InputError("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("matmul: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik != cplx{}) kernels::axpy(aik, b.row(k), out);
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) s += std::norm(a.data()[k] - b.data()[k]);
  return std::sqrt(s);
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw InputError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> keep, int qubit_count) {
  if (qubit_count < 0 || qubit_count > 30 || m.dim() != (std::size_t{1} << qubit_count)) {
    throw InputError("partial_trace: matrix dimension does not match qubit count");
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw InputError("partial_trace: duplicate qubit index");
  }
  for (int q : kept) {
    if (q < 1 || q > qubit_count) {
      throw InputError("partial_trace: qubit index " + std::to_string(q) + " out of range");
    }
  }
  std::vector<int> traced;
  for (int q = 1; q <= qubit_count; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  // Full-register offsets for every assignment of the kept / traced bits;
  // the first listed qubit is the most significant bit of the local index.
  auto offsets = [qubit_count](const std::vector<int>& qubits) {
    const std::size_t count = std::size_t{1} << qubits.size();
    std::vector<std::size_t> out(count, 0);
    for (std::size_t local = 0; local < count; ++local)
      for (std::size_t b = 0; b < qubits.size(); ++b)
        if (local & (std::size_t{1} << (qubits.size() - 1 - b)))
          out[local] |= qubit_mask(qubits[b], qubit_count);
    return out;
  };
  const auto keep_off = offsets(kept);
  const auto trace_off = offsets(traced);

  ComplexMatrix out(keep_off.size());
  for (std::size_t i = 0; i < keep_off.size(); ++i)
    for (std::size_t j = 0; j < keep_off.size(); ++j) {
      cplx acc{0.0, 0.0};
      for (std::size_t t : trace_off) acc += m(keep_off[i] | t, keep_off[j] | t);
      out(i, j) = acc;
    }
  return out;
}

std::vector<std::vector<std::size_t>> coupled_blocks(std::span<const ComplexMatrix* const> ms) {
  const std::size_t n = ms.empty() ? 0 : ms.front()->dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const ComplexMatrix* m : ms) {
    if (m->dim() != n) throw InputError("coupled_blocks: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((*m)(i, j) == cplx{} && (*m)(j, i) == cplx{}) continue;
        const std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) { return decompose<true>(m); }

std::vector<double> eigvals_hermitian(const ComplexMatrix& m) {
  return decompose<false>(m).eigenvalues;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  const ComplexMatrix prod = matmul(u.adjoint(), u);
  return max_abs_difference(prod, ComplexMatrix::identity(u.dim())) <= tol;
}

ComplexMatrix apply_unitary(const ComplexMatrix& state, const ComplexMatrix& u) {
  if (state.dim() != u.dim()) throw InputError("apply_unitary: dimension mismatch");
  if (!is_unitary(u)) throw NumericalError("apply_unitary: operator is not unitary");
  return matmul(matmul(u, state), u.adjoint());
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("trace_product: dimension mismatch");
  // Tr[ab] = sum_ij a_ij b_ji = sum_ij a_ij conj(b_ij) for Hermitian b.
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += kernels::dotc(b.row(i), a.row(i));
  return acc.real();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const ComplexMatrix* one[] = {&m};
  ComplexMatrix out(m.dim());
  require_hermitian(m);
  for (const auto& idx : coupled_blocks(one)) {
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(gather(m, idx));
    const Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const EigenMatrix& v = solver.eigenvectors();
    scatter(v * root.asDiagonal() * v.adjoint(), idx, out);
  }
  return out;
}

double fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("fidelity: dimension mismatch");
  require_hermitian(a);
  require_hermitian(b);
  // Singular values of sqrt(a) sqrt(b) keep absolute accuracy near zero,
  // unlike the eigenvalues of sqrt(a) b sqrt(a) followed by a square root.
  const ComplexMatrix* both[] = {&a, &b};
  double nuclear = 0.0;
  for (const auto& idx : coupled_blocks(both)) {
    auto root = [](const EigenMatrix& m) {
      Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(m);
      const Eigen::VectorXd r = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
      return EigenMatrix(solver.eigenvectors() * r.asDiagonal() * solver.eigenvectors().adjoint());
    };
    const EigenMatrix prod = root(gather(a, idx)) * root(gather(b, idx));
    nuclear += Eigen::JacobiSVD<EigenMatrix>(prod).singularValues().sum();
  }
  return nuclear * nuclear;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (double w : eigvals_hermitian(a - b)) s += std::abs(w);
  return 0.5 * s;
}

}  // namespace ergocert
