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

#include "ergocert/certify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "ergocert/errors.hpp"

namespace ergocert {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Tr[rho H] for a diagonal H given by its basis energies.
double diagonal_energy(const ComplexMatrix& rho, std::span<const double> basis_energies) {
  double e = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) e += rho(i, i).real() * basis_energies[i];
  return e;
}

void require_dims(const DensityOperator& rho, const QubitHamiltonian& h) {
  if (rho.qubit_count() != h.qubit_count()) {
    throw InputError("state has " + std::to_string(rho.qubit_count()) + " qubits, Hamiltonian has " +
                     std::to_string(h.qubit_count()));
  }
}

void require_partition(const DensityOperator& rho, const Bipartition& part) {
  if (part.total_qubits() != rho.qubit_count()) {
    throw InputError("bipartition is for " + std::to_string(part.total_qubits()) +
                     " qubits, state has " + std::to_string(rho.qubit_count()));
  }
}

Verdict verdict_for(double delta, double bound) {
  return delta > bound + kVerdictTol ? Verdict::entangled : Verdict::inconclusive;
}

double offset_sum(const QubitHamiltonian& h, std::span<const int> qubits) {
  double s = 0.0;
  for (int q : qubits) s += h.qubit(q).offset;
  return s;
}

}  // namespace

Bipartition::Bipartition(std::vector<int> x, int total_qubits) : x_(std::move(x)), total_(total_qubits) {
  std::sort(x_.begin(), x_.end());
  if (std::adjacent_find(x_.begin(), x_.end()) != x_.end()) {
    throw InputError("bipartition: duplicate qubit index");
  }
  if (x_.empty() || static_cast<int>(x_.size()) > total_ - 1) {
    throw InputError("bipartition: X must hold between 1 and N-1 qubits");
  }
  for (int q : x_)
    if (q < 1 || q > total_) throw InputError("bipartition: qubit index " + std::to_string(q) + " out of range");
}

std::vector<int> Bipartition::complement() const {
  std::vector<int> out;
  for (int q = 1; q <= total_; ++q)
    if (!std::binary_search(x_.begin(), x_.end(), q)) out.push_back(q);
  return out;
}

std::string Bipartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x_[i]);
  }
  return s;
}

SpectralVector::SpectralVector(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  if (values_.empty()) throw InputError("spectral vector is empty");
  if (values_.back() < -kPositivityTol) throw NumericalError("spectral vector has a negative entry");
  const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(total - 1.0) > kTraceTol) throw NumericalError("spectral vector does not sum to one");
}

SpectralVector spectral_vector(const DensityOperator& rho) { return SpectralVector(rho.spectrum()); }

std::string_view to_string(Verdict v) { return v == Verdict::entangled ? "entangled" : "inconclusive"; }

std::string_view to_string(Bound b) {
  switch (b) {
    case Bound::gl: return "gl";
    case Bound::g: return "g";
    case Bound::i: return "i";
  }
  return "?";
}

Bound parse_bound(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "gl") return Bound::gl;
  if (lower == "g") return Bound::g;
  if (lower == "i") return Bound::i;
  throw InputError("unknown bound '" + std::string(s) + "' (expected gl, g or i)");
}

double CertificationReport::bound(Bound b) const {
  switch (b) {
    case Bound::gl: return bound_gl;
    case Bound::g: return bound_g;
    case Bound::i: return bound_i;
  }
  return 0.0;
}

Verdict CertificationReport::verdict(Bound b) const {
  switch (b) {
    case Bound::gl: return verdict_gl;
    case Bound::g: return verdict_g;
    case Bound::i: return verdict_i;
  }
  return Verdict::inconclusive;
}

CertificationReport normalized(const CertificationReport& r, double reference_gap, std::string units) {
  if (!(reference_gap > 0.0)) throw InputError("reference gap must be positive");
  CertificationReport out = r;
  out.delta /= reference_gap;
  out.bound_gl /= reference_gap;
  out.bound_g /= reference_gap;
  out.bound_i /= reference_gap;
  out.ergotropy_global /= reference_gap;
  out.ergotropy_local /= reference_gap;
  out.units = std::move(units);
  return out;
}

DensityOperator passive_state(const DensityOperator& rho, const QubitHamiltonian& h) {
  require_dims(rho, h);
  const auto t = rho.spectrum();
  const auto levels = level_structure(h);
  std::vector<double> diag(rho.dim(), 0.0);
  for (std::size_t j = 0; j < t.size(); ++j) diag[levels.basis_states[j]] = std::max(t[j], 0.0);
  // Clipping rounding-level negatives can move the trace by ~1e-16; renormalise.
  const double total = std::accumulate(diag.begin(), diag.end(), 0.0);
  for (double& d : diag) d /= total;
  return DensityOperator(ComplexMatrix::diagonal(std::span<const double>(diag)), rho.qubit_count());
}

double energy(const DensityOperator& rho, const QubitHamiltonian& h) {
  require_dims(rho, h);
  return diagonal_energy(rho.matrix(), h.basis_energies());
}

double ergotropy(const DensityOperator& rho, const QubitHamiltonian& h) {
  require_dims(rho, h);
  const auto levels = level_structure(h);
  const auto t = rho.spectrum();
  return energy(rho, h) - (levels.ground_energy + dot(levels.offsets, t));
}

double local_ergotropy(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part) {
  require_dims(rho, h);
  require_partition(rho, part);
  return ergotropy(rho.marginal(part.x()), h.restricted_to(part.x()));
}

DeltaEvaluation evaluate_delta(const DensityOperator& rho, const QubitHamiltonian& h,
                               const Bipartition& part) {
  require_dims(rho, h);
  require_partition(rho, part);
  const auto comp = part.complement();
  const auto levels_full = level_structure(h);
  const auto levels_x = level_structure(h, part.x());

  const auto t = rho.spectrum();
  const DensityOperator rho_x = rho.marginal(part.x());
  const auto x = rho_x.spectrum();
  const ComplexMatrix rho_xc = partial_trace(rho.matrix(), comp, rho.qubit_count());

  const double passive_global = levels_full.ground_energy + dot(levels_full.offsets, t);
  const double passive_local = levels_x.ground_energy + dot(levels_x.offsets, x);

  DeltaEvaluation out{};
  out.ergotropy_global = energy(rho, h) - passive_global;
  out.ergotropy_local = diagonal_energy(rho_x.matrix(), h.restricted_to(part.x()).basis_energies()) - passive_local;
  const double energy_xc = diagonal_energy(rho_xc, h.restricted_to(comp).basis_energies());
  out.thermodynamic = out.ergotropy_global - out.ergotropy_local - energy_xc + offset_sum(h, comp);
  out.spectral = dot(levels_x.offsets, x) - dot(levels_full.offsets, t);

  if (std::abs(out.thermodynamic - out.spectral) > kDeltaRouteTol) {
    throw NumericalError("Delta routes disagree: " + std::to_string(out.thermodynamic) + " vs " +
                         std::to_string(out.spectral));
  }
  return out;
}

double delta(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part) {
  return evaluate_delta(rho, h, part).thermodynamic;
}

double bound_gl(const SpectralVector& t, const SpectralVector& x, const LevelStructure& levels_full,
                const LevelStructure& levels_x) {
  if (t.size() != levels_full.size() || x.size() != levels_x.size() || x.size() < 2 ||
      levels_x.size() > levels_full.size()) {
    throw InputError("bound_gl: spectral vector length does not match level structure");
  }
  const double m1 = levels_x.offsets[1];
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += (levels_x.offsets[i] - m1) * x[i];
  for (std::size_t i = 1; i < t.size(); ++i) s += (m1 - levels_full.offsets[i]) * t[i];
  return s;
}

std::vector<double> bound_g_coefficients(const LevelStructure& levels_full, const LevelStructure& levels_x) {
  if (levels_x.size() < 2 || levels_x.size() > levels_full.size()) {
    throw InputError("bound_g: subsystem levels must be a proper part of the register");
  }
  const std::size_t top = levels_x.size() - 1;  // index 2^k - 1
  std::vector<double> c(levels_full.size() - 1);
  for (std::size_t i = 1; i < levels_full.size(); ++i) {
    const double m = levels_x.offsets[std::min(i, top)];
    c[i - 1] = m - levels_full.offsets[i];
  }
  return c;
}

double bound_g(const SpectralVector& t, const LevelStructure& levels_full, const LevelStructure& levels_x) {
  if (t.size() != levels_full.size()) throw InputError("bound_g: spectral vector length mismatch");
  const auto c = bound_g_coefficients(levels_full, levels_x);
  double s = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) s += c[i - 1] * t[i];
  return s;
}

double bound_i(const LevelStructure& levels_full, const LevelStructure& levels_x) {
  const auto c = bound_g_coefficients(levels_full, levels_x);
  // Vertex k puts 1/k on t_0..t_{k-1}; its value is (c_1 + ... + c_{k-1}) / k.
  double best = 0.0;  // k = 1
  double prefix = 0.0;
  for (std::size_t k = 2; k <= levels_full.size(); ++k) {
    prefix += c[k - 2];
    best = std::max(best, prefix / static_cast<double>(k));
  }
  return best;
}

CertificationReport certify(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part) {
  const DeltaEvaluation d = evaluate_delta(rho, h, part);
  const auto levels_full = level_structure(h);
  const auto levels_x = level_structure(h, part.x());
  const SpectralVector t(rho.spectrum());
  const SpectralVector x(rho.marginal(part.x()).spectrum());

  CertificationReport r;
  r.delta = d.thermodynamic;
  r.bound_gl = bound_gl(t, x, levels_full, levels_x);
  r.bound_g = bound_g(t, levels_full, levels_x);
  r.bound_i = bound_i(levels_full, levels_x);
  r.verdict_gl = verdict_for(r.delta, r.bound_gl);
  r.verdict_g = verdict_for(r.delta, r.bound_g);
  r.verdict_i = verdict_for(r.delta, r.bound_i);
  r.ergotropy_global = d.ergotropy_global;
  r.ergotropy_local = d.ergotropy_local;
  return r;
}

bool majorizes(const SpectralVector& p, const SpectralVector& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sp += i < p.size() ? p[i] : 0.0;
    sq += i < q.size() ? q[i] : 0.0;
    if (sp < sq - kTraceTol) return false;
  }
  return std::abs(sp - sq) <= kTraceTol;
}

Verdict nielsen_kempe(const DensityOperator& rho, const Bipartition& part) {
  require_partition(rho, part);
  const SpectralVector global(rho.spectrum());
  const SpectralVector on_x(rho.marginal(part.x()).spectrum());
  const SpectralVector on_xc(rho.marginal(part.complement()).spectrum());
  return majorizes(on_x, global) && majorizes(on_xc, global) ? Verdict::inconclusive : Verdict::entangled;
}

double gl_threshold_formula(int n, int kappa) {
  if (n < 2 || kappa < 1 || kappa > n - 1) throw InputError("gl_threshold_formula: need 1 <= kappa <= N-1");
  const double a = std::ldexp(1.0, n - kappa) - 1.0;
  return a / (std::ldexp(1.0, n - 1) + a);
}

std::string_view to_string(PptResult r) { return r == PptResult::npt ? "npt" : "ppt"; }

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Bipartition& part) {
  const int n = part.total_qubits();
  if (m.dim() != (std::size_t{1} << n)) throw InputError("partial_transpose: dimension mismatch");
  std::uint64_t mask = 0;
  for (int q : part.complement()) mask |= qubit_mask(q, n);
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::size_t si = (i & ~mask) | (j & mask);
      const std::size_t sj = (j & ~mask) | (i & mask);
      out(i, j) = m(si, sj);
    }
  return out;
}

PptResult partial_transpose_check(const DensityOperator& rho, const Bipartition& part) {
  require_partition(rho, part);
  const auto w = eigvals_hermitian(partial_transpose(rho.matrix(), part));
  return w.back() < -kPositivityTol ? PptResult::npt : PptResult::ppt;
}

}  // namespace ergocert
