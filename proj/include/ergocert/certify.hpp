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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ergocert/hamiltonian.hpp"
#include "ergocert/states.hpp"

namespace ergocert {

/// Strict-inequality slack for entanglement verdicts, natural units.
inline constexpr double kVerdictTol = 1e-9;
/// Agreement required between the two routes for Delta.
inline constexpr double kDeltaRouteTol = 1e-9;

/// The X side of an X-vs-complement cut of an N-qubit register.
class Bipartition {
 public:
  /// Throws InputError unless 1 <= |x| <= N-1 with distinct in-range indices.
  Bipartition(std::vector<int> x, int total_qubits);

  const std::vector<int>& x() const { return x_; }  // ascending
  std::vector<int> complement() const;
  int kappa() const { return static_cast<int>(x_.size()); }
  int total_qubits() const { return total_; }
  std::string to_string() const;  // e.g. "1,2"

 private:
  std::vector<int> x_;
  int total_;
};

/// Probability vector sorted non-increasing.
class SpectralVector {
 public:
  /// Sorts `values`; throws NumericalError if an entry is below -1e-10 or
  /// the total differs from 1 by more than 1e-10.
  explicit SpectralVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

SpectralVector spectral_vector(const DensityOperator& rho);

enum class Verdict { entangled, inconclusive };
std::string_view to_string(Verdict v);

enum class Bound { gl, g, i };
std::string_view to_string(Bound b);
/// Parses "gl", "g", "i" (case-insensitive); throws InputError.
Bound parse_bound(std::string_view s);

struct CertificationReport {
  double delta = 0.0;
  double bound_gl = 0.0;
  double bound_g = 0.0;
  double bound_i = 0.0;
  Verdict verdict_gl = Verdict::inconclusive;
  Verdict verdict_g = Verdict::inconclusive;
  Verdict verdict_i = Verdict::inconclusive;
  std::string units = "MHz";
  double ergotropy_global = 0.0;
  double ergotropy_local = 0.0;

  double bound(Bound b) const;
  Verdict verdict(Bound b) const;
};

/// Every energy-valued field divided by `reference_gap`; verdicts unchanged.
CertificationReport normalized(const CertificationReport& r, double reference_gap, std::string units);

/// Largest population on the lowest level: spectrum sorted non-increasing
/// placed on energy eigenstates sorted non-decreasing (ties keep order).
DensityOperator passive_state(const DensityOperator& rho, const QubitHamiltonian& h);

/// Tr[rho H]
double energy(const DensityOperator& rho, const QubitHamiltonian& h);

/// Tr[rho H] - Tr[rho^P H]
double ergotropy(const DensityOperator& rho, const QubitHamiltonian& h);

/// Ergotropy of the X marginal under H_X.
double local_ergotropy(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part);

/// Delta evaluated by both routes.
struct DeltaEvaluation {
  double thermodynamic;  // W - W_X - E(rho_Xc) + E_g^Xc
  double spectral;       // sum m_j x_j - sum n_j t_j
  double ergotropy_global;
  double ergotropy_local;
};

/// Throws NumericalError if the two routes differ by more than 1e-9.
DeltaEvaluation evaluate_delta(const DensityOperator& rho, const QubitHamiltonian& h,
                               const Bipartition& part);
double delta(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part);

/// Global-local bound from the global spectrum t and the X spectrum x.
double bound_gl(const SpectralVector& t, const SpectralVector& x, const LevelStructure& levels_full,
                const LevelStructure& levels_x);

/// Global-spectrum bound.
double bound_g(const SpectralVector& t, const LevelStructure& levels_full, const LevelStructure& levels_x);

/// Coefficients c_i (i = 1..2^N-1) of the global-spectrum bound, which is
/// sum_i c_i t_i.
std::vector<double> bound_g_coefficients(const LevelStructure& levels_full, const LevelStructure& levels_x);

/// State-independent bound: the global-spectrum functional maximised over
/// all non-increasing probability vectors. The maximum sits on a vertex
/// (uniform weight on a prefix), so the scan is over prefix lengths.
double bound_i(const LevelStructure& levels_full, const LevelStructure& levels_x);

CertificationReport certify(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part);

/// p majorizes q: every prefix sum of p dominates q's, totals equal within
/// 1e-10. The shorter vector is zero-padded.
bool majorizes(const SpectralVector& p, const SpectralVector& q);

/// Entangled when either marginal spectrum fails to majorize the global one.
Verdict nielsen_kempe(const DensityOperator& rho, const Bipartition& part);

/// Noisy-GHZ purity above which the global-local bound detects
/// entanglement: (2^(N-k) - 1) / (2^(N-1) + 2^(N-k) - 1).
double gl_threshold_formula(int n, int kappa);

enum class PptResult { npt, ppt };
std::string_view to_string(PptResult r);

/// Partial transpose over the complement of X.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Bipartition& part);

/// npt iff the partial transpose over X^c has an eigenvalue below -1e-10.
PptResult partial_transpose_check(const DensityOperator& rho, const Bipartition& part);

}  // namespace ergocert
