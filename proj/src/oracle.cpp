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

#include "ergocert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "ergocert/errors.hpp"

namespace ergocert {
namespace {

std::uint8_t apply_gate(PermutationGate g, std::uint8_t b) {
  switch (g) {
    case PermutationGate::flip1: return b ^ 2u;
    case PermutationGate::flip2: return b ^ 1u;
    case PermutationGate::cnot1: return (b & 2u) ? b ^ 1u : b;
    case PermutationGate::cnot2: return (b & 1u) ? b ^ 2u : b;
  }
  return b;
}

std::string gate_name(PermutationGate g) {
  switch (g) {
    case PermutationGate::flip1: return "Y1";
    case PermutationGate::flip2: return "Y2";
    case PermutationGate::cnot1: return "CNOT1";
    case PermutationGate::cnot2: return "CNOT2";
  }
  return "?";
}

std::vector<RestrictedPermutation> build_restricted() {
  using G = PermutationGate;
  const std::vector<std::vector<G>> local = {{}, {G::flip2}, {G::flip1}, {G::flip1, G::flip2}};
  const std::vector<std::vector<G>> global = {
      {}, {G::cnot1}, {G::cnot2}, {G::cnot2, G::cnot1}, {G::cnot1, G::cnot2}, {G::cnot1, G::cnot2, G::cnot1}};
  std::vector<RestrictedPermutation> out;
  for (const auto& g : global) {
    for (const auto& l : local) {
      RestrictedPermutation p;
      p.sequence = l;
      p.sequence.insert(p.sequence.end(), g.begin(), g.end());
      for (std::uint8_t b = 0; b < 4; ++b) {
        std::uint8_t v = b;
        for (G gate : p.sequence) v = apply_gate(gate, v);
        p.image[b] = v;
      }
      for (G gate : p.sequence) p.name += (p.name.empty() ? "" : "+") + gate_name(gate);
      if (p.name.empty()) p.name = "I";
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::mt19937_64 suite_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

QubitHamiltonian with_offsets(const std::vector<double>& gaps, std::mt19937_64& rng) {
  std::vector<QubitTerm> terms;
  for (std::size_t i = 0; i < gaps.size(); ++i)
    terms.push_back({uniform(rng, -500.0, 500.0), gaps[i], "q" + std::to_string(i + 1)});
  return QubitHamiltonian(std::move(terms));
}

double vertex_bound(const QubitHamiltonian& h, std::vector<int> x) {
  return bound_i(level_structure(h), level_structure(h, x));
}

void record(SuiteResult& r, double error) {
  ++r.cases;
  r.worst = std::max(r.worst, error);
  if (!(error <= r.tolerance)) ++r.failures;
}

}  // namespace

double brute_force_passive(std::span<const double> populations, std::span<const double> energies) {
  if (populations.size() != energies.size()) throw InputError("brute_force_passive: length mismatch");
  if (populations.empty() || populations.size() > 8) {
    throw InputError("brute_force_passive: length must be between 1 and 8");
  }
  std::vector<std::size_t> perm(populations.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double e = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) e += populations[perm[i]] * energies[i];
    best = std::min(best, e);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

const std::vector<RestrictedPermutation>& restricted_permutations() {
  static const std::vector<RestrictedPermutation> table = build_restricted();
  return table;
}

RestrictedMinimum restricted_passive(std::span<const double> populations, std::span<const double> energies) {
  if (populations.size() != 4 || energies.size() != 4) {
    throw InputError("restricted_passive: expects four populations and four energies");
  }
  RestrictedMinimum best{std::numeric_limits<double>::infinity(), 0};
  const auto& table = restricted_permutations();
  for (std::size_t k = 0; k < table.size(); ++k) {
    double e = 0.0;
    for (std::size_t b = 0; b < 4; ++b) e += populations[b] * energies[table[k].image[b]];
    if (e < best.energy) best = {e, k};
  }
  return best;
}

std::vector<double> random_probability(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  for (double& v : w) v = expo(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= total;
  return w;
}

std::array<cplx, 2> random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<cplx, 2> v{cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
  const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= norm;
  v[1] /= norm;
  return v;
}

DensityOperator random_separable(int qubit_count, std::mt19937_64& rng) {
  if (qubit_count < 1 || qubit_count > 12) throw InputError("random_separable: qubit count out of range");
  const std::size_t dim = std::size_t{1} << qubit_count;
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, dim)(rng);
  const auto weights = random_probability(terms, rng);
  ComplexMatrix rho(dim);
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<cplx> ket{1.0};
    for (int q = 0; q < qubit_count; ++q) {
      const auto f = random_qubit(rng);
      std::vector<cplx> next(ket.size() * 2);
      for (std::size_t i = 0; i < ket.size(); ++i) {
        next[2 * i] = ket[i] * f[0];
        next[2 * i + 1] = ket[i] * f[1];
      }
      ket = std::move(next);
    }
    rho += ComplexMatrix::projector(ket) * cplx(weights[k]);
  }
  return DensityOperator(std::move(rho), qubit_count);
}

DensityOperator random_density(int qubit_count, std::mt19937_64& rng) {
  if (qubit_count < 1 || qubit_count > 10) throw InputError("random_density: qubit count out of range");
  const std::size_t dim = std::size_t{1} << qubit_count;
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(dim);
  for (cplx& v : a.data()) v = cplx(g(rng), g(rng));
  ComplexMatrix rho = matmul(a, a.adjoint());
  rho *= cplx(1.0 / rho.trace().real());
  // Symmetrise to remove rounding-level asymmetry from the product.
  ComplexMatrix sym = rho + rho.adjoint();
  sym *= cplx(0.5);
  return DensityOperator(std::move(sym), qubit_count);
}

DensityOperator random_diagonal(int qubit_count, std::mt19937_64& rng) {
  const auto p = random_probability(std::size_t{1} << qubit_count, rng);
  return DensityOperator(ComplexMatrix::diagonal(std::span<const double>(p)), qubit_count);
}

std::vector<SuiteResult> separable_battery(const OracleOptions& opts) {
  struct Case {
    const char* system;
    std::vector<int> x;
  };
  const std::vector<Case> cases = {
      {"NAFP", {1}},    {"FAN", {1}},     {"FAN", {2}},     {"FAN", {1, 2}},
      {"FAN", {2, 3}},  {"DBFM", {1}},    {"DBFM", {2}},    {"DBFM", {3}},
      {"DBFM", {1, 2}},
  };
  std::vector<SuiteResult> out;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto h = named_system(cases[c].system);
    const Bipartition part(cases[c].x, h.qubit_count());
    auto rng = suite_rng(opts.seed, 100 + c);
    for (Bound b : {Bound::gl, Bound::g, Bound::i}) {
      out.push_back({"separable", std::string(cases[c].system) + " X=" + part.to_string() + " bound " +
                                      std::string(to_string(b)),
                     0, 0, -std::numeric_limits<double>::infinity(), kVerdictTol});
    }
    SuiteResult* r = &out[out.size() - 3];
    for (int s = 0; s < opts.separable_samples; ++s) {
      const auto rho = random_separable(h.qubit_count(), rng);
      const auto rep = certify(rho, h, part);
      record(r[0], rep.delta - rep.bound_gl);
      record(r[1], rep.delta - rep.bound_g);
      record(r[2], rep.delta - rep.bound_i);
    }
  }
  return out;
}

std::vector<SuiteResult> passive_equivalence(const OracleOptions& opts) {
  std::vector<SuiteResult> out;
  for (int n : {2, 3}) {
    auto rng = suite_rng(opts.seed, 200 + static_cast<std::uint64_t>(n));
    SuiteResult r{"passive", "full enumeration dim " + std::to_string(1 << n), 0, 0, 0.0, 1e-12};
    for (int s = 0; s < opts.passive_samples; ++s) {
      std::vector<double> gaps(static_cast<std::size_t>(n));
      for (double& g : gaps) g = uniform(rng, 0.1, 1.0);
      std::vector<QubitTerm> terms;
      for (int q = 0; q < n; ++q) terms.push_back({0.0, gaps[static_cast<std::size_t>(q)], ""});
      const QubitHamiltonian hr(std::move(terms));
      const auto rho = random_diagonal(n, rng);
      const auto passive_energy = energy(passive_state(rho, hr), hr);
      const auto pops = rho.matrix().real_diagonal();
      const auto e = hr.basis_energies();
      record(r, std::abs(passive_energy - brute_force_passive(pops, e)));
    }
    out.push_back(r);
  }

  auto rng = suite_rng(opts.seed, 210);
  const auto h = named_system("NAFP");
  const auto e = h.basis_energies();
  SuiteResult r{"passive", "restricted 24-set on Bell-diagonal NAFP", 0, 0, 0.0, 1e-12};
  for (int s = 0; s < opts.passive_samples; ++s) {
    const BellDiagonalParams p{uniform(rng, 0.0, std::numbers::pi), uniform(rng, 0.0, std::numbers::pi)};
    const auto w = bell_weights(p);
    const auto restricted = restricted_passive(w, e).energy;
    const auto full = brute_force_passive(w, e);
    const auto passive_energy = energy(passive_state(bell_diagonal(p), h), h);
    record(r, std::max(std::abs(restricted - full), std::abs(restricted - passive_energy)) /
                  h.gap_of("P"));
  }
  out.push_back(r);
  return out;
}

std::vector<SuiteResult> closed_form_bounds(const OracleOptions& opts) {
  constexpr double tol = 1e-12;
  std::vector<SuiteResult> out;
  auto rng = suite_rng(opts.seed, 300);
  const int n = opts.closed_form_samples;

  auto run = [&](std::string name, auto&& sample) {
    SuiteResult r{"closed-form", std::move(name), 0, 0, 0.0, tol};
    for (int s = 0; s < n; ++s) {
      const auto [generic, closed] = sample(s);
      record(r, std::abs(generic - closed));
    }
    out.push_back(r);
  };
  using Pair = std::pair<double, double>;

  run("1|2 two gaps", [&](int) -> Pair {
    const double a1 = uniform(rng, 10.0, 1000.0), a2 = uniform(rng, 10.0, 1000.0);
    const auto h = with_offsets({a1, a2}, rng);
    return {vertex_bound(h, {1}), std::max((a1 - a2) / 2.0, 0.0)};
  });
  run("1|23 a1<a2=a3", [&](int) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0), a1 = a * uniform(rng, 0.05, 0.99);
    const auto h = with_offsets({a1, a, a}, rng);
    return {vertex_bound(h, {1}), 0.0};
  });
  run("1|23 a1=a2>a3", [&](int) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0), a3 = a * uniform(rng, 0.05, 0.99);
    const auto h = with_offsets({a, a, a3}, rng);
    return {vertex_bound(h, {1}), (a - a3) / 2.0};
  });
  run("12|3 a1<a2=a3", [&](int) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0), a1 = a * uniform(rng, 0.05, 0.99);
    const auto h = with_offsets({a1, a, a}, rng);
    return {vertex_bound(h, {1, 2}), a1 / 4.0};
  });
  run("12|3 a1=a2>a3>=2a/3", [&](int s) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0);
    const double a3 = s == 0 ? 2.0 * a / 3.0 : a * uniform(rng, 2.0 / 3.0, 0.99);
    const auto h = with_offsets({a, a, a3}, rng);
    return {vertex_bound(h, {1, 2}), (a - a3) / 4.0 + a / 4.0};
  });
  run("12|3 a1=a2>a3, a3<=2a/3", [&](int s) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0);
    const double a3 = s == 0 ? 2.0 * a / 3.0 : a * uniform(rng, 0.05, 2.0 / 3.0);
    const auto h = with_offsets({a, a, a3}, rng);
    return {vertex_bound(h, {1, 2}), (a - a3) / 2.0 + a / 6.0};
  });
  run("N=10 1|rest central first", [&](int) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0), ac = a * uniform(rng, 0.05, 0.99);
    std::vector<double> gaps(10, a);
    gaps[0] = ac;
    const auto h = with_offsets(gaps, rng);
    return {vertex_bound(h, {1}), 0.0};
  });
  run("N=10 1|rest central elsewhere", [&](int) -> Pair {
    const double a = uniform(rng, 10.0, 1000.0), ac = a * uniform(rng, 0.05, 0.99);
    std::vector<double> gaps(10, a);
    gaps[std::uniform_int_distribution<std::size_t>(1, 9)(rng)] = ac;
    const auto h = with_offsets(gaps, rng);
    return {vertex_bound(h, {1}), (a - ac) / 2.0};
  });
  return out;
}

std::vector<SuiteResult> npt_agreement(const OracleOptions& opts) {
  if (opts.npt_resolution < 2) throw InputError("npt_agreement: resolution must be at least 2");
  const auto h = named_system("NAFP");
  const Bipartition part({1}, 2);
  SuiteResult r{"npt", "Bell-diagonal NAFP grid GL-detected implies NPT", 0, 0, 0.0, 0.0};
  const int k = opts.npt_resolution;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const BellDiagonalParams p{std::numbers::pi * i / (k - 1), std::numbers::pi * j / (k - 1)};
      const auto rho = bell_diagonal(p);
      const auto rep = certify(rho, h, part);
      ++r.cases;
      if (rep.verdict_gl == Verdict::entangled && partial_transpose_check(rho, part) != PptResult::npt) {
        ++r.failures;
        r.worst = 1.0;
      }
    }
  }
  return {r};
}

std::vector<SuiteResult> run_oracle_suites(const OracleOptions& opts) {
  std::vector<SuiteResult> out;
  for (auto&& part : {separable_battery(opts), passive_equivalence(opts), closed_form_bounds(opts),
                      npt_agreement(opts)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ergocert
