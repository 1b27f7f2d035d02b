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

#include "ergocert/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ergocert/errors.hpp"

namespace ergocert {
namespace {

// Larmor frequencies of a 500 MHz spectrometer, MHz.
constexpr double kOmegaF = 470.385;
constexpr double kOmegaP = 202.404;
constexpr double kOmegaH = 500.0;
constexpr double kOmegaHBrtp = 500.2;
constexpr double kOmegaC = 125.721;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

QubitHamiltonian make(std::initializer_list<std::pair<double, const char*>> gaps, std::string name,
                      std::optional<double> coupling_hz) {
  std::vector<QubitTerm> terms;
  for (const auto& [gap, label] : gaps) terms.push_back({0.0, gap, label});
  QubitHamiltonian h(std::move(terms), std::move(name));
  h.coupling_hz = coupling_hz;
  return h;
}

QubitHamiltonian star(double central, const char* central_label, int satellites, std::string name,
                      double coupling_hz) {
  std::vector<QubitTerm> terms{{0.0, central, central_label}};
  for (int i = 0; i < satellites; ++i) terms.push_back({0.0, kOmegaH, "H"});
  QubitHamiltonian h(std::move(terms), std::move(name));
  h.coupling_hz = coupling_hz;
  return h;
}

}  // namespace

QubitHamiltonian::QubitHamiltonian(std::vector<QubitTerm> qubits, std::string name)
    : qubits_(std::move(qubits)), name_(std::move(name)) {
  if (qubits_.empty()) throw InputError("Hamiltonian needs at least one qubit");
  if (qubits_.size() > 20) throw InputError("Hamiltonian larger than 20 qubits is not supported");
  for (const auto& q : qubits_) {
    if (!(q.gap >= 0.0) || !std::isfinite(q.gap) || !std::isfinite(q.offset)) {
      throw InputError("qubit gap must be finite and non-negative");
    }
  }
}

std::vector<double> QubitHamiltonian::basis_energies() const {
  const int n = qubit_count();
  std::vector<double> e(std::size_t{1} << n);
  for (std::size_t b = 0; b < e.size(); ++b) {
    double sum = 0.0;
    for (int q = 1; q <= n; ++q) {
      const auto& t = qubits_[static_cast<std::size_t>(q - 1)];
      sum += t.offset;
      if (b & qubit_mask(q, n)) sum += t.gap;
    }
    e[b] = sum;
  }
  return e;
}

double QubitHamiltonian::gap_of(std::string_view label) const {
  for (const auto& q : qubits_)
    if (q.label == label) return q.gap;
  throw InputError("no qubit labelled '" + std::string(label) + "' in system " + name_);
}

QubitHamiltonian QubitHamiltonian::restricted_to(std::span<const int> subset) const {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<QubitTerm> terms;
  for (int q : sorted) {
    if (q < 1 || q > qubit_count()) throw InputError("qubit index out of range");
    terms.push_back(qubit(q));
  }
  QubitHamiltonian h(std::move(terms), name_);
  h.coupling_hz = coupling_hz;
  return h;
}

std::string LevelStructure::label(std::size_t j) const {
  std::string s(static_cast<std::size_t>(qubit_count), '0');
  for (int b = 0; b < qubit_count; ++b)
    if (basis_states.at(j) & (std::uint64_t{1} << (qubit_count - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
  return s;
}

ComplexMatrix full_matrix(const QubitHamiltonian& h) {
  const auto e = h.basis_energies();
  return ComplexMatrix::diagonal(std::span<const double>(e));
}

LevelStructure level_structure(const QubitHamiltonian& h, std::span<const int> subset) {
  if (subset.empty()) throw InputError("level_structure: empty subset");
  std::vector<int> qubits(subset.begin(), subset.end());
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw InputError("level_structure: duplicate qubit index");
  }
  for (int q : qubits)
    if (q < 1 || q > h.qubit_count()) throw InputError("level_structure: qubit index out of range");

  const auto k = static_cast<int>(qubits.size());
  const std::size_t count = std::size_t{1} << k;
  std::vector<double> raw(count, 0.0);
  for (std::size_t b = 0; b < count; ++b)
    for (int i = 0; i < k; ++i)
      if (b & (std::size_t{1} << (k - 1 - i))) raw[b] += h.qubit(qubits[static_cast<std::size_t>(i)]).gap;

  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&raw](std::uint64_t a, std::uint64_t b) { return raw[a] < raw[b]; });

  LevelStructure out;
  out.qubit_count = k;
  out.basis_states = order;
  out.offsets.reserve(count);
  for (auto b : order) out.offsets.push_back(raw[b]);
  for (int q : qubits) out.ground_energy += h.qubit(q).offset;
  return out;
}

LevelStructure level_structure(const QubitHamiltonian& h) {
  std::vector<int> all(static_cast<std::size_t>(h.qubit_count()));
  std::iota(all.begin(), all.end(), 1);
  return level_structure(h, all);
}

QubitHamiltonian named_system(std::string_view name) {
  if (name == "NAFP") return make({{kOmegaF, "F"}, {kOmegaP, "P"}}, "NAFP", std::nullopt);
  if (name == "BRTP") return make({{kOmegaHBrtp, "H"}, {kOmegaHBrtp, "H"}}, "BRTP", 4.01);
  if (name == "FAN") return star(kOmegaF, "F", 2, "FAN", 45.5);
  if (name == "TMP") return star(kOmegaP, "P", 9, "TMP", 11.04);
  if (name == "DBFM") return make({{kOmegaH, "H"}, {kOmegaC, "C"}, {kOmegaF, "F"}}, "DBFM", std::nullopt);
  throw InputError("unknown system '" + std::string(name) + "'");
}

QubitHamiltonian identical_qubits(int n, double gap) {
  if (n < 1) throw InputError("identical_qubits: need at least one qubit");
  std::vector<QubitTerm> terms;
  for (int q = 1; q <= n; ++q) terms.push_back({0.0, gap, "q"});
  return QubitHamiltonian(std::move(terms), "identical");
}

std::string default_reference_label(std::string_view system_name) {
  if (system_name == "NAFP") return "P";
  if (system_name == "BRTP" || system_name == "FAN" || system_name == "TMP" || system_name == "DBFM") {
    return "H";
  }
  return {};
}

std::map<std::string, QubitHamiltonian> parse_system_config(std::string_view text) {
  std::map<std::string, QubitHamiltonian> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const std::string where = "system config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw InputError(where + ": expected 'name = gap1,gap2,...'");
    const std::string name(trim(line.substr(0, eq)));
    if (name.empty()) throw InputError(where + ": missing system name");

    std::vector<QubitTerm> terms;
    std::string_view rest = line.substr(eq + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view field = trim(rest.substr(0, comma));
      double gap = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), gap);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw InputError(where + ": bad gap value '" + std::string(field) + "'");
      }
      terms.push_back({0.0, gap, "q" + std::to_string(terms.size() + 1)});
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (out.count(name)) throw InputError(where + ": system '" + name + "' defined twice");
    try {
      out.emplace(name, QubitHamiltonian(std::move(terms), name));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ergocert
