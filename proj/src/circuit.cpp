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

#include "ergocert/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ergocert/errors.hpp"
#include "ergocert/io.hpp"
#include "ergocert/kernels.hpp"
#include "ergocert/oracle.hpp"

namespace ergocert {
namespace {

using kernels::Mix2;

Mix2 rotation_matrix(Axis axis, double angle) {
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  switch (axis) {
    case Axis::x: return {c, cplx(0.0, -s), cplx(0.0, -s), c};
    case Axis::y: return {c, -s, s, c};
    case Axis::z: return {std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0)};
  }
  return {1.0, 0.0, 0.0, 1.0};
}

const Mix2 kHadamard{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0,
                     -std::numbers::sqrt2 / 2.0};

void left_mix(ComplexMatrix& m, std::uint64_t mask, const Mix2& u) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!(i & mask)) kernels::mix2(u, m.row(i), m.row(i | mask));
}

// U rho U^dagger = U (U rho)^dagger for Hermitian rho.
void conjugate_single(ComplexMatrix& rho, std::uint64_t mask, const Mix2& u) {
  left_mix(rho, mask, u);
  rho = rho.adjoint();
  left_mix(rho, mask, u);
}

void apply_cnot(ComplexMatrix& rho, std::uint64_t cmask, std::uint64_t tmask) {
  const std::size_t dim = rho.dim();
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = (i & cmask) ? i ^ tmask : i;
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto src = rho.row(perm[i]);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < dim; ++j) dst[j] = src[perm[j]];
  }
  rho = std::move(out);
}

void crush(ComplexMatrix& rho) {
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) rho(i, j) = 0.0;
}

void check_index(int q, int n) {
  if (q < 1 || q > n) {
    throw InputError("qubit index " + std::to_string(q) + " out of range 1.." + std::to_string(n));
  }
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T v{};
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw InputError("line " + std::to_string(line) + ": invalid " + what + " '" + std::string(tok) + "'");
  }
  return v;
}

GateProgram& append_permutation(GateProgram& p, const RestrictedPermutation& perm) {
  for (PermutationGate g : perm.sequence) {
    switch (g) {
      case PermutationGate::flip1: p.rotate(Axis::x, std::numbers::pi, {1}); break;
      case PermutationGate::flip2: p.rotate(Axis::x, std::numbers::pi, {2}); break;
      case PermutationGate::cnot1: p.cnot(1, 2); break;
      case PermutationGate::cnot2: p.cnot(2, 1); break;
    }
  }
  return p;
}

}  // namespace

GateProgram::GateProgram(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > 20) throw InputError("program register must hold 1..20 qubits");
}

GateProgram& GateProgram::add(Instruction step) {
  const int n = qubit_count_;
  std::visit(
      [n](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rotation>) {
          if (!std::isfinite(s.angle)) throw InputError("rotation angle must be finite");
          if (s.targets.empty()) throw InputError("rotation needs at least one target");
          auto sorted = s.targets;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("rotation targets must be distinct");
          }
          for (int q : s.targets) check_index(q, n);
        } else if constexpr (std::is_same_v<T, Hadamard>) {
          check_index(s.target, n);
        } else if constexpr (std::is_same_v<T, Cnot>) {
          check_index(s.control, n);
          check_index(s.target, n);
          if (s.control == s.target) throw InputError("CNOT control and target must differ");
        }
      },
      step);
  steps_.push_back(std::move(step));
  return *this;
}

GateProgram& GateProgram::rotate(Axis axis, double angle, std::vector<int> targets) {
  return add(Rotation{axis, angle, std::move(targets)});
}
GateProgram& GateProgram::h(int target) { return add(Hadamard{target}); }
GateProgram& GateProgram::cnot(int control, int target) { return add(Cnot{control, target}); }
GateProgram& GateProgram::crush() { return add(Crusher{}); }
GateProgram& GateProgram::label(std::string text) { return add(Label{std::move(text)}); }

GateProgram& GateProgram::append(const GateProgram& other) {
  if (other.qubit_count_ != qubit_count_) throw InputError("cannot append programs on different registers");
  for (const auto& s : other.steps_) steps_.push_back(s);
  return *this;
}

SimulationTrace run(const GateProgram& program, const DensityOperator& input) {
  const int n = program.qubit_count();
  if (input.qubit_count() != n) {
    throw InputError("program acts on " + std::to_string(n) + " qubits, input has " +
                     std::to_string(input.qubit_count()));
  }
  ComplexMatrix rho = input.matrix();
  std::vector<Snapshot> snapshots;
  for (const auto& step : program.steps()) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Rotation>) {
            const Mix2 u = rotation_matrix(s.axis, s.angle);
            for (int q : s.targets) conjugate_single(rho, qubit_mask(q, n), u);
          } else if constexpr (std::is_same_v<T, Hadamard>) {
            conjugate_single(rho, qubit_mask(s.target, n), kHadamard);
          } else if constexpr (std::is_same_v<T, Cnot>) {
            apply_cnot(rho, qubit_mask(s.control, n), qubit_mask(s.target, n));
          } else if constexpr (std::is_same_v<T, Crusher>) {
            crush(rho);
          } else {
            snapshots.push_back({s.text, DensityOperator(rho, n)});
          }
        },
        step);
  }
  return {std::move(snapshots), DensityOperator(std::move(rho), n)};
}

GateProgram parse_program(std::string_view text, std::optional<int> qubit_count) {
  struct Parsed {
    std::size_t line;
    Instruction step;
  };
  std::vector<Parsed> parsed;
  std::optional<int> header;
  int max_index = 0;
  auto index = [&](std::string_view tok, std::size_t line) {
    const int q = parse_number<int>(tok, line, "qubit index");
    if (q < 1) throw InputError("line " + std::to_string(line) + ": qubit indices start at 1");
    max_index = std::max(max_index, q);
    return q;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string op = upper(toks[0]);
    const auto fail = [&](const std::string& msg) {
      throw InputError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (op == "QUBITS") {
      if (toks.size() != 2) fail("QUBITS takes one count");
      if (header || !parsed.empty()) fail("QUBITS must be the first instruction");
      header = parse_number<int>(toks[1], line_no, "qubit count");
    } else if (op == "RX" || op == "RY" || op == "RZ") {
      if (toks.size() < 3) fail(op + " needs an angle and at least one qubit");
      Rotation r;
      r.axis = op == "RX" ? Axis::x : op == "RY" ? Axis::y : Axis::z;
      r.angle = parse_number<double>(toks[1], line_no, "angle");
      if (!std::isfinite(r.angle)) fail("angle must be finite");
      for (std::size_t k = 2; k < toks.size(); ++k) r.targets.push_back(index(toks[k], line_no));
      parsed.push_back({line_no, std::move(r)});
    } else if (op == "H") {
      if (toks.size() != 2) fail("H takes one qubit");
      parsed.push_back({line_no, Hadamard{index(toks[1], line_no)}});
    } else if (op == "CNOT") {
      if (toks.size() != 3) fail("CNOT takes a control and a target");
      parsed.push_back({line_no, Cnot{index(toks[1], line_no), index(toks[2], line_no)}});
    } else if (op == "CRUSH") {
      if (toks.size() != 1) fail("CRUSH takes no arguments");
      parsed.push_back({line_no, Crusher{}});
    } else if (op == "LABEL") {
      const auto kw = line.find_first_not_of(" \t");
      parsed.push_back({line_no, Label{std::string(trim(line.substr(kw + 5)))}});
    } else {
      fail("unknown instruction '" + std::string(toks[0]) + "'");
    }
  }

  const int n = header ? *header : qubit_count ? *qubit_count : std::max(max_index, 1);
  if (header && qubit_count && *header != *qubit_count) {
    throw InputError("program declares " + std::to_string(*header) + " qubits, expected " +
                     std::to_string(*qubit_count));
  }
  GateProgram program(n);
  for (auto& p : parsed) {
    try {
      program.add(std::move(p.step));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(p.line) + ": " + e.what());
    }
  }
  return program;
}

std::string serialize(const GateProgram& program) {
  std::ostringstream os;
  os << "QUBITS " << program.qubit_count() << '\n';
  for (const auto& step : program.steps()) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Rotation>) {
            os << (s.axis == Axis::x ? "RX" : s.axis == Axis::y ? "RY" : "RZ") << ' ' << format_double(s.angle);
            for (int q : s.targets) os << ' ' << q;
          } else if constexpr (std::is_same_v<T, Hadamard>) {
            os << "H " << s.target;
          } else if constexpr (std::is_same_v<T, Cnot>) {
            os << "CNOT " << s.control << ' ' << s.target;
          } else if constexpr (std::is_same_v<T, Crusher>) {
            os << "CRUSH";
          } else {
            os << "LABEL " << s.text;
          }
          os << '\n';
        },
        step);
  }
  return os.str();
}

GateProgram bell_diag_program(const BellDiagonalParams& params) {
  bell_weights(params);  // validates the angles
  GateProgram p(2);
  p.rotate(Axis::y, params.beta, {1}).rotate(Axis::y, params.gamma, {2});
  p.crush().label("crushed");
  p.h(2).cnot(2, 1).label("bell-diagonal");
  return p;
}

DensityOperator bell_diag_input() { return pseudo_pure(basis_ket(3, 2)); }

GhzPreparation ghz_program(int qubit_count, double theta) {
  if (qubit_count < 2) throw InputError("ghz_program: need at least 2 qubits");
  if (!std::isfinite(theta)) throw InputError("ghz_program: theta must be finite");
  double purity = std::cos(theta);
  if (std::abs(purity) < 1e-15) purity = 0.0;
  if (purity < 0.0 || purity > 1.0) throw InputError("ghz_program: cos(theta) must lie in [0, 1]");
  GateProgram p(qubit_count);
  p.h(1);
  for (int k = 2; k <= qubit_count; ++k) p.cnot(1, k);
  p.label("ghz");
  return {std::move(p), pseudo_pure(basis_ket(0, qubit_count), purity), purity};
}

double star_lopsidedness(const QubitHamiltonian& h) {
  if (h.qubit_count() < 2) throw InputError("star register needs a central qubit and satellites");
  const double central = h.qubit(1).gap;
  if (!(central > 0.0)) throw InputError("central qubit gap must be positive");
  return 1.0 + (h.qubit_count() - 1) * h.qubit(2).gap / central;
}

GateProgram exp3_program() {
  GateProgram p(3);
  p.h(1).cnot(1, 2).cnot(2, 3).label("ghz");
  return p;
}

GateProgram passivization_program(const PassivizationFamily& family, const QubitHamiltonian& h) {
  return std::visit(
      [&](const auto& f) -> GateProgram {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BellDiagonalFamily>) {
          if (h.qubit_count() != 2) throw InputError("Bell-diagonal passivization needs a two-qubit Hamiltonian");
          const auto w = bell_weights(f.params);
          // CNOT(1,2) then H(1) sends B_ij to |j i>.
          std::array<double, 4> pops{};
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) pops[static_cast<std::size_t>((j << 1) | i)] = w[static_cast<std::size_t>(2 * i + j)];
          const auto best = restricted_passive(pops, h.basis_energies());
          GateProgram p(2);
          p.cnot(1, 2).h(1).label("diagonal");
          append_permutation(p, restricted_permutations()[best.index]);
          return p.label("passive");
        } else if constexpr (std::is_same_v<T, NoisyGhzFamily>) {
          if (f.qubits < 2) throw InputError("noisy GHZ passivization needs at least 2 qubits");
          if (h.qubit_count() != f.qubits) throw InputError("Hamiltonian size does not match the GHZ register");
          GateProgram p(f.qubits);
          for (int k = f.qubits; k >= 2; --k) p.cnot(1, k);
          return p.h(1).label("passive");
        } else {
          if (h.qubit_count() != 3) throw InputError("chain GHZ passivization needs a three-qubit Hamiltonian");
          GateProgram p(3);
          return p.cnot(2, 3).cnot(1, 2).h(1).label("passive");
        }
      },
      family);
}

GateProgram local_passivization_program(const DensityOperator& rho, const QubitHamiltonian& h) {
  if (rho.qubit_count() != 2 || h.qubit_count() != 2) {
    throw InputError("local passivization acts on a two-qubit state and Hamiltonian");
  }
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && std::abs(m(i, j)) > 1e-12) throw InputError("local passivization expects a diagonal state");
  const auto pops = m.real_diagonal();
  const auto best = restricted_passive(pops, h.basis_energies());
  GateProgram p(2);
  append_permutation(p, restricted_permutations()[best.index]);
  return p.label("passive");
}

DensityOperator exp3_local_passive(const DensityOperator& rho12) {
  const int pair[] = {1, 2};
  const auto h12 = named_system("DBFM").restricted_to(pair);
  return run(local_passivization_program(rho12, h12), rho12).final;
}

}  // namespace ergocert
