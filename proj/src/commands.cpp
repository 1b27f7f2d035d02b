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

#include "ergocert/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "ergocert/circuit.hpp"
#include "ergocert/errors.hpp"
#include "ergocert/oracle.hpp"
#include "ergocert/threshold.hpp"

namespace ergocert {
namespace {

constexpr int kDefaultResolution = 101;
const char* const kNamedSystems[] = {"NAFP", "BRTP", "FAN", "TMP", "DBFM"};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QubitHamiltonian load_system(const std::string& selector) {
  for (const char* name : kNamedSystems)
    if (selector == name) return named_system(selector);

  std::string path = selector, pick;
  if (!std::filesystem::exists(path)) {
    const auto colon = selector.rfind(':');
    if (colon == std::string::npos || !std::filesystem::exists(selector.substr(0, colon))) {
      throw InputError("unknown system '" + selector + "' (not a named system or a readable config file)");
    }
    path = selector.substr(0, colon);
    pick = selector.substr(colon + 1);
  }
  auto systems = parse_system_config(read_text(path));
  if (!pick.empty()) {
    const auto it = systems.find(pick);
    if (it == systems.end()) throw InputError("system '" + pick + "' not defined in " + path);
    return it->second;
  }
  if (systems.size() != 1) {
    std::string names;
    for (const auto& [k, v] : systems) names += (names.empty() ? "" : ", ") + k;
    throw InputError(path + " defines " + std::to_string(systems.size()) + " systems (" + names +
                     "); select one with " + path + ":<name>");
  }
  return systems.begin()->second;
}

std::string default_system(const RunConfig& cfg, const std::string& family) {
  if (family == "bell-diag") return "NAFP";
  if (family == "werner") return "BRTP";
  if (family == "ghz" || family == "exp3") {
    if (family == "exp3") return "DBFM";
    const int n = cfg.n.value_or(3);
    if (n == 3) return "FAN";
    if (n == 10) return "TMP";
  }
  return {};
}

QubitHamiltonian resolve_system(const RunConfig& cfg, const std::string& family) {
  if (!cfg.system.empty()) return load_system(cfg.system);
  const auto fallback = default_system(cfg, family);
  if (!fallback.empty()) return named_system(fallback);
  if (family == "ghz" && cfg.n) return identical_qubits(*cfg.n, 500.0);
  throw InputError("--system is required for family '" + family + "'");
}

struct Units {
  double scale = 1.0;
  std::string name = "MHz";
};

Units resolve_units(const RunConfig& cfg, const QubitHamiltonian& h) {
  const std::string label = cfg.units.empty() ? default_reference_label(h.name()) : cfg.units;
  if (label.empty() || label == "MHz") return {};
  return {h.gap_of(label), "omega_" + label};
}

std::string resolve_family(const RunConfig& cfg) {
  std::string f = cfg.family;
  if (f == "noisy-ghz") f = "ghz";
  if (f.empty() && !cfg.matrix_path.empty()) f = "matrix";
  if (f.empty()) throw InputError("--family is required");
  if (f != "bell-diag" && f != "werner" && f != "ghz" && f != "matrix") {
    throw InputError("unknown family '" + cfg.family + "' (expected bell-diag, werner, ghz or matrix)");
  }
  return f;
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw InputError(std::string(flag) + " is required for this family");
  if (!std::isfinite(*v)) throw InputError(std::string(flag) + " must be finite");
  return *v;
}

double purity_from(const RunConfig& cfg) {
  if (cfg.lambda && cfg.theta) throw InputError("give either --lambda or --theta, not both");
  if (cfg.theta) {
    const double c = std::cos(require(cfg.theta, "--theta"));
    return std::abs(c) < 1e-15 ? 0.0 : c;
  }
  return require(cfg.lambda, "--lambda");
}

int family_qubits(const RunConfig& cfg, const QubitHamiltonian& h) {
  if (cfg.n && *cfg.n != h.qubit_count()) {
    throw InputError("--n " + std::to_string(*cfg.n) + " does not match the " +
                     std::to_string(h.qubit_count()) + "-qubit system");
  }
  return h.qubit_count();
}

void require_qubits(const QubitHamiltonian& h, int n, const std::string& family) {
  if (h.qubit_count() != n) {
    throw InputError("family '" + family + "' needs a " + std::to_string(n) + "-qubit system, got " +
                     std::to_string(h.qubit_count()));
  }
}

std::vector<Bound> resolve_bounds(const std::string& s) {
  if (s == "all") return {Bound::gl, Bound::g, Bound::i};
  return {parse_bound(s)};
}

CertificationReport evaluate(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part,
                             const Units& units) {
  return normalized(certify(rho, h, part), units.scale, units.name);
}

template <typename F>
std::vector<std::vector<Cell>> parallel_rows(std::size_t count, int threads, F&& make_row) {
  std::vector<std::vector<Cell>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        rows[k] = make_row(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::size_t n = threads > 0 ? static_cast<std::size_t>(threads) : std::thread::hardware_concurrency();
  n = std::clamp<std::size_t>(n, 1, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Cell> concat(std::vector<Cell> a, const std::vector<Cell>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int grid_resolution(const RunConfig& cfg) {
  const int k = cfg.resolution.value_or(kDefaultResolution);
  if (k < 2) throw InputError("--resolution must be at least 2");
  return k;
}

}  // namespace

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in index list '" + s + "'");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) throw InputError("invalid index '" + tok + "' in '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("index list is empty");
  return out;
}

CommandResult cmd_certify(const RunConfig& cfg) {
  const std::string family = resolve_family(cfg);
  const QubitHamiltonian h = resolve_system(cfg, family);
  const Units units = resolve_units(cfg, h);

  Cell beta, gamma, lambda;
  auto rho = [&]() -> DensityOperator {
    if (family == "bell-diag") {
      require_qubits(h, 2, family);
      const BellDiagonalParams p{require(cfg.beta, "--beta"), require(cfg.gamma, "--gamma")};
      beta = p.beta;
      gamma = p.gamma;
      return bell_diagonal(p);
    }
    if (family == "werner") {
      require_qubits(h, 2, family);
      const double l = require(cfg.lambda, "--lambda");
      lambda = l;
      return werner(l);
    }
    if (family == "ghz") {
      const double l = purity_from(cfg);
      lambda = l;
      return noisy_ghz({l, family_qubits(cfg, h)});
    }
    if (cfg.matrix_path.empty()) throw InputError("family 'matrix' needs --matrix <file>");
    auto file = read_matrix_file(cfg.matrix_path);
    require_qubits(h, file.qubit_count, "matrix");
    return DensityOperator(std::move(file.matrix), file.qubit_count);
  }();

  const Bipartition part(cfg.partition, h.qubit_count());
  const auto report = evaluate(rho, h, part, units);

  CommandResult res;
  res.table.single_record = true;
  res.table.columns = concat(concat({"system", "family", "qubits", "partition", "beta", "gamma", "lambda"},
                                    report_columns()),
                             {"nielsen_kempe", "ppt"});
  res.table.add_row(concat(concat({h.name(), family, std::int64_t{h.qubit_count()}, part.to_string(), beta, gamma,
                                   lambda},
                                  report_cells(report)),
                           {std::string(to_string(nielsen_kempe(rho, part))),
                            std::string(to_string(partial_transpose_check(rho, part)))}));
  return res;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const std::string family = resolve_family(cfg);
  if (family == "matrix") throw InputError("sweep needs a parametrised family");
  const QubitHamiltonian h = resolve_system(cfg, family);
  const Units units = resolve_units(cfg, h);
  const Bipartition part(cfg.partition, h.qubit_count());
  const int k = grid_resolution(cfg);

  CommandResult res;
  if (family == "bell-diag") {
    require_qubits(h, 2, family);
    res.table.columns = concat({"beta", "gamma"}, report_columns());
    const auto count = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
    res.table.rows = parallel_rows(count, cfg.threads, [&](std::size_t idx) {
      const double b = std::numbers::pi * static_cast<double>(idx / k) / (k - 1);
      const double g = std::numbers::pi * static_cast<double>(idx % k) / (k - 1);
      const auto r = evaluate(bell_diagonal({b, g}), h, part, units);
      return concat({b, g}, report_cells(r));
    });
    return res;
  }

  StateFamily states;
  if (family == "werner") {
    require_qubits(h, 2, family);
    states = werner_family();
  } else {
    states = noisy_ghz_family(family_qubits(cfg, h));
  }
  res.table.columns = concat({"lambda"}, report_columns());
  res.table.rows = parallel_rows(static_cast<std::size_t>(k), cfg.threads, [&](std::size_t idx) {
    const double l = static_cast<double>(idx) / (k - 1);
    return concat({l}, report_cells(evaluate(states(l), h, part, units)));
  });
  return res;
}

CommandResult cmd_threshold(const RunConfig& cfg) {
  const std::string family = resolve_family(cfg);
  if (family != "werner" && family != "ghz") throw InputError("threshold needs a lambda family (werner or ghz)");
  const QubitHamiltonian h = resolve_system(cfg, family);
  const Bipartition part(cfg.partition, h.qubit_count());
  StateFamily states;
  if (family == "werner") {
    require_qubits(h, 2, family);
    states = werner_family();
  } else {
    states = noisy_ghz_family(family_qubits(cfg, h));
  }

  CommandResult res;
  res.table.columns = {"system", "family",      "partition",  "bound",      "status",
                       "threshold", "closed_form", "difference", "evaluations"};
  std::string missing;
  for (Bound b : resolve_bounds(cfg.bound)) {
    const auto t = solve_threshold(states, h, part, b);
    Cell threshold, closed, diff;
    if (t.status == ThresholdStatus::found) {
      threshold = t.lambda;
      if (family == "ghz" && b == Bound::gl) {
        const double c = gl_threshold_formula(h.qubit_count(), part.kappa());
        closed = c;
        diff = t.lambda - c;
      }
    } else {
      missing += std::string(missing.empty() ? "" : ", ") + std::string(to_string(b)) + " (" +
                 std::string(to_string(t.status)) + " detected)";
    }
    res.table.add_row({h.name(), family, part.to_string(), std::string(to_string(b)),
                       std::string(to_string(t.status)), threshold, closed, diff,
                       std::int64_t{t.evaluations}});
  }
  if (!missing.empty()) {
    res.exit_code = kExitInput;
    res.message = "no crossing in [0, 1] for bound " + missing;
  }
  return res;
}

CommandResult cmd_simulate(const RunConfig& cfg) {
  const std::string name = cfg.program.empty() ? cfg.family : cfg.program;
  if (name.empty()) throw InputError("simulate needs a program (bell-diag, ghz, exp3 or a program file)");

  struct Target {
    std::string label;
    ComplexMatrix state;
  };
  std::vector<Target> targets;
  std::optional<QubitHamiltonian> h;
  std::optional<GateProgram> program;
  std::optional<DensityOperator> input;
  Cell purity, lopsidedness;
  double exp3_lambda = -1.0;

  if (name == "bell-diag") {
    h = resolve_system(cfg, "bell-diag");
    require_qubits(*h, 2, name);
    const BellDiagonalParams p{require(cfg.beta, "--beta"), require(cfg.gamma, "--gamma")};
    program = bell_diag_program(p);
    program->append(passivization_program(BellDiagonalFamily{p}, *h));
    input = bell_diag_input();
    const auto target = bell_diagonal(p);
    targets = {{"bell-diagonal", target.matrix()}, {"passive", passive_state(target, *h).matrix()}};
  } else if (name == "ghz") {
    h = resolve_system(cfg, "ghz");
    const int n = family_qubits(cfg, *h);
    double theta = 0.0;
    if (cfg.theta) theta = require(cfg.theta, "--theta");
    else if (cfg.lambda) theta = std::acos(std::clamp(require(cfg.lambda, "--lambda"), -1.0, 1.0));
    auto prep = ghz_program(n, theta);
    program = std::move(prep.program);
    program->append(passivization_program(NoisyGhzFamily{n}, *h));
    input = std::move(prep.input);
    purity = prep.purity;
    lopsidedness = star_lopsidedness(*h);
    targets = {{"ghz", noisy_ghz({prep.purity, n}).matrix()},
               {"passive", pseudo_pure(basis_ket(0, n), prep.purity).matrix()}};
  } else if (name == "exp3") {
    h = resolve_system(cfg, "exp3");
    require_qubits(*h, 3, name);
    exp3_lambda = purity_from(cfg);
    program = exp3_program();
    program->append(passivization_program(Exp3Family{}, *h));
    input = pseudo_pure(basis_ket(0, 3), exp3_lambda);
    purity = exp3_lambda;
    targets = {{"ghz", noisy_ghz({exp3_lambda, 3}).matrix()},
               {"passive", pseudo_pure(basis_ket(0, 3), exp3_lambda).matrix()}};
  } else {
    const std::string text = read_text(name);
    std::optional<int> n;
    if (!cfg.matrix_path.empty()) {
      auto file = read_matrix_file(cfg.matrix_path);
      n = file.qubit_count;
      input = DensityOperator(std::move(file.matrix), file.qubit_count);
    }
    try {
      program = parse_program(text, n);
    } catch (const InputError& e) {
      throw InputError(name + ": " + e.what());
    }
    if (!input) input = pseudo_pure(basis_ket(0, program->qubit_count()));
    if (!cfg.system.empty()) {
      h = load_system(cfg.system);
      require_qubits(*h, program->qubit_count(), "program");
    }
  }

  const Units units = h ? resolve_units(cfg, *h) : Units{};
  const auto trace = run(*program, *input);

  auto target_for = [&](const std::string& label) -> const Target* {
    for (const auto& t : targets)
      if (t.label == label) return &t;
    return nullptr;
  };
  auto energy_cell = [&](const DensityOperator& rho) -> Cell {
    if (!h) return {};
    return energy(rho, *h) / units.scale;
  };

  CommandResult res;
  res.table.columns = {"step", "label", "energy", "fidelity", "units", "purity", "lopsidedness"};
  std::int64_t step = 0;
  for (const auto& snap : trace.states) {
    const Target* t = target_for(snap.label);
    res.table.add_row({++step, snap.label, energy_cell(snap.state),
                       t ? Cell{fidelity(snap.state.matrix(), t->state)} : Cell{}, units.name, purity,
                       lopsidedness});
  }
  const Target* final_target = targets.empty() ? nullptr : &targets.back();
  res.table.add_row({++step, std::string("final"), energy_cell(trace.final),
                     final_target ? Cell{fidelity(trace.final.matrix(), final_target->state)} : Cell{},
                     units.name, purity, lopsidedness});

  if (name == "exp3") {
    const int pair[] = {1, 2};
    const auto h12 = h->restricted_to(pair);
    const DensityOperator* prepared = nullptr;
    for (const auto& s : trace.states)
      if (s.label == "ghz") prepared = &s.state;
    const auto rho12 = prepared->marginal(pair);
    const auto local = run(local_passivization_program(rho12, h12), rho12).final;
    const double a = (1.0 + exp3_lambda) / 4.0, b = (1.0 - exp3_lambda) / 4.0;
    const double diag[] = {a, a, b, b};
    res.table.add_row({++step, std::string("local-passive"), energy(local, h12) / units.scale,
                       fidelity(local.matrix(), ComplexMatrix::diagonal(std::span<const double>(diag))),
                       units.name, purity, lopsidedness});
  }

  if (!cfg.dump_path.empty()) {
    std::ofstream out(cfg.dump_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + cfg.dump_path + "'");
    out << format_matrix(trace.final.matrix());
  }
  return res;
}

CommandResult cmd_oracle(const RunConfig& cfg) {
  OracleOptions opts;
  opts.seed = cfg.seed;
  if (cfg.resolution) opts.npt_resolution = grid_resolution(cfg);
  const auto suites = run_oracle_suites(opts);

  CommandResult res;
  res.table.columns = {"suite", "name", "cases", "failures", "worst", "tolerance", "status"};
  long failed = 0;
  for (const auto& s : suites) {
    res.table.add_row({s.suite, s.name, std::int64_t{s.cases}, std::int64_t{s.failures}, s.worst, s.tolerance,
                       std::string(s.passed() ? "pass" : "fail")});
    if (!s.passed()) ++failed;
  }
  res.message = std::to_string(suites.size()) + " oracle suites, " + std::to_string(failed) + " failed";
  if (failed) res.exit_code = kExitOracle;
  return res;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    CommandResult res;
    if (cfg.command == "certify") res = cmd_certify(cfg);
    else if (cfg.command == "sweep") res = cmd_sweep(cfg);
    else if (cfg.command == "threshold") res = cmd_threshold(cfg);
    else if (cfg.command == "simulate") res = cmd_simulate(cfg);
    else if (cfg.command == "oracle") res = cmd_oracle(cfg);
    else throw InputError("unknown command '" + cfg.command + "'");

    const std::string text = serialize(res.table, cfg.format);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw InputError("cannot write '" + cfg.out + "'");
      file << text;
    }
    if (!res.message.empty()) err << res.message << '\n';
    return res.exit_code;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace ergocert
