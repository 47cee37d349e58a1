// Copyright 2026 The qdsim Authors
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

// Command-line driver: truth tables, gate population traces, single swap-test
// evaluations, and the deterministic sweep experiments, all emitting CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qdsim/experiments.hpp"

namespace {

using namespace qdsim;

struct CommonOpts {
  std::string params_file;
  std::string out_file;
  std::string mode = "physical";
};

DeviceParams resolve_params(const CommonOpts& opts) {
  return opts.params_file.empty() ? DeviceParams::preset()
                                  : load_device_params(opts.params_file);
}

GateMode resolve_mode(const CommonOpts& opts) {
  if (opts.mode == "ideal") return GateMode::ideal;
  if (opts.mode == "physical") return GateMode::physical;
  throw std::invalid_argument("mode must be 'ideal' or 'physical'");
}

// CSV and summaries go to --out when given, else stdout.
void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_file);
  out << text;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_mode = true) {
  cmd->add_option("--params", opts.params_file,
                  "device parameter file (defaults to the built-in preset)");
  cmd->add_option("--out", opts.out_file, "output file (defaults to stdout)");
  if (with_mode)
    cmd->add_option("--mode", opts.mode, "ideal|physical")
        ->check(CLI::IsMember({"ideal", "physical"}));
}

QubitState parse_bloch(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected 'theta,phi', got '" + text + "'");
  const double theta = std::stod(text.substr(0, comma));
  const double phi = std::stod(text.substr(comma + 1));
  return bloch_state(theta, phi);
}

int parse_basis(const std::string& bits) {
  if (bits.size() != 3 || bits.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("initial state must be a 3-bit string, got '" +
                                bits + "'");
  return basis_index(bits[0] - '0', bits[1] - '0', bits[2] - '0');
}

std::string truth_table_csv(const TruthTable& table) {
  std::ostringstream out;
  out << "input,output,amplitude_re,amplitude_im,leakage\n";
  for (const auto& row : table.rows) {
    out << basis_label(row.input) << ',' << basis_label(row.dominant) << ','
        << format_csv_value(row.amplitude.real()) << ','
        << format_csv_value(row.amplitude.imag()) << ','
        << format_csv_value(row.leakage) << '\n';
  }
  return out.str();
}

int run_app(int argc, char** argv) {
  CLI::App app{"swap-test simulator for capacitively coupled charge qubits"};
  app.require_subcommand(1);

  // truth-table
  CommonOpts tt_opts;
  std::string tt_gate = "tl";
  int tt_target = 0;
  auto* tt = app.add_subcommand("truth-table", "print a gate truth table");
  tt->add_option("--gate", tt_gate, "tl|s")->check(CLI::IsMember({"tl", "s"}));
  tt->add_option("--target", tt_target, "target qubit for the tl gate (1..3)");
  add_common(tt, tt_opts);

  // trace
  CommonOpts tr_opts;
  std::string tr_gate = "tl";
  std::string tr_initial = "000";
  int tr_samples = 200;
  auto* tr = app.add_subcommand("trace", "population trace while a gate runs");
  tr->add_option("--initial", tr_initial, "initial basis state, e.g. 010")
      ->required();
  tr->add_option("--gate", tr_gate, "tl|s")->check(CLI::IsMember({"tl", "s"}));
  tr->add_option("--samples", tr_samples, "number of samples (>= 2)");
  add_common(tr, tr_opts, /*with_mode=*/false);

  // run
  CommonOpts run_opts;
  std::string phi1_text = "0,0";
  std::string phi2_text = "0,0";
  auto* run = app.add_subcommand("run", "run one swap test");
  run->add_option("--phi1", phi1_text, "Bloch angles theta,phi of state 1")
      ->required();
  run->add_option("--phi2", phi2_text, "Bloch angles theta,phi of state 2")
      ->required();
  add_common(run, run_opts);

  // experiment random|phase|amplitude
  CommonOpts ex_opts;
  int ex_n = 1000;
  std::uint64_t ex_seed = 0;
  int ex_grid = 101;
  auto* ex = app.add_subcommand("experiment", "deterministic sweep experiments");
  ex->require_subcommand(1);
  auto* ex_random = ex->add_subcommand("random", "random state pairs");
  ex_random->add_option("--n", ex_n, "number of instances");
  ex_random->add_option("--seed", ex_seed, "master seed");
  auto* ex_phase = ex->add_subcommand("phase", "phase-difference grid");
  ex_phase->add_option("--grid", ex_grid, "grid size per axis (>= 2)");
  auto* ex_ampl = ex->add_subcommand("amplitude", "amplitude-difference grid");
  ex_ampl->add_option("--grid", ex_grid, "grid size per axis (>= 2)");
  for (auto* sub : {ex_random, ex_phase, ex_ampl}) add_common(sub, ex_opts);

  CLI11_PARSE(app, argc, argv);

  if (tt->parsed()) {
    DeviceParams p = resolve_params(tt_opts);
    if (tt_target != 0) p = with_target(p, tt_target);
    const GateMode mode = resolve_mode(tt_opts);
    const Matrix u = tt_gate == "tl"
                         ? (mode == GateMode::ideal ? tl_ideal(p.target)
                                                    : tl_physical(p))
                         : s_gate(mode, p);
    emit(tt_opts, truth_table_csv(truth_table(u)));
  } else if (tr->parsed()) {
    const DeviceParams p = resolve_params(tr_opts);
    const auto gate = tr_gate == "tl" ? TraceGate::tl : TraceGate::s;
    const auto trace = population_trace(p, parse_basis(tr_initial), gate,
                                        tr_samples);
    std::ostringstream out;
    write_trace_csv(out, trace);
    emit(tr_opts, out.str());
  } else if (run->parsed()) {
    const DeviceParams p = resolve_params(run_opts);
    const SwapTestResult r = run_swap_test(
        parse_bloch(phi1_text), parse_bloch(phi2_text), resolve_mode(run_opts), p);
    std::ostringstream out;
    out << "p0=" << format_csv_value(r.p0) << "\n"
        << "p1=" << format_csv_value(r.p1) << "\n"
        << "estimate=" << format_csv_value(r.estimate) << "\n"
        << "fidelity=" << format_csv_value(r.exact_fidelity) << "\n"
        << "zeta=" << format_csv_value(r.zeta) << "\n";
    emit(run_opts, out.str());
  } else if (ex->parsed()) {
    const DeviceParams p = resolve_params(ex_opts);
    const GateMode mode = resolve_mode(ex_opts);
    std::ostringstream csv;
    if (ex_random->parsed()) {
      const RandomExperiment result = run_random(ex_n, ex_seed, mode, p);
      write_experiment_csv(csv, result.records);
      std::cout << "instances=" << ex_n << " seed=" << ex_seed
                << " mode=" << ex_opts.mode << "\n"
                << "state distribution: Haar-uniform on the single-qubit "
                   "state space\n"
                << "rng: " << rng_description() << "\n";
      write_summary(std::cout, result.summary);
    } else {
      const auto records = ex_phase->parsed()
                               ? run_phase_grid(ex_grid, mode, p)
                               : run_amplitude_grid(ex_grid, mode, p);
      write_experiment_csv(csv, records);
      const ZetaSummary summary = summarize(records);
      std::cout << "grid=" << ex_grid << "x" << ex_grid
                << " mode=" << ex_opts.mode << "\n";
      write_summary(std::cout, summary);
    }
    emit(ex_opts, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
