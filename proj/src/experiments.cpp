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

#include "qdsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qdsim {

ZetaSummary summarize(const std::vector<ExperimentRecord>& records) {
  ZetaSummary s;
  if (records.empty()) return s;
  double sum = 0.0;
  for (const auto& r : records) {
    sum += r.zeta;
    s.max_zeta = std::max(s.max_zeta, r.zeta);
    const auto bin = static_cast<std::int64_t>(r.zeta / kHistogramWidth);
    if (bin >= 0 && bin < kHistogramBins)
      ++s.histogram[static_cast<std::size_t>(bin)];
    else
      ++s.overflow;
  }
  s.mean_zeta = sum / static_cast<double>(records.size());
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_instance_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + splitmix64(index));
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

QubitState sample_haar_qubit(std::mt19937_64& rng) {
  const double cos_theta = 2.0 * uniform_unit(rng) - 1.0;
  const double theta = std::acos(cos_theta);
  const double phi = 2.0 * std::numbers::pi * uniform_unit(rng);
  return bloch_state(theta, phi);
}

std::string rng_description() {
  return "std::mt19937_64 (Mersenne Twister 19937, 64-bit word), one engine "
         "per instance seeded with splitmix64(seed + splitmix64(index)); "
         "uniform doubles take the top 53 bits; Haar states use the uniform "
         "cos(theta) construction";
}

namespace {

template <typename Fn>
void run_indexed(std::int64_t count, ExecPolicy policy, const Fn& fn) {
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) fn(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
  }
}

ExperimentRecord make_record(double param1, double param2,
                             const QubitState& phi1, const QubitState& phi2,
                             const Matrix& circuit) {
  const SwapTestResult r = run_swap_test(phi1, phi2, circuit);
  return {param1, param2, r.p0, r.p1, r.estimate, r.exact_fidelity, r.zeta};
}

}  // namespace

RandomExperiment run_random(int n, std::uint64_t seed, GateMode mode,
                            const DeviceParams& p, ExecPolicy policy) {
  if (n < 1) throw std::invalid_argument("run_random: n must be >= 1");
  const Matrix circuit = circuit_unitary(swap_test_circuit(mode, p));
  RandomExperiment out;
  out.records.resize(static_cast<std::size_t>(n));
  ExperimentRecord* records = out.records.data();
  run_indexed(n, policy, [&](std::int64_t i) {
    std::mt19937_64 rng(derive_instance_seed(seed, static_cast<std::uint64_t>(i)));
    const double cos1 = 2.0 * uniform_unit(rng) - 1.0;
    const double az1 = 2.0 * std::numbers::pi * uniform_unit(rng);
    const double cos2 = 2.0 * uniform_unit(rng) - 1.0;
    const double az2 = 2.0 * std::numbers::pi * uniform_unit(rng);
    const double theta1 = std::acos(cos1);
    const double theta2 = std::acos(cos2);
    records[i] = make_record(theta1, theta2, bloch_state(theta1, az1),
                             bloch_state(theta2, az2), circuit);
  });
  out.summary = summarize(out.records);
  return out;
}

std::vector<ExperimentRecord> run_phase_grid(int grid, GateMode mode,
                                             const DeviceParams& p,
                                             ExecPolicy policy) {
  if (grid < 2) throw std::invalid_argument("run_phase_grid: grid must be >= 2");
  const Matrix circuit = circuit_unitary(swap_test_circuit(mode, p));
  const std::int64_t total = static_cast<std::int64_t>(grid) * grid;
  std::vector<ExperimentRecord> records(static_cast<std::size_t>(total));
  ExperimentRecord* data = records.data();
  run_indexed(total, policy, [&](std::int64_t idx) {
    const int i = static_cast<int>(idx / grid);
    const int j = static_cast<int>(idx % grid);
    const double eta1 = std::numbers::pi * i / (grid - 1);
    const double eta2 = std::numbers::pi * j / (grid - 1);
    data[idx] = make_record(eta1, eta2, phase_state(eta1), phase_state(eta2),
                            circuit);
  });
  return records;
}

std::vector<ExperimentRecord> run_amplitude_grid(int grid, GateMode mode,
                                                 const DeviceParams& p,
                                                 ExecPolicy policy) {
  if (grid < 2)
    throw std::invalid_argument("run_amplitude_grid: grid must be >= 2");
  const Matrix circuit = circuit_unitary(swap_test_circuit(mode, p));
  const std::int64_t total = static_cast<std::int64_t>(grid) * grid;
  std::vector<ExperimentRecord> records(static_cast<std::size_t>(total));
  ExperimentRecord* data = records.data();
  run_indexed(total, policy, [&](std::int64_t idx) {
    const int i = static_cast<int>(idx / grid);
    const int j = static_cast<int>(idx % grid);
    const double theta1 = std::numbers::pi * i / (grid - 1);
    const double theta2 = std::numbers::pi * j / (grid - 1);
    data[idx] = make_record(theta1, theta2, amplitude_state(theta1),
                            amplitude_state(theta2), circuit);
  });
  return records;
}

std::string format_csv_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRecord>& records) {
  out << "param1,param2,p0,p1,estimate,fidelity,zeta\n";
  for (const auto& r : records) {
    out << format_csv_value(r.param1) << ',' << format_csv_value(r.param2)
        << ',' << format_csv_value(r.p0) << ',' << format_csv_value(r.p1)
        << ',' << format_csv_value(r.estimate) << ','
        << format_csv_value(r.fidelity) << ',' << format_csv_value(r.zeta)
        << '\n';
  }
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
  out << "t_ns,p000,p001,p010,p011,p100,p101,p110,p111\n";
  for (const auto& pt : trace) {
    out << format_csv_value(pt.t_ns);
    for (double pop : pt.populations) out << ',' << format_csv_value(pop);
    out << '\n';
  }
}

void write_summary(std::ostream& out, const ZetaSummary& summary) {
  out << "mean_zeta=" << format_csv_value(summary.mean_zeta) << "\n";
  out << "max_zeta=" << format_csv_value(summary.max_zeta) << "\n";
  out << "histogram bin_width=" << kHistogramWidth << " range=[0,"
      << kHistogramBins * kHistogramWidth << ")\n";
  for (int b = 0; b < kHistogramBins; ++b) {
    if (summary.histogram[static_cast<std::size_t>(b)] == 0) continue;
    out << "  bin[" << format_csv_value(b * kHistogramWidth) << ","
        << format_csv_value((b + 1) * kHistogramWidth)
        << ") = " << summary.histogram[static_cast<std::size_t>(b)] << "\n";
  }
  if (summary.overflow != 0) out << "  overflow = " << summary.overflow << "\n";
}

}  // namespace qdsim
