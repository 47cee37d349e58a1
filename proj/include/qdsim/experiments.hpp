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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "qdsim/swap_test.hpp"

namespace qdsim {

// Deterministic sweep harness. Every instance or grid point is a pure
// function of (parameters, index); the OpenMP kernels write each record into
// its own slot so serial and parallel execution produce identical output.
// The serial path is kept as the reference implementation for testing and
// benchmarking.

enum class ExecPolicy { serial, parallel };

struct ExperimentRecord {
  double param1 = 0.0;  // eta1/theta1, or the sampled polar angle of phi1
  double param2 = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double estimate = 0.0;
  double fidelity = 0.0;
  double zeta = 0.0;
};

inline constexpr int kHistogramBins = 40;      // bin width 0.005 on [0, 0.2]
inline constexpr double kHistogramWidth = 0.005;

struct ZetaSummary {
  double mean_zeta = 0.0;
  double max_zeta = 0.0;
  std::array<std::uint64_t, kHistogramBins> histogram{};
  std::uint64_t overflow = 0;  // zeta >= 0.2
};

ZetaSummary summarize(const std::vector<ExperimentRecord>& records);

// splitmix64 mix of the master seed and the instance index; each instance
// seeds its own mt19937_64 so the schedule cannot reorder draws.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_instance_seed(std::uint64_t master, std::uint64_t index);

double uniform_unit(std::mt19937_64& rng);  // [0, 1), 53-bit mantissa

/// Haar-uniform single-qubit state: cos(theta) uniform on [-1, 1], azimuth
/// uniform on [0, 2*pi). Draw order: theta then phi.
QubitState sample_haar_qubit(std::mt19937_64& rng);

std::string rng_description();

struct RandomExperiment {
  std::vector<ExperimentRecord> records;
  ZetaSummary summary;
};

/// n independent random state pairs; param1/param2 record the polar Bloch
/// angles of the two states.
RandomExperiment run_random(int n, std::uint64_t seed, GateMode mode,
                            const DeviceParams& p,
                            ExecPolicy policy = ExecPolicy::parallel);

/// grid x grid sweep of (|0> + e^{i eta_j}|1>)/sqrt(2) with eta on [0, pi]
/// inclusive; records are row-major in (index1, index2).
std::vector<ExperimentRecord> run_phase_grid(
    int grid, GateMode mode, const DeviceParams& p,
    ExecPolicy policy = ExecPolicy::parallel);

/// grid x grid sweep of cos(theta)|0> + sin(theta)|1> with theta on [0, pi].
std::vector<ExperimentRecord> run_amplitude_grid(
    int grid, GateMode mode, const DeviceParams& p,
    ExecPolicy policy = ExecPolicy::parallel);

// CSV emission: header row first, 12 significant digits, '.' decimal
// separator, newline-terminated rows.
std::string format_csv_value(double v);
void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRecord>& records);
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);
void write_summary(std::ostream& out, const ZetaSummary& summary);

}  // namespace qdsim
