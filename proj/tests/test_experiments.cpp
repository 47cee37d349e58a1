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

#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "doctest.h"

using namespace qdsim;

namespace {

bool records_identical(const std::vector<ExperimentRecord>& a,
                       const std::vector<ExperimentRecord>& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(),
                     a.size() * sizeof(ExperimentRecord)) == 0;
}

}  // namespace

TEST_CASE("instance seeding is a pure function of (seed, index)") {
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);  // reference first output
  CHECK(derive_instance_seed(42, 0) == derive_instance_seed(42, 0));
  CHECK(derive_instance_seed(42, 0) != derive_instance_seed(42, 1));
  CHECK(derive_instance_seed(42, 0) != derive_instance_seed(43, 0));
}

TEST_CASE("uniform draws and Haar samples") {
  std::mt19937_64 rng(9);
  double sum = 0.0;
  for (int i = 0; i < 4000; ++i) {
    const double u = uniform_unit(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / 4000.0 == doctest::Approx(0.5).epsilon(0.05));

  std::mt19937_64 rng2(10);
  for (int i = 0; i < 100; ++i) CHECK(is_normalized(sample_haar_qubit(rng2)));
}

TEST_CASE("random experiment is deterministic and schedule independent") {
  const DeviceParams p = DeviceParams::preset();
  const auto a = run_random(200, 42, GateMode::physical, p, ExecPolicy::parallel);
  const auto b = run_random(200, 42, GateMode::physical, p, ExecPolicy::parallel);
  const auto serial =
      run_random(200, 42, GateMode::physical, p, ExecPolicy::serial);
  CHECK(records_identical(a.records, b.records));
  CHECK(records_identical(a.records, serial.records));

  const auto other_seed =
      run_random(200, 43, GateMode::physical, p, ExecPolicy::serial);
  CHECK(!records_identical(a.records, other_seed.records));
}

TEST_CASE("grids are row-major and schedule independent") {
  const DeviceParams p = DeviceParams::preset();
  const int g = 9;
  const auto par = run_phase_grid(g, GateMode::ideal, p, ExecPolicy::parallel);
  const auto ser = run_phase_grid(g, GateMode::ideal, p, ExecPolicy::serial);
  CHECK(records_identical(par, ser));
  CHECK(par.size() == static_cast<std::size_t>(g) * g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const auto& r = par[static_cast<std::size_t>(i) * g + j];
      CHECK(r.param1 == std::numbers::pi * i / (g - 1));
      CHECK(r.param2 == std::numbers::pi * j / (g - 1));
    }
  }

  const auto amp_par =
      run_amplitude_grid(g, GateMode::ideal, p, ExecPolicy::parallel);
  const auto amp_ser =
      run_amplitude_grid(g, GateMode::ideal, p, ExecPolicy::serial);
  CHECK(records_identical(amp_par, amp_ser));
}

TEST_CASE("ideal mode leaves no estimation error anywhere") {
  const DeviceParams p = DeviceParams::preset();
  const auto random = run_random(200, 7, GateMode::ideal, p);
  for (const auto& r : random.records) CHECK(r.zeta <= 1e-10);
  for (const auto& r : run_phase_grid(11, GateMode::ideal, p))
    CHECK(r.zeta <= 1e-10);
  for (const auto& r : run_amplitude_grid(11, GateMode::ideal, p))
    CHECK(r.zeta <= 1e-10);
}

TEST_CASE("physical-mode random sweep statistics at the preset") {
  const DeviceParams p = DeviceParams::preset();
  const auto result = run_random(1000, 42, GateMode::physical, p);
  CHECK(result.summary.mean_zeta >= 0.003);
  CHECK(result.summary.mean_zeta <= 0.02);
  int beyond = 0;
  for (const auto& r : result.records)
    if (r.zeta > 0.06) ++beyond;
  CHECK(beyond <= 10);  // at most 1%
}

TEST_CASE("summary matches a recomputation from the records") {
  const DeviceParams p = DeviceParams::preset();
  const auto result = run_random(300, 5, GateMode::physical, p);
  const ZetaSummary again = summarize(result.records);
  CHECK(again.mean_zeta == result.summary.mean_zeta);
  CHECK(again.max_zeta == result.summary.max_zeta);
  CHECK(again.histogram == result.summary.histogram);
  std::uint64_t total = again.overflow;
  for (auto c : again.histogram) total += c;
  CHECK(total == result.records.size());
}

TEST_CASE("histogram binning") {
  std::vector<ExperimentRecord> records(3);
  records[0].zeta = 0.0;     // bin 0
  records[1].zeta = 0.005;   // bin 1 (left-closed bins)
  records[2].zeta = 0.25;    // overflow
  const ZetaSummary s = summarize(records);
  CHECK(s.histogram[0] == 1);
  CHECK(s.histogram[1] == 1);
  CHECK(s.overflow == 1);
  CHECK(s.max_zeta == 0.25);
}

TEST_CASE("CSV format") {
  CHECK(format_csv_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_csv_value(2.0) == "2");

  std::vector<ExperimentRecord> records(2);
  records[0] = {0.0, 1.0, 0.25, 0.75, 0.5, 0.5, 0.0};
  records[1] = {0.5, 0.5, 0.5, 0.5, 0.0, 0.125, 0.125};
  std::ostringstream out;
  write_experiment_csv(out, records);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "param1,param2,p0,p1,estimate,fidelity,zeta");
  std::getline(in, line);
  CHECK(line == "0,1,0.25,0.75,0.5,0.5,0");
  std::getline(in, line);
  CHECK(line == "0.5,0.5,0.5,0.5,0,0.125,0.125");
  CHECK(!std::getline(in, line));
  CHECK(out.str().back() == '\n');
}

TEST_CASE("trace CSV rows carry unit population") {
  const DeviceParams p = DeviceParams::preset();
  const auto trace = population_trace(p, 0, TraceGate::tl, 11);
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t_ns,p000,p001,p010,p011,p100,p101,p110,p111");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');  // t_ns
    double sum = 0.0;
    while (std::getline(cells, cell, ',')) sum += std::stod(cell);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(rows == 11);
}

TEST_CASE("experiment argument validation") {
  const DeviceParams p = DeviceParams::preset();
  CHECK_THROWS_AS(run_random(0, 1, GateMode::ideal, p), std::invalid_argument);
  CHECK_THROWS_AS(run_phase_grid(1, GateMode::ideal, p), std::invalid_argument);
  CHECK_THROWS_AS(run_amplitude_grid(0, GateMode::ideal, p),
                  std::invalid_argument);
}
