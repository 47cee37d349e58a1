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
#include <vector>

#include "qdsim/device.hpp"
#include "qdsim/linalg.hpp"

namespace qdsim {

enum class GateMode { ideal, physical };

enum class GateKind {
  tl_ideal,
  tl_physical,
  hadamard,
  pauli_x,
  fredkin_ideal,
  toffoli_ideal,
};

struct GateSpec {
  GateKind kind;
  int target = 1;
  std::vector<int> controls;
  double duration_ns = 0.0;  // 0 for ideal and single-qubit gates
  void validate() const;     // roles in 1..3, target not among controls
};

bool is_three_qubit(GateKind kind);

/// Gate time of the physical conditional flip: pi / delta_target.
double tl_gate_time(const DeviceParams& p);

/// Conditional bit flip: |b>_target |00>_controls -> -i |1-b>_target |00>,
/// identity on every other control configuration.
Matrix tl_ideal(int target);
Matrix tl_ideal(int target, const std::array<int, 2>& controls);

/// The same gate realized by the device: evolution under the full
/// Hamiltonian for t = pi/delta_target, composed with the co-rotating frame
/// of the free Hamiltonian, U = exp(+i H0 t) exp(-i H t). Refuses parameter
/// sets that hard-fail the regime check (ratio < 2).
Matrix tl_physical(const DeviceParams& p);

/// Conditional swap of qubits 2 and 3 with qubit 1 as control, built from
/// three conditional flips with targets (2, 3, 2), applied right to left.
Matrix s_gate_ideal();
Matrix s_gate_physical(const DeviceParams& p);
Matrix s_gate(GateMode mode, const DeviceParams& p);

// Exact embedded single-qubit gates; duration 0 in all time accounting.
Matrix hadamard_gate(int qubit);
Matrix x_gate(int qubit);

// Reference three-qubit gates for cross-checks.
Matrix fredkin_ideal();            // swaps qubits 2,3 when qubit 1 is |0>
Matrix toffoli_ideal(int target);  // flips target when both others are |1>

struct TruthTableRow {
  int input = 0;
  Vector output;        // full 8-dim output column
  int dominant = 0;     // basis state with the largest population
  Complex amplitude;    // its amplitude
  double leakage = 0.0; // 1 - |amplitude|^2
};

struct TruthTable {
  std::array<TruthTableRow, 8> rows;
  double max_leakage() const;
};

TruthTable truth_table(const Matrix& u);

enum class TraceGate { tl, s };

struct TracePoint {
  double t_ns = 0.0;
  std::array<double, 8> populations{};
};

/// Populations |<jkl| psi(t)>|^2 while the gate Hamiltonian runs, sampled
/// uniformly on [0, duration]. The populations are frame-independent because
/// the free Hamiltonian is diagonal. For the conditional swap the three flip
/// segments are concatenated, handing the frame-corrected state from one
/// segment to the next.
std::vector<TracePoint> population_trace(const DeviceParams& p,
                                         int initial_basis, TraceGate gate,
                                         int samples);

}  // namespace qdsim
