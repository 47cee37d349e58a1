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

#include "qdsim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdsim {

namespace {

void check_qubit(int q, const char* what) {
  if (q < 1 || q > 3)
    throw std::invalid_argument(std::string(what) + " must be in 1..3, got " +
                                std::to_string(q));
}

}  // namespace

void GateSpec::validate() const {
  check_qubit(target, "GateSpec target");
  for (int c : controls) {
    check_qubit(c, "GateSpec control");
    if (c == target)
      throw std::invalid_argument("GateSpec: target listed among controls");
  }
  if (!(duration_ns >= 0.0))
    throw std::invalid_argument("GateSpec: negative duration");
}

bool is_three_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::tl_ideal:
    case GateKind::tl_physical:
    case GateKind::fredkin_ideal:
    case GateKind::toffoli_ideal:
      return true;
    case GateKind::hadamard:
    case GateKind::pauli_x:
      return false;
  }
  return false;
}

double tl_gate_time(const DeviceParams& p) {
  const double delta_t = p.delta[p.target - 1];
  if (!(delta_t > 0.0))
    throw std::invalid_argument(
        "tl_gate_time: target tunneling must be positive");
  return std::numbers::pi / delta_t;
}

Matrix tl_ideal(int target) {
  check_qubit(target, "tl_ideal target");
  Matrix u = Matrix::Zero(8, 8);
  const Complex minus_i(0.0, -1.0);
  for (int idx = 0; idx < 8; ++idx) {
    bool controls_clear = true;
    for (int q = 1; q <= 3; ++q)
      if (q != target && bit_of(idx, q) != 0) controls_clear = false;
    if (controls_clear)
      u(idx ^ (1 << (3 - target)), idx) = minus_i;
    else
      u(idx, idx) = 1.0;
  }
  return u;
}

Matrix tl_ideal(int target, const std::array<int, 2>& controls) {
  GateSpec spec{GateKind::tl_ideal, target,
                std::vector<int>(controls.begin(), controls.end()), 0.0};
  spec.validate();
  if (controls[0] == controls[1])
    throw std::invalid_argument("tl_ideal: duplicate control");
  return tl_ideal(target);
}

Matrix tl_physical(const DeviceParams& p) {
  const RegimeReport hard = validate_tl_regime(p, 2.0);
  if (!hard.all_pass())
    throw std::invalid_argument(
        "tl_physical: parameters hard-fail the regime check (ratio < 2):\n" +
        hard.to_string());
  const double t = tl_gate_time(p);
  return expm_hermitian(build_free_hamiltonian(p), t, +1) *
         expm_hermitian(build_full_hamiltonian(p), t, -1);
}

namespace {

// Flip targets of the conditional-swap composition; qubit 1 stays a control
// throughout. Applied right to left.
constexpr std::array<int, 3> kSwapTargets = {2, 3, 2};

}  // namespace

Matrix s_gate_ideal() {
  Matrix u = Matrix::Identity(8, 8);
  for (int t : kSwapTargets) u = tl_ideal(t) * u;
  return u;
}

Matrix s_gate_physical(const DeviceParams& p) {
  Matrix u = Matrix::Identity(8, 8);
  for (int t : kSwapTargets) u = tl_physical(with_target(p, t)) * u;
  return u;
}

Matrix s_gate(GateMode mode, const DeviceParams& p) {
  return mode == GateMode::ideal ? s_gate_ideal() : s_gate_physical(p);
}

Matrix hadamard_gate(int qubit) {
  check_qubit(qubit, "hadamard_gate qubit");
  return kron_embed(hadamard2(), qubit);
}

Matrix x_gate(int qubit) {
  check_qubit(qubit, "x_gate qubit");
  return kron_embed(pauli_x(), qubit);
}

Matrix fredkin_ideal() {
  Matrix u = Matrix::Zero(8, 8);
  for (int idx = 0; idx < 8; ++idx) {
    int out = idx;
    if (bit_of(idx, 1) == 0) {
      const int q2 = bit_of(idx, 2);
      const int q3 = bit_of(idx, 3);
      out = basis_index(0, q3, q2);
    }
    u(out, idx) = 1.0;
  }
  return u;
}

Matrix toffoli_ideal(int target) {
  check_qubit(target, "toffoli_ideal target");
  Matrix u = Matrix::Zero(8, 8);
  for (int idx = 0; idx < 8; ++idx) {
    bool controls_set = true;
    for (int q = 1; q <= 3; ++q)
      if (q != target && bit_of(idx, q) != 1) controls_set = false;
    u(controls_set ? idx ^ (1 << (3 - target)) : idx, idx) = 1.0;
  }
  return u;
}

double TruthTable::max_leakage() const {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.leakage);
  return worst;
}

TruthTable truth_table(const Matrix& u) {
  if (u.rows() != 8 || u.cols() != 8)
    throw std::invalid_argument("truth_table: expected an 8x8 unitary");
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol)
    throw std::invalid_argument("truth_table: input not unitary, defect = " +
                                std::to_string(defect));
  TruthTable table;
  for (int idx = 0; idx < 8; ++idx) {
    TruthTableRow& row = table.rows[idx];
    row.input = idx;
    row.output = u.col(idx);
    int dom = 0;
    for (int i = 1; i < 8; ++i)
      if (std::abs(row.output(i)) > std::abs(row.output(dom))) dom = i;
    row.dominant = dom;
    row.amplitude = row.output(dom);
    row.leakage = 1.0 - std::norm(row.amplitude);
  }
  return table;
}

std::vector<TracePoint> population_trace(const DeviceParams& p,
                                         int initial_basis, TraceGate gate,
                                         int samples) {
  if (samples < 2)
    throw std::invalid_argument("population_trace: samples must be >= 2");
  if (initial_basis < 0 || initial_basis > 7)
    throw std::invalid_argument("population_trace: basis index out of range");

  std::vector<DeviceParams> segments;
  if (gate == TraceGate::tl) {
    segments.push_back(p);
  } else {
    for (int t : kSwapTargets) segments.push_back(with_target(p, t));
  }

  struct Segment {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
    double duration;
    Vector entry_state;
  };
  std::vector<Segment> prepared;
  Vector psi = basis_state(initial_basis);
  double total = 0.0;
  for (const DeviceParams& q : segments) {
    Segment seg;
    Eigen::SelfAdjointEigenSolver<Matrix> es(build_full_hamiltonian(q));
    seg.eigenvalues = es.eigenvalues();
    seg.eigenvectors = es.eigenvectors();
    seg.duration = tl_gate_time(q);
    seg.entry_state = psi;
    total += seg.duration;
    psi = qdsim::apply(tl_physical(q), psi);  // frame-corrected handoff
    prepared.push_back(std::move(seg));
  }

  auto evolve = [](const Segment& seg, double tau) {
    Vector coeffs = seg.eigenvectors.adjoint() * seg.entry_state;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      coeffs(i) *= std::exp(Complex(0.0, -seg.eigenvalues(i) * tau));
    return Vector(seg.eigenvectors * coeffs);
  };

  std::vector<TracePoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = total * static_cast<double>(i) / (samples - 1);
    double offset = 0.0;
    std::size_t s = 0;
    while (s + 1 < prepared.size() && t > offset + prepared[s].duration) {
      offset += prepared[s].duration;
      ++s;
    }
    const Vector state = evolve(prepared[s], std::min(t - offset, prepared[s].duration));
    TracePoint pt;
    pt.t_ns = t;
    for (int b = 0; b < 8; ++b) pt.populations[b] = std::norm(state(b));
    out.push_back(pt);
  }
  return out;
}

}  // namespace qdsim
