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

#include "qdsim/device.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qdsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_finite(const DeviceParams& p) {
  for (int i = 0; i < 3; ++i)
    if (!std::isfinite(p.eps[i]) || !std::isfinite(p.delta[i]))
      throw std::invalid_argument("DeviceParams: non-finite parameter");
  if (!std::isfinite(p.j12) || !std::isfinite(p.j13) || !std::isfinite(p.j23))
    throw std::invalid_argument("DeviceParams: non-finite coupling");
  if (p.target < 1 || p.target > 3)
    throw std::invalid_argument("DeviceParams: target must be in 1..3");
}

Matrix occupation_projector(int qubit) {
  return kron_embed((identity2() - pauli_z()) / 2.0, qubit);
}

}  // namespace

double DeviceParams::coupling(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return j12;
  if (a == 1 && b == 3) return j13;
  if (a == 2 && b == 3) return j23;
  throw std::invalid_argument("coupling: qubit pair out of range");
}

double& DeviceParams::coupling(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return j12;
  if (a == 1 && b == 3) return j13;
  if (a == 2 && b == 3) return j23;
  throw std::invalid_argument("coupling: qubit pair out of range");
}

std::array<int, 2> DeviceParams::controls() const {
  std::array<int, 2> out{};
  int n = 0;
  for (int q = 1; q <= 3; ++q)
    if (q != target) out[n++] = q;
  return out;
}

DeviceParams DeviceParams::preset() {
  DeviceParams p;
  p.eps = {0.0, -303.854, -303.854};
  p.delta = {4.5, 4.5, 1.0};
  p.j12 = 159.523;
  p.j13 = 205.101;
  p.j23 = 0.0;
  p.target = 1;
  return p;
}

DeviceParams with_target(const DeviceParams& p, int new_target) {
  check_finite(p);
  if (new_target < 1 || new_target > 3)
    throw std::invalid_argument("with_target: target must be in 1..3");
  const auto old_ctrl = p.controls();
  const double eps_t = p.eps[p.target - 1];
  const double delta_t = p.delta[p.target - 1];
  const std::array<double, 2> eps_c = {p.eps[old_ctrl[0] - 1],
                                       p.eps[old_ctrl[1] - 1]};
  const std::array<double, 2> delta_c = {p.delta[old_ctrl[0] - 1],
                                         p.delta[old_ctrl[1] - 1]};
  const std::array<double, 2> j_tc = {p.coupling(p.target, old_ctrl[0]),
                                      p.coupling(p.target, old_ctrl[1])};
  const double j_cc = p.coupling(old_ctrl[0], old_ctrl[1]);

  DeviceParams q;
  q.target = new_target;
  const auto ctrl = q.controls();
  q.eps[new_target - 1] = eps_t;
  q.delta[new_target - 1] = delta_t;
  for (int i = 0; i < 2; ++i) {
    q.eps[ctrl[i] - 1] = eps_c[i];
    q.delta[ctrl[i] - 1] = delta_c[i];
    q.coupling(new_target, ctrl[i]) = j_tc[i];
  }
  q.coupling(ctrl[0], ctrl[1]) = j_cc;
  return q;
}

DeviceParams load_device_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parameter file: " + path);
  DeviceParams p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    double value;
    if (!(ls >> value))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": missing value for key '" + key + "'");
    if (key == "eps1") p.eps[0] = value;
    else if (key == "eps2") p.eps[1] = value;
    else if (key == "eps3") p.eps[2] = value;
    else if (key == "delta1") p.delta[0] = value;
    else if (key == "delta2") p.delta[1] = value;
    else if (key == "delta3") p.delta[2] = value;
    else if (key == "j12") p.j12 = value;
    else if (key == "j13") p.j13 = value;
    else if (key == "j23") p.j23 = value;
    else if (key == "target") p.target = static_cast<int>(value);
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
  }
  check_finite(p);
  return p;
}

void save_device_params(const DeviceParams& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write parameter file: " + path);
  char buf[64];
  auto emit = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%s %.12g\n", key, v);
    out << buf;
  };
  emit("eps1", p.eps[0]);
  emit("eps2", p.eps[1]);
  emit("eps3", p.eps[2]);
  emit("delta1", p.delta[0]);
  emit("delta2", p.delta[1]);
  emit("delta3", p.delta[2]);
  emit("j12", p.j12);
  emit("j13", p.j13);
  emit("j23", p.j23);
  out << "target " << p.target << "\n";
}

Matrix build_full_hamiltonian(const DeviceParams& p) {
  check_finite(p);
  Matrix h = Matrix::Zero(8, 8);
  for (int q = 1; q <= 3; ++q) {
    h += p.eps[q - 1] / 2.0 * kron_embed(pauli_z(), q);
    h += p.delta[q - 1] / 2.0 * kron_embed(pauli_x(), q);
  }
  h += p.j12 * occupation_projector(1) * occupation_projector(2);
  h += p.j13 * occupation_projector(1) * occupation_projector(3);
  h += p.j23 * occupation_projector(2) * occupation_projector(3);
  return h;
}

Matrix build_free_hamiltonian(const DeviceParams& p) {
  check_finite(p);
  Matrix h = Matrix::Zero(8, 8);
  for (int c : p.controls()) {
    h += p.eps[c - 1] / 2.0 * kron_embed(pauli_z(), c);
    h += p.coupling(p.target, c) * occupation_projector(p.target) *
         occupation_projector(c);
  }
  return h;
}

Matrix build_reduced_hamiltonian(const DeviceParams& p) {
  check_finite(p);
  Matrix h = p.delta[p.target - 1] / 2.0 * kron_embed(pauli_x(), p.target);
  h += build_free_hamiltonian(p);
  return h;
}

SpectralPair analytic_spectral(const DeviceParams& p, int j, int k) {
  check_finite(p);
  if ((j != 0 && j != 1) || (k != 0 && k != 1))
    throw std::invalid_argument("analytic_spectral: control bits must be 0/1");
  const auto ctrl = p.controls();
  const double eps_c1 = p.eps[ctrl[0] - 1];
  const double eps_c2 = p.eps[ctrl[1] - 1];
  const double delta_t = p.delta[p.target - 1];

  SpectralPair sp;
  sp.m = -(eps_c1 / 2.0) * (j == 0 ? 1.0 : -1.0) -
         (eps_c2 / 2.0) * (k == 0 ? 1.0 : -1.0);
  sp.n = -(j == 1 ? p.coupling(p.target, ctrl[0]) : 0.0) -
         (k == 1 ? p.coupling(p.target, ctrl[1]) : 0.0);
  const double root = std::sqrt(sp.n * sp.n + delta_t * delta_t);
  sp.lambda_plus = (-(2.0 * sp.m + sp.n) + root) / 2.0;
  sp.lambda_minus = (-(2.0 * sp.m + sp.n) - root) / 2.0;
  sp.xi = -(2.0 * sp.m + sp.n) / 2.0;
  sp.omega = root / 2.0;

  if (delta_t == 0.0) {
    // Degenerate tunneling: the blocks are already diagonal.
    if (sp.n >= 0.0) {
      sp.psi_plus = {0.0, 1.0};
      sp.psi_minus = {1.0, 0.0};
    } else {
      sp.psi_plus = {1.0, 0.0};
      sp.psi_minus = {0.0, 1.0};
    }
    return sp;
  }
  auto eigvec = [&](double lambda) -> std::array<double, 2> {
    const double a = 2.0 * (lambda + sp.m);
    const double norm = std::sqrt(a * a + delta_t * delta_t);
    return {a / norm, delta_t / norm};
  };
  sp.psi_plus = eigvec(sp.lambda_plus);
  sp.psi_minus = eigvec(sp.lambda_minus);
  return sp;
}

Vector analytic_propagate(const DeviceParams& p, int basis_idx, double t) {
  if (basis_idx < 0 || basis_idx > 7)
    throw std::invalid_argument("analytic_propagate: basis index out of range");
  if (!std::isfinite(t))
    throw std::invalid_argument("analytic_propagate: time must be finite");
  const auto ctrl = p.controls();
  const int b = bit_of(basis_idx, p.target);
  const int j = bit_of(basis_idx, ctrl[0]);
  const int k = bit_of(basis_idx, ctrl[1]);
  const SpectralPair sp = analytic_spectral(p, j, k);
  const double delta_t = p.delta[p.target - 1];
  const double root = std::sqrt(sp.n * sp.n + delta_t * delta_t);

  const Complex global = std::exp(Complex(0.0, -sp.xi * t));
  Vector out = Vector::Zero(8);
  if (root == 0.0) {  // no dynamics in this block, pure phase
    out(basis_idx) = global;
    return out;
  }
  const double c = std::cos(sp.omega * t);
  const double s = std::sin(sp.omega * t);
  const int flipped = basis_idx ^ (1 << (3 - p.target));
  const Complex i(0.0, 1.0);
  if (b == 1) {
    out(basis_idx) = global * (c + i * (sp.n / root) * s);
    out(flipped) = global * (-i * (delta_t / root) * s);
  } else {
    out(flipped) = global * (-i * (delta_t / root) * s);
    out(basis_idx) = global * (c - i * (sp.n / root) * s);
  }
  return out;
}

bool RegimeReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RegimeCheck& c) { return c.pass || c.warning_only; });
}

bool RegimeReport::has_warnings() const {
  return std::any_of(checks.begin(), checks.end(), [](const RegimeCheck& c) {
    return c.warning_only && !c.pass;
  });
}

std::string RegimeReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "pass" : (c.warning_only ? "warn" : "FAIL")) << "  "
        << c.name << "  ratio=" << c.ratio << " required>=" << c.required
        << "\n";
  }
  return out.str();
}

RegimeReport validate_tl_regime(const DeviceParams& p, double ratio_min) {
  check_finite(p);
  if (ratio_min <= 1.0)
    throw std::invalid_argument("validate_tl_regime: ratio_min must be > 1");
  RegimeReport report;
  const int t = p.target;
  const auto ctrl = p.controls();
  const double eps_t = p.eps[t - 1];
  const double delta_t = p.delta[t - 1];

  auto add = [&](std::string name, double ratio, bool warning = false) {
    report.checks.push_back(
        {std::move(name), ratio, ratio_min, ratio >= ratio_min, warning});
  };
  auto ratio_of = [](double num, double den) {
    return den == 0.0 ? kInf : std::abs(num) / std::abs(den);
  };

  // |delta_t| >> |eps_t|, vacuous at eps_t = 0
  add("|delta" + std::to_string(t) + "| / |eps" + std::to_string(t) + "|",
      ratio_of(delta_t, eps_t));
  for (int c : ctrl) {
    add("|eps" + std::to_string(c) + "| / |delta" + std::to_string(c) + "|",
        ratio_of(p.eps[c - 1], p.delta[c - 1]));
  }
  for (int c : ctrl) {
    add("j" + std::to_string(std::min(t, c)) + std::to_string(std::max(t, c)) +
            " / |delta" + std::to_string(t) + "|",
        ratio_of(p.coupling(t, c), delta_t));
  }
  const double eps_scale =
      std::max(std::abs(p.eps[ctrl[0] - 1]), std::abs(p.eps[ctrl[1] - 1]));
  add("eps" + std::to_string(ctrl[0]) + " ~ eps" + std::to_string(ctrl[1]),
      ratio_of(eps_scale, p.eps[ctrl[0] - 1] - p.eps[ctrl[1] - 1]),
      /*warning=*/true);
  add("|eps_controls| / j" + std::to_string(ctrl[0]) + std::to_string(ctrl[1]),
      ratio_of(eps_scale, p.coupling(ctrl[0], ctrl[1])));
  return report;
}

}  // namespace qdsim
