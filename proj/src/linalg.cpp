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

#include "qdsim/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdsim {

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard2() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron_embed(const Matrix& op, int qubit_index) {
  if (op.rows() != 2 || op.cols() != 2)
    throw std::invalid_argument("kron_embed: operator must be 2x2, got " +
                                std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()));
  if (qubit_index < 1 || qubit_index > 3)
    throw std::invalid_argument("kron_embed: qubit_index must be in 1..3, got " +
                                std::to_string(qubit_index));
  const Matrix i2 = identity2();
  Matrix out = (qubit_index == 1) ? op : i2;
  out = kron(out, qubit_index == 2 ? op : i2);
  out = kron(out, qubit_index == 3 ? op : i2);
  return out;
}

Matrix expm_hermitian(const Matrix& h, double t, int sign) {
  if (!std::isfinite(t))
    throw std::invalid_argument("expm_hermitian: time must be finite");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("expm_hermitian: sign must be +1 or -1");
  const double defect = hermiticity_defect(h);
  if (h.rows() != h.cols() || defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "expm_hermitian: matrix is not Hermitian, |H - H^dag|_max = "
        << defect;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::exp(Complex(0.0, sign * w(i) * t));
  Matrix u = v * phases.asDiagonal() * v.adjoint();
  const double udefect = unitarity_defect(u);
  if (udefect > kUnitaryTol) {
    std::ostringstream msg;
    msg << "expm_hermitian: result not unitary, |U^dag U - I|_max = "
        << udefect;
    throw std::runtime_error(msg.str());
  }
  return u;
}

Vector apply(const Matrix& u, const Vector& s) {
  if (u.cols() != s.size())
    throw std::invalid_argument("apply: dimension mismatch");
  Vector out = u * s;
  const double drift = std::abs(out.norm() - s.norm());
  if (drift > kNormDriftTol) {
    std::ostringstream msg;
    msg << "apply: state norm drifted by " << drift;
    throw std::runtime_error(msg.str());
  }
  return out;
}

int basis_index(int q1, int q2, int q3) { return 4 * q1 + 2 * q2 + q3; }

int bit_of(int basis_idx, int qubit_index) {
  return (basis_idx >> (3 - qubit_index)) & 1;
}

Vector basis_state(int basis_idx) {
  if (basis_idx < 0 || basis_idx > 7)
    throw std::invalid_argument("basis_state: index out of range");
  Vector v = Vector::Zero(8);
  v(basis_idx) = 1.0;
  return v;
}

std::string basis_label(int basis_idx) {
  std::string s(3, '0');
  for (int q = 1; q <= 3; ++q)
    s[q - 1] = static_cast<char>('0' + bit_of(basis_idx, q));
  return s;
}

double state_norm_defect(const Vector& s) {
  return std::abs(s.squaredNorm() - 1.0);
}

}  // namespace qdsim
