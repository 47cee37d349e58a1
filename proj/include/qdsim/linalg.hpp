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

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace qdsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances used throughout. All matrices here are at most 8x8 in double
// precision, so these can be tight.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kStateNormTol = 1e-10;
inline constexpr double kNormDriftTol = 1e-8;

Matrix identity2();
Matrix pauli_x();
Matrix pauli_z();
Matrix hadamard2();

// max_ij |A[i][j] - conj(A[j][i])|
double hermiticity_defect(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kHermitianTol);

// max-norm of U^dag U - I
double unitarity_defect(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);

Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds a 2x2 single-qubit operator into the 8-dimensional three-qubit
/// space: I (x) ... (x) op (x) ... (x) I with op at slot `qubit_index`
/// (1-based, qubit 1 is the most significant bit of the basis index).
Matrix kron_embed(const Matrix& op, int qubit_index);

/// exp(sign * i * H * t) of a Hermitian matrix via eigendecomposition.
/// Exact at these dimensions and unitary by construction up to solver
/// tolerance. Throws std::invalid_argument when H is not Hermitian within
/// kHermitianTol (the message carries the measured defect) or t is not
/// finite; the default sign -1 yields the evolution operator exp(-iHt).
Matrix expm_hermitian(const Matrix& h, double t, int sign = -1);

/// U * s without renormalization. Norm drift beyond kNormDriftTol is an
/// evolution-integrity error, not something to fix silently.
Vector apply(const Matrix& u, const Vector& s);

// Basis index convention: |q1 q2 q3> <-> 4*q1 + 2*q2 + q3.
int basis_index(int q1, int q2, int q3);
int bit_of(int basis_idx, int qubit_index);
Vector basis_state(int basis_idx);
std::string basis_label(int basis_idx);

double state_norm_defect(const Vector& s);

}  // namespace qdsim
