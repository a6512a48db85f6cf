// Copyright 2026 The ptsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace ptsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity(Eigen::Index dim);

/// Tensor (Kronecker) product, a[i,j] * b blocks.
Matrix kron(const Matrix& a, const Matrix& b);

/// Square complex matrix tagged with a qubit count, validated on
/// construction: trace one, Hermitian, positive semidefinite (smallest
/// eigenvalue >= -1e-10).
class DensityMatrix {
 public:
  DensityMatrix(int qubits, Matrix m);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  int qubits_;
  Matrix m_;
};

/// Normalized pure state on n qubits. Basis labeling is big-endian:
/// qubit 0 is the leftmost tensor factor (most significant index bit).
class StateVector {
 public:
  StateVector(int qubits, CVector amplitudes);

  int qubits() const { return qubits_; }
  const CVector& amplitudes() const { return amps_; }
  DensityMatrix density() const;

 private:
  int qubits_;
  CVector amps_;
};

struct HermitianEig {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // orthonormal columns
};

/// Eigendecomposition of a Hermitian matrix. Rejects inputs that deviate
/// from Hermiticity by more than 1e-10.
HermitianEig eig_hermitian(const Matrix& m);

/// exp(-i h t) for a 2x2 matrix h, via the Cayley-Hamilton closed form
/// (the traceless part squares to a multiple of the identity).
Matrix expm_2x2(const Matrix& h, double t);

/// Trace out all qubits not listed in `keep`. Indices must be strictly
/// increasing and within range.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// Half the sum of singular values of a - b. In [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2. In [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace ptsim
