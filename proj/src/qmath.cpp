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

#include "ptsim/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptsim {

namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kPsdTol = -1e-10;
constexpr double kNormTol = 1e-12;
constexpr double kEigHermTol = 1e-10;

bool finite(const Matrix& m) {
  return m.allFinite();
}

double hermitian_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix sqrt_psd(const Matrix& m) {
  HermitianEig eig = eig_hermitian(m);
  Eigen::VectorXd roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix identity(Eigen::Index dim) {
  return Matrix::Identity(dim, dim);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix::DensityMatrix(int qubits, Matrix m)
    : qubits_(qubits), m_(std::move(m)) {
  if (qubits_ < 1) throw std::invalid_argument("DensityMatrix: qubits < 1");
  const Eigen::Index dim = Eigen::Index(1) << qubits_;
  if (m_.rows() != dim || m_.cols() != dim)
    throw std::invalid_argument("DensityMatrix: dimension mismatch");
  if (!finite(m_)) throw std::invalid_argument("DensityMatrix: non-finite");
  if (std::abs(m_.trace() - Complex(1.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace not one");
  if (hermitian_defect(m_) > kHermTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

StateVector::StateVector(int qubits, CVector amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
  if (qubits_ < 1) throw std::invalid_argument("StateVector: qubits < 1");
  const Eigen::Index dim = Eigen::Index(1) << qubits_;
  if (amps_.size() != dim)
    throw std::invalid_argument("StateVector: dimension mismatch");
  if (!amps_.allFinite()) throw std::invalid_argument("StateVector: non-finite");
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("StateVector: not normalized");
}

DensityMatrix StateVector::density() const {
  return DensityMatrix(qubits_, amps_ * amps_.adjoint());
}

HermitianEig eig_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: not square");
  if (hermitian_defect(m) > kEigHermTol)
    throw std::invalid_argument("eig_hermitian: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Matrix expm_2x2(const Matrix& h, double t) {
  if (h.rows() != 2 || h.cols() != 2)
    throw std::invalid_argument("expm_2x2: matrix must be 2x2");
  const Complex half_trace = h.trace() / 2.0;
  Matrix h0 = h - half_trace * identity(2);  // traceless part, h0^2 = -det(h0) I
  const Complex mu = std::sqrt(-h0.determinant());
  const Complex z = mu * t;
  Complex sinc;  // sin(z)/z
  if (std::abs(z) < 1e-8) {
    sinc = 1.0 - z * z / 6.0;
  } else {
    sinc = std::sin(z) / z;
  }
  const Complex phase = std::exp(Complex(0, -1) * half_trace * t);
  return phase * (std::cos(z) * identity(2) - Complex(0, 1) * sinc * t * h0);
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  const int n = rho.qubits();
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("partial_trace: index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: indices must be strictly increasing");
  }
  const int k = static_cast<int>(keep.size());
  const int nt = n - k;
  std::vector<int> traced;
  traced.reserve(nt);
  for (int q = 0, ki = 0; q < n; ++q) {
    if (ki < k && keep[ki] == q) {
      ++ki;
    } else {
      traced.push_back(q);
    }
  }
  // Bit position of qubit q in a full index (big-endian).
  auto embed = [&](int kept_idx, int env_idx) {
    int idx = 0;
    int ki = 0, ti = 0;
    for (int q = 0; q < n; ++q) {
      int bit;
      if (ki < k && keep[ki] == q) {
        bit = (kept_idx >> (k - 1 - ki)) & 1;
        ++ki;
      } else {
        bit = (env_idx >> (nt - 1 - ti)) & 1;
        ++ti;
      }
      idx = (idx << 1) | bit;
    }
    return idx;
  };
  const int dk = 1 << k;
  const int de = 1 << nt;
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (int a = 0; a < dk; ++a)
    for (int b = 0; b < dk; ++b)
      for (int e = 0; e < de; ++e) out(a, b) += m(embed(a, e), embed(b, e));
  return DensityMatrix(k, std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix() - b.matrix(),
                                           Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Matrix root = sqrt_psd(a.matrix());
  Matrix inner = root * b.matrix() * root;
  inner = ((inner + inner.adjoint()) * 0.5).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner, Eigen::EigenvaluesOnly);
  double sum = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::min(1.0, sum * sum);
}

}  // namespace ptsim
