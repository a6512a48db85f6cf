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
//
// Test-only oracles, independent of the library implementation paths
// they are used to check.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "ptsim/qmath.hpp"

namespace ptsim::testing {

/// Truncated power-series matrix exponential exp(-i h t).
inline Matrix expm_series(const Matrix& h, double t, int terms = 40) {
  Matrix sum = identity(h.rows());
  Matrix term = identity(h.rows());
  for (int k = 1; k <= terms; ++k) {
    term = (term * (Complex(0, -1) * t / double(k)) * h).eval();
    sum += term;
  }
  return sum;
}

/// Index-summation partial trace over raw matrices (big-endian labels).
inline Matrix partial_trace_sum(const Matrix& rho, int n,
                                const std::vector<int>& keep) {
  const int k = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    bool kept = false;
    for (int kq : keep) kept = kept || kq == q;
    if (!kept) traced.push_back(q);
  }
  const int nt = static_cast<int>(traced.size());
  auto embed = [&](int kept_idx, int env_idx) {
    int idx = 0;
    for (int q = 0; q < n; ++q) {
      int bit = 0;
      for (int i = 0; i < k; ++i)
        if (keep[i] == q) bit = (kept_idx >> (k - 1 - i)) & 1;
      for (int i = 0; i < nt; ++i)
        if (traced[i] == q) bit = (env_idx >> (nt - 1 - i)) & 1;
      idx = (idx << 1) | bit;
    }
    return idx;
  };
  Matrix out = Matrix::Zero(1 << k, 1 << k);
  for (int a = 0; a < (1 << k); ++a)
    for (int b = 0; b < (1 << k); ++b)
      for (int e = 0; e < (1 << nt); ++e)
        out(a, b) += rho(embed(a, e), embed(b, e));
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20260823);
  return gen;
}

inline Matrix random_complex(Eigen::Index dim) {
  std::normal_distribution<double> gauss;
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      m(i, j) = Complex(gauss(rng()), gauss(rng()));
  return m;
}

inline Matrix random_hermitian(Eigen::Index dim) {
  Matrix g = random_complex(dim);
  return (g + g.adjoint()) / 2.0;
}

inline Matrix random_density(Eigen::Index dim) {
  Matrix g = random_complex(dim);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return ((m + m.adjoint()) / 2.0).eval();
}

inline Matrix random_unitary(Eigen::Index dim) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(dim));
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

/// Max-abs difference after aligning global phase on the largest entry of a.
inline double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  Eigen::Index mi = 0, mj = 0;
  a.cwiseAbs().maxCoeff(&mi, &mj);
  if (std::abs(a(mi, mj)) < 1e-300 || std::abs(b(mi, mj)) < 1e-300)
    return (a - b).cwiseAbs().maxCoeff();
  Complex phase = (a(mi, mj) / b(mi, mj));
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace ptsim::testing
