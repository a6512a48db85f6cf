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

#include "ptsim/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace ptsim {

namespace {

constexpr double kClampTol = -1e-10;
constexpr int kTurningGrid = 2000;
constexpr double kTurningBisectTol = 1e-10;
// Minimum dip of S below the stable value for a derivative zero to count
// as a turning point. Far from the exceptional point the dip shrinks below
// any resolvable scale and the feature is reported as absent.
constexpr double kTurningDipTol = 1e-6;

double entropy_of_bob(const PTParams& p, double t) {
  return von_neumann_entropy(reduced_b_closed(p, t));
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  HermitianEig eig = eig_hermitian(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double lambda = eig.values(i);
    if (lambda < 0.0) {
      if (lambda < kClampTol)
        throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
      lambda = 0.0;
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(0.0, s);
}

double entropy_stable_b(double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("entropy_stable_b: requires r >= 1");
  const double a = std::sqrt(r * r - 1.0);
  return std::log2(2.0 * r) - (a / r) * std::log2(r + a);
}

double mutual_information(const DensityMatrix& rho, int i, int j) {
  if (rho.qubits() != 3)
    throw std::invalid_argument("mutual_information: expected 3 qubits");
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2)
    throw std::invalid_argument("mutual_information: invalid qubit pair");
  const double si = von_neumann_entropy(partial_trace(rho, {i}));
  const double sj = von_neumann_entropy(partial_trace(rho, {j}));
  std::vector<int> pair = i < j ? std::vector<int>{i, j} : std::vector<int>{j, i};
  const double sij = von_neumann_entropy(partial_trace(rho, pair));
  return si + sj - sij;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.qubits() != 2)
    throw std::invalid_argument("concurrence: expected a two-qubit state");
  HermitianEig eig = eig_hermitian(rho.matrix());
  Matrix root = eig.vectors * eig.values.cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                eig.vectors.adjoint();
  Matrix flip = kron(pauli_y(), pauli_y());
  Matrix k = root.transpose() * flip * root;
  Eigen::JacobiSVD<Matrix> svd(k);
  const auto& s = svd.singularValues();  // decreasing
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double entropy_derivative(const PTParams& p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("entropy_derivative: requires t > 0");
  double h = 1e-6 / p.s();
  if (h > t / 2.0) h = t / 2.0;
  return (entropy_of_bob(p, t + h) - entropy_of_bob(p, t - h)) / (2.0 * h);
}

std::optional<TurningPoint> find_turning_point(const PTParams& p, double horizon) {
  if (!(p.r() > 1.0))
    throw std::invalid_argument("find_turning_point: requires r > 1");
  if (!(horizon > 0.0))
    throw std::invalid_argument("find_turning_point: requires horizon > 0");
  auto deriv = [&](double t) { return entropy_derivative(p, t); };
  double lo = 0.0, hi = 0.0;
  double prev_t = horizon / kTurningGrid;
  double prev_f = deriv(prev_t);
  for (int i = 2; i <= kTurningGrid; ++i) {
    const double t = horizon * i / kTurningGrid;
    const double f = deriv(t);
    if (prev_f == 0.0 || prev_f * f < 0.0) {
      lo = prev_t;
      hi = t;
      break;
    }
    prev_t = t;
    prev_f = f;
  }
  if (hi == 0.0) return std::nullopt;
  double flo = deriv(lo);
  while (hi - lo > kTurningBisectTol) {
    const double mid = (lo + hi) / 2.0;
    const double fmid = deriv(mid);
    if (flo * fmid <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  const double t_p = (lo + hi) / 2.0;
  const double s_p = entropy_of_bob(p, t_p);
  if (entropy_stable_b(p.r()) - s_p < kTurningDipTol) return std::nullopt;
  return TurningPoint{t_p, s_p};
}

double delta_mutual_info(double r, double horizon, int samples) {
  if (!(r > 0.0)) throw std::invalid_argument("delta_mutual_info: requires r > 0");
  if (samples < 100) throw std::invalid_argument("delta_mutual_info: samples < 100");
  if (r >= 1.0) return 2.0 * entropy_stable_b(r) - 1.0;
  if (!(horizon > 0.0)) throw std::invalid_argument("delta_mutual_info: horizon <= 0");
  PTParams p(1.0, r);
  const DensityMatrix rho0 = ghz_density();
  double max_info = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double t = horizon * i / samples;
    max_info = std::max(max_info, mutual_information(evolve(rho0, p, t), 1, 2));
  }
  return max_info - 1.0;
}

double critical_r_mi(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("critical_r_mi: tol must be > 0");
  double lo = 1.0 + 1e-9;  // S > 1/2, strictly decreasing
  double hi = 10.0;        // S < 1/2
  double mid = 0.0;
  for (int i = 0; i < 200; ++i) {
    mid = (lo + hi) / 2.0;
    const double f = entropy_stable_b(mid) - 0.5;
    if (std::abs(f) < tol || hi - lo < 1e-15) break;
    if (f > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double concurrence_amplitude(double r, double horizon, int samples) {
  if (!(r >= 0.0)) throw std::invalid_argument("concurrence_amplitude: requires r >= 0");
  if (samples < 100) throw std::invalid_argument("concurrence_amplitude: samples < 100");
  if (!(horizon > 0.0)) throw std::invalid_argument("concurrence_amplitude: horizon <= 0");
  PTParams p(1.0, r);
  const DensityMatrix rho0 = ghz_density();
  double amp = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double t = horizon * i / samples;
    amp = std::max(amp, concurrence(partial_trace(evolve(rho0, p, t), {1, 2})));
  }
  return amp;
}

double default_horizon(const PTParams& p) {
  switch (p.regime()) {
    case PhaseRegime::Unbroken:
      return 4.0 * 2.0 * M_PI / p.gap();
    case PhaseRegime::ExceptionalPoint:
      return 20.0 / p.s();
    case PhaseRegime::Broken:
      return 20.0 / p.growth_rate();
  }
  return 20.0 / p.s();
}

}  // namespace ptsim
