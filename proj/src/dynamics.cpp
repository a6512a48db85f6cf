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

#include "ptsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace ptsim {

namespace {

// Beyond this the broken-phase kernels are evaluated scaled by e^{-kt};
// the renormalization in evolve makes the scale cancel exactly.
constexpr double kRescaleThreshold = 300.0;

Matrix propagator_from_kernels(const PTParams& p, const EvolutionKernels& kern) {
  return kern.c * identity(2) - Complex(0, 1) * kern.kappa * hpt(p);
}

}  // namespace

PTParams::PTParams(double energy_scale, double non_hermiticity)
    : s_(energy_scale), r_(non_hermiticity) {
  if (!(s_ > 0.0)) throw std::invalid_argument("PTParams: s must be > 0");
  if (!(r_ >= 0.0)) throw std::invalid_argument("PTParams: r must be >= 0");
}

PhaseRegime PTParams::regime() const {
  if (r_ < 1.0) return PhaseRegime::Unbroken;
  if (r_ == 1.0) return PhaseRegime::ExceptionalPoint;
  return PhaseRegime::Broken;
}

double PTParams::gap() const {
  if (r_ >= 1.0) throw std::domain_error("PTParams::gap: defined for r < 1");
  return 2.0 * s_ * std::sqrt(1.0 - r_ * r_);
}

double PTParams::growth_rate() const {
  if (r_ <= 1.0) throw std::domain_error("PTParams::growth_rate: defined for r > 1");
  return s_ * std::sqrt(r_ * r_ - 1.0);
}

double PTParams::theta() const {
  if (r_ < 1.0) throw std::domain_error("PTParams::theta: defined for r >= 1");
  return std::acos(1.0 / r_);
}

EvolutionKernels evolution_kernels(const PTParams& p, double t) {
  const double s = p.s();
  const double r = p.r();
  if (r < 1.0) {
    const double half_gap = s * std::sqrt(1.0 - r * r);  // w/2
    return {std::cos(half_gap * t), std::sin(half_gap * t) / half_gap, 0.0};
  }
  if (r == 1.0) return {1.0, t, 0.0};
  const double k = s * std::sqrt(r * r - 1.0);
  const double kt = k * t;
  if (kt <= kRescaleThreshold) return {std::cosh(kt), std::sinh(kt) / k, 0.0};
  const double decay = std::exp(-2.0 * kt);
  return {(1.0 + decay) / 2.0, (1.0 - decay) / (2.0 * k), kt};
}

Matrix hpt(const PTParams& p) {
  Matrix m(2, 2);
  const Complex irs(0, p.r() * p.s());
  m << irs, p.s(), p.s(), -irs;
  return m;
}

Matrix propagator(const PTParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("propagator: t must be >= 0");
  const EvolutionKernels kern = evolution_kernels(p, t);
  return std::exp(kern.log_scale) * propagator_from_kernels(p, kern);
}

DensityMatrix evolve(const DensityMatrix& rho0, const PTParams& p, double t) {
  if (rho0.qubits() != 3) throw std::invalid_argument("evolve: expected 3 qubits");
  if (t < 0.0) throw std::invalid_argument("evolve: t must be >= 0");
  const EvolutionKernels kern = evolution_kernels(p, t);
  Matrix u3 = kron(propagator_from_kernels(p, kern), identity(4));
  Matrix m = u3 * rho0.matrix() * u3.adjoint();
  const double norm = m.trace().real();
  if (!(norm >= 1e-300))
    throw std::overflow_error("evolve: evolution norm underflow; rescale time");
  m = ((m + m.adjoint()) * (0.5 / norm)).eval();
  return DensityMatrix(3, std::move(m));
}

DensityMatrix reduced_b_closed(const PTParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("reduced_b_closed: t must be >= 0");
  const EvolutionKernels kern = evolution_kernels(p, t);
  const double sk = p.s() * kern.kappa;            // |C| up to scale
  const double plus = kern.c + p.r() * sk;         // A - B
  const double minus = kern.c - p.r() * sk;        // A + B
  const double d0 = sk * sk + plus * plus;
  const double d1 = sk * sk + minus * minus;
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = d0 / (d0 + d1);
  m(1, 1) = d1 / (d0 + d1);
  return DensityMatrix(1, std::move(m));
}

DensityMatrix stable_state_b(double r) {
  if (!(r > 1.0))
    throw std::invalid_argument("stable_state_b: undefined in the unbroken phase (r <= 1)");
  const double a = std::sqrt(r * r - 1.0);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = (r + a) / (2.0 * r);
  m(1, 1) = (r - a) / (2.0 * r);
  return DensityMatrix(1, std::move(m));
}

DensityMatrix stable_state_a(double r) {
  if (!(r > 1.0))
    throw std::invalid_argument("stable_state_a: undefined in the unbroken phase (r <= 1)");
  const double a = std::sqrt(r * r - 1.0);
  Matrix m(2, 2);
  m(0, 0) = (r + a) / (2.0 * r);
  m(0, 1) = Complex(0, 1.0 / (2.0 * r));
  m(1, 0) = Complex(0, -1.0 / (2.0 * r));
  m(1, 1) = (r - a) / (2.0 * r);
  return DensityMatrix(1, std::move(m));
}

Eigen::Vector3d bloch(const DensityMatrix& rho) {
  if (rho.qubits() != 1) throw std::invalid_argument("bloch: expected a qubit state");
  const Matrix& m = rho.matrix();
  return {(m * pauli_x()).trace().real(), (m * pauli_y()).trace().real(),
          (m * pauli_z()).trace().real()};
}

StateVector ghz() {
  CVector amps = CVector::Zero(8);
  amps(0) = amps(7) = 1.0 / std::sqrt(2.0);
  return StateVector(3, std::move(amps));
}

DensityMatrix ghz_density() {
  return ghz().density();
}

}  // namespace ptsim
