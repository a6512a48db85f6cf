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

#include "ptsim/qmath.hpp"

namespace ptsim {

enum class PhaseRegime { Unbroken, ExceptionalPoint, Broken };

/// Parameters of the local PT-symmetric Hamiltonian H = s(sigma_x + i r sigma_z),
/// hbar = 1. s is the energy scale (1/time), r the non-Hermiticity degree.
class PTParams {
 public:
  PTParams(double energy_scale, double non_hermiticity);

  double s() const { return s_; }
  double r() const { return r_; }
  PhaseRegime regime() const;

  /// Real gap w = 2s sqrt(1 - r^2). Requires r < 1.
  double gap() const;
  /// Growth rate k = s sqrt(r^2 - 1). Requires r > 1.
  double growth_rate() const;
  /// Angle with cos(theta) = 1/r, theta in [0, pi/2). Requires r >= 1.
  double theta() const;

 private:
  double s_;
  double r_;
};

/// Regime-safe evolution kernels: c = cos(wt/2) and kappa = (2/w) sin(wt/2),
/// continued as cosh(kt) and sinh(kt)/k in the broken phase and as 1 and t
/// at the exceptional point. For kt > 300 the pair is returned scaled by
/// e^{-kt} and log_scale carries kt; the true values are (c, kappa) * e^{log_scale}.
struct EvolutionKernels {
  double c;
  double kappa;
  double log_scale;
};

EvolutionKernels evolution_kernels(const PTParams& p, double t);

/// H = s(sigma_x + i r sigma_z) = [[i r s, s], [s, -i r s]].
Matrix hpt(const PTParams& p);

/// exp(-i H t) = c I - i kappa H, global phase free by construction.
Matrix propagator(const PTParams& p, double t);

/// Renormalized evolution of a three-qubit state under U(t) on Alice:
/// rho(t) = U3 rho0 U3^dag / tr(...), U3 = U otimes I otimes I.
DensityMatrix evolve(const DensityMatrix& rho0, const PTParams& p, double t);

/// Closed-form reduced state of Bob for the GHZ initial state. Diagonal.
DensityMatrix reduced_b_closed(const PTParams& p, double t);

/// Long-time stable state of Bob in the broken phase,
/// diag((r + sqrt(r^2-1))/2r, (r - sqrt(r^2-1))/2r). Requires r > 1.
DensityMatrix stable_state_b(double r);

/// Long-time stable state of Alice, (I - cos(theta) sigma_y + sin(theta) sigma_z)/2.
/// Pure (eigenvalues 0 and 1), off-diagonal magnitude 1/(2r). Requires r > 1.
DensityMatrix stable_state_a(double r);

/// Bloch vector (tr rho sigma_x, tr rho sigma_y, tr rho sigma_z) of a qubit state.
Eigen::Vector3d bloch(const DensityMatrix& rho);

/// (|000> + |111>)/sqrt(2).
StateVector ghz();
DensityMatrix ghz_density();

}  // namespace ptsim
