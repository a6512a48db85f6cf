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

#include <optional>

#include "ptsim/dynamics.hpp"

namespace ptsim {

/// Time and entropy of a point where dS(rho_B)/dt vanishes.
struct TurningPoint {
  double t_p;  // 1/s units
  double s_p;  // bits
};

/// S(rho) = -tr(rho log2 rho), in bits. Eigenvalues in [-1e-10, 0) are
/// clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// Closed form of the stable-state entropy of Bob,
/// log2(2r) - (sqrt(r^2-1)/r) log2(r + sqrt(r^2-1)). Requires r >= 1
/// (r = 1 gives the maximally mixed limit, entropy 1).
double entropy_stable_b(double r);

/// I(i:j) = S(rho_i) + S(rho_j) - S(rho_ij) on a three-qubit state, bits.
double mutual_information(const DensityMatrix& rho, int i, int j);

/// Wootters concurrence of a two-qubit state: max(0, s1 - s2 - s3 - s4)
/// with s_i the decreasing singular values of sqrt(rho)^T (sy otimes sy) sqrt(rho),
/// which equal the square roots of the spin-flip spectrum.
double concurrence(const DensityMatrix& rho);

/// Central finite difference of S(rho_B(t)) with step 1e-6/s, evaluated on
/// the closed-form reduced state of Bob.
double entropy_derivative(const PTParams& p, double t);

/// Locate a zero of dS(rho_B)/dt in (0, horizon] by sign-change bracketing
/// on a 2000-point grid followed by bisection. Requires r > 1. Empty when
/// no sign change is bracketed, or when the dip below the stable entropy
/// is under 1e-6 bits (large r: the turning point disappears).
std::optional<TurningPoint> find_turning_point(const PTParams& p, double horizon);

/// Increase of the Bob-Charlie mutual information relative to the GHZ
/// initial value: max over a sampled grid for r < 1, the stable value
/// 2 S(rho_B^ss) for r >= 1, minus I(t0) = 1. s = 1 units.
double delta_mutual_info(double r, double horizon, int samples);

/// Root of entropy_stable_b(r) = 1/2 on [1 + 1e-9, 10], by bisection.
double critical_r_mi(double tol);

/// Max of C(rho_BC(t)) over a uniform grid on (0, horizon], GHZ initial
/// state, s = 1.
double concurrence_amplitude(double r, double horizon, int samples);

/// Regime-dependent default time horizon: four periods (r < 1), 20/k
/// (r > 1), 20/s at the exceptional point.
double default_horizon(const PTParams& p);

}  // namespace ptsim
