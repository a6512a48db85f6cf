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
#include <stdexcept>
#include <string>
#include <vector>

#include "ptsim/dynamics.hpp"

namespace ptsim {

/// Raised when an LCU normalizer falls below 1e-12 and the angle system
/// cannot be solved at this (r, t).
struct DegenerateNormalizer : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the post-selected ancilla branch has vanishing norm.
struct PostSelectionVanished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Angles of the linear-combination-of-unitaries decomposition
/// U/M = cos(phi) V1 + sin(phi) V2, with normalizers M1, M2 and the
/// overall scale M = M1/sqrt(1 - r^2) (hyperbolic continuation for r > 1).
struct LcuAngles {
  double phi;
  double phi1;
  double phi2;  // identically 0, V2 = sigma_z
  double m1;
  double m2;
  double m;
};

enum class GateKind { Single, Controlled, Projector };

/// One circuit element. Controlled gates carry a control index and a
/// polarity (fire on |0> or |1>). Projectors post-select their target
/// qubit onto |0>.
struct GateOp {
  GateKind kind;
  std::string name;
  int target = 0;
  int control = -1;
  int polarity = 1;
  std::optional<double> angle;
  Matrix matrix;  // 2x2; unused for projectors
};

struct CircuitResult {
  DensityMatrix rho_work;  // 3 qubits
  double p_success;        // squared norm of the post-selected branch
};

/// Solve the LCU angle system at (p, t). Real-valued in both phases;
/// evaluated through the regime-safe kernels.
LcuAngles lcu_angles(const PTParams& p, double t);

struct LcuGates {
  Matrix v0;
  Matrix v1;
  Matrix v2;
};

LcuGates build_gates(const LcuAngles& a);

/// Full gate list: GHZ preparation (H, two CNOTs), V0 on the ancilla,
/// 0-controlled V1 and 1-controlled V2 on Alice, Hadamard and |0>
/// projection on the ancilla. Ancilla is qubit 3.
std::vector<GateOp> circuit_gate_list(const PTParams& p, double t);

/// Run a gate list from |0...0>. Projectors renormalize; their combined
/// branch probability is reported as p_success and the projected qubits
/// are traced out of the result.
CircuitResult run_gate_list(const std::vector<GateOp>& gates, int nqubits);

/// Simulate the 4-qubit LCU circuit. rho_work reproduces evolve(GHZ, p, t).
CircuitResult run_circuit(const PTParams& p, double t);

/// Controlled-v on two qubits, control 0 (most significant), target 1.
Matrix controlled_unitary(const Matrix& v, int polarity);

/// ABC decomposition of a controlled 2x2 unitary into Ry/Rz rotations,
/// a control phase gate, CNOTs, and (for 0-polarity) X conjugation of the
/// control. Convention: control = qubit 0, target = qubit 1;
/// Ry(a) = exp(-i a sy/2), Rz(a) = exp(-i a sz/2).
std::vector<GateOp> decompose_controlled(const Matrix& v, int polarity);

/// Product of a projector-free gate list as a 2^n x 2^n operator,
/// applied in list order.
Matrix gate_list_unitary(const std::vector<GateOp>& gates, int nqubits);

/// Plain-text export, one gate per line:
/// GATE <name> <target> [control <idx> <polarity>] [angle <radians>]
std::string format_gate_list(const std::vector<GateOp>& gates);
std::vector<GateOp> parse_gate_list(const std::string& text);

/// Fidelity between the circuit-backend state and direct evolution.
double circuit_fidelity_report(const PTParams& p, double t);

}  // namespace ptsim
