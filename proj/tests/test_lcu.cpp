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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "ptsim/lcu.hpp"

using namespace ptsim;
namespace oracle = ptsim::testing;

TEST_CASE("angles at t = 0 are trivial") {
  for (double r : {0.3, 1.0, 2.5}) {
    LcuAngles a = lcu_angles(PTParams(1.0, r), 0.0);
    CHECK(a.phi == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(a.phi1 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(a.phi2 == 0.0);
    CHECK(a.m == doctest::Approx(1.0).epsilon(1e-14));
    const double root = std::sqrt(std::abs(1.0 - r * r));
    CHECK(a.m1 == doctest::Approx(root).epsilon(1e-14));
    CHECK(a.m2 == doctest::Approx(root).epsilon(1e-14));
  }
  CHECK_THROWS_AS(lcu_angles(PTParams(1.0, 0.5), -1.0), std::invalid_argument);
}

TEST_CASE("angles stay real and finite in both phases and at the exceptional point") {
  for (double r : {0.2, 0.8, 1.0, 1.5, 4.0}) {
    for (double t : {0.1, 1.0, 3.0}) {
      LcuAngles a = lcu_angles(PTParams(1.0, r), t);
      CHECK(std::isfinite(a.phi));
      CHECK(std::isfinite(a.phi1));
      CHECK(a.m > 0.0);
      CHECK(a.m1 >= 0.0);  // vanishes exactly at r = 1
      if (r != 1.0) {
        CHECK(a.m == doctest::Approx(a.m1 / std::sqrt(std::abs(1.0 - r * r)))
                         .epsilon(1e-12));
      }
    }
  }
  // r = 1: the raw normalizers vanish but the angle system stays solvable.
  LcuAngles ep = lcu_angles(PTParams(1.0, 1.0), 2.0);
  CHECK(ep.m1 == 0.0);
  CHECK(ep.m > 1.0);
  CHECK(std::isfinite(ep.phi));
}

TEST_CASE("build_gates yields unitaries with V2 = sigma_z") {
  LcuAngles a = lcu_angles(PTParams(1.0, 1.7), 1.3);
  LcuGates g = build_gates(a);
  for (const Matrix* m : {&g.v0, &g.v1, &g.v2}) {
    CHECK((m->adjoint() * *m - identity(2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK((g.v2 - pauli_z()).cwiseAbs().maxCoeff() == 0.0);
  // phi = pi/4 probe of the ancilla preparation gate
  LcuGates probe = build_gates({M_PI / 4.0, 0.0, 0.0, 1.0, 1.0, 1.0});
  Matrix expected(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  expected << h, -h, h, h;
  CHECK((probe.v0 - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("LCU reassembly reproduces the propagator on a 10x10 grid") {
  for (int i = 0; i < 10; ++i) {
    const double r = 0.1 + 2.2 * i / 9.0;
    PTParams p(1.0, r);
    for (int j = 0; j < 10; ++j) {
      const double t = 0.3 + 3.0 * j / 9.0;
      LcuAngles a = lcu_angles(p, t);
      LcuGates g = build_gates(a);
      Matrix rebuilt = a.m * (std::cos(a.phi) * g.v1 + std::sin(a.phi) * g.v2);
      CHECK((rebuilt - propagator(p, t)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("circuit at t = 0 prepares GHZ with p_success 1/2") {
  CircuitResult res = run_circuit(PTParams(1.0, 2.0), 0.0);
  CHECK(res.p_success == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trace_distance(res.rho_work, ghz_density()) < 1e-12);
}

TEST_CASE("p_success is 1/2 at every sampled (r, t)") {
  for (double r : {0.4, 1.0, 1.8, 3.0}) {
    for (double t : {0.5, 1.5, 4.0}) {
      CHECK(run_circuit(PTParams(1.0, r), t).p_success ==
            doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("circuit equals direct renormalized evolution in both phases") {
  for (double r : {0.3, 0.8, 1.0, 1.5, 2.5}) {
    PTParams p(1.0, r);
    for (double t : {0.5, 1.0, 2.0, 3.5}) {
      CircuitResult res = run_circuit(p, t);
      CHECK(trace_distance(res.rho_work, evolve(ghz_density(), p, t)) < 1e-10);
    }
  }
}

TEST_CASE("controlled_unitary block structure") {
  Matrix c1 = controlled_unitary(pauli_x(), 1);
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK((c1 - cnot).cwiseAbs().maxCoeff() == 0.0);
  Matrix c0 = controlled_unitary(pauli_x(), 0);
  Matrix xcnot = Matrix::Zero(4, 4);
  xcnot(0, 1) = xcnot(1, 0) = xcnot(2, 2) = xcnot(3, 3) = 1.0;
  CHECK((c0 - xcnot).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(controlled_unitary(2.0 * pauli_x(), 1), std::invalid_argument);
}

TEST_CASE("decompose_controlled on sigma_z and the circuit gates") {
  for (int polarity : {0, 1}) {
    for (const Matrix& v : {pauli_z(), build_gates(lcu_angles(PTParams(1.0, 1.5), 1.0)).v1}) {
      auto gates = gate_list_unitary(decompose_controlled(v, polarity), 2);
      CHECK((gates - controlled_unitary(v, polarity)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  CHECK(decompose_controlled(identity(2), 1).empty());
}

TEST_CASE("decompose_controlled on random unitaries, both polarities") {
  for (int trial = 0; trial < 100; ++trial) {
    Matrix v = oracle::random_unitary(2);
    const int polarity = trial % 2;
    auto gates = decompose_controlled(v, polarity);
    Matrix rebuilt = gate_list_unitary(gates, 2);
    CHECK((rebuilt - controlled_unitary(v, polarity)).cwiseAbs().maxCoeff() < 1e-10);
    // primitive gates only
    for (const GateOp& g : gates) {
      CHECK((g.name == "RY" || g.name == "RZ" || g.name == "CNOT" ||
             g.name == "PHASE" || g.name == "X"));
    }
  }
}

TEST_CASE("circuit fidelity report stays at unity") {
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(circuit_fidelity_report(PTParams(1.0, r), 1.0) >= 1.0 - 1e-9);
  }
}

TEST_CASE("fidelity between GHZ and |000> is one half") {
  Matrix zero = Matrix::Zero(8, 8);
  zero(0, 0) = 1.0;
  CHECK(fidelity(ghz_density(), DensityMatrix(3, zero)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gate list text round trip") {
  PTParams p(1.0, 1.3);
  auto gates = circuit_gate_list(p, 2.1);
  REQUIRE(gates.size() == 8);
  CHECK(gates.back().kind == GateKind::Projector);
  std::string text = format_gate_list(gates);
  auto parsed = parse_gate_list(text);
  REQUIRE(parsed.size() == gates.size());
  CircuitResult direct = run_gate_list(gates, 4);
  CircuitResult reparsed = run_gate_list(parsed, 4);
  CHECK(direct.p_success == doctest::Approx(reparsed.p_success).epsilon(1e-15));
  CHECK(trace_distance(direct.rho_work, reparsed.rho_work) < 1e-12);
  CHECK(format_gate_list(parsed) == text);
  CHECK_THROWS_AS(parse_gate_list("GATE RY 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gate_list("NOISE H 0\n"), std::invalid_argument);
}

TEST_CASE("expanded gate list with decomposed controls matches the compact one") {
  PTParams p(1.0, 0.7);
  const double t = 1.4;
  auto compact = circuit_gate_list(p, t);
  std::vector<GateOp> expanded;
  for (const GateOp& g : compact) {
    if (g.kind == GateKind::Controlled && g.name != "CNOT") {
      // re-express the 2-qubit decomposition on (control = 3, target = 0)
      for (GateOp prim : decompose_controlled(g.matrix, g.polarity)) {
        if (prim.kind == GateKind::Controlled) {
          prim.control = g.control;
          prim.target = g.target;
        } else {
          prim.target = prim.target == 0 ? g.control : g.target;
        }
        expanded.push_back(std::move(prim));
      }
    } else {
      expanded.push_back(g);
    }
  }
  CircuitResult a = run_gate_list(compact, 4);
  CircuitResult b = run_gate_list(expanded, 4);
  CHECK(a.p_success == doctest::Approx(b.p_success).epsilon(1e-12));
  CHECK(trace_distance(a.rho_work, b.rho_work) < 1e-10);
}

TEST_CASE("gate_list_unitary rejects projectors") {
  auto gates = circuit_gate_list(PTParams(1.0, 2.0), 1.0);
  CHECK_THROWS_AS(gate_list_unitary(gates, 4), std::invalid_argument);
}
