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

#include "ptsim/lcu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ptsim {

namespace {

constexpr double kNormalizerTol = 1e-12;
constexpr double kPostSelectTol = 1e-14;
constexpr double kUnitaryTol = 1e-12;

Matrix hadamard() {
  Matrix m(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  m << h, h, h, -h;
  return m;
}

Matrix rot_y(double a) {
  Matrix m(2, 2);
  m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
  return m;
}

Matrix rot_z(double a) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0, -a / 2));
  m(1, 1) = std::exp(Complex(0, a / 2));
  return m;
}

Matrix phase_gate(double a) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::exp(Complex(0, a));
  return m;
}

Matrix v0_matrix(double phi) {
  Matrix m(2, 2);
  m << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return m;
}

Matrix v1_matrix(double phi1) {
  Matrix m(2, 2);
  const Complex is(0, std::sin(phi1));
  m << std::cos(phi1), is, is, std::cos(phi1);
  return m;
}

Matrix v2_matrix(double phi2) {
  Matrix m(2, 2);
  m << std::cos(phi2), Complex(0, -std::sin(phi2)), Complex(0, std::sin(phi2)),
      -std::cos(phi2);
  return m;
}

void require_unitary(const Matrix& u, const char* what) {
  if (u.rows() != 2 || u.cols() != 2 ||
      (u.adjoint() * u - identity(2)).cwiseAbs().maxCoeff() > kUnitaryTol)
    throw std::invalid_argument(std::string(what) + ": matrix is not unitary");
}

void apply_single(CVector& v, int n, int q, const Matrix& u) {
  const Eigen::Index stride = Eigen::Index(1) << (n - 1 - q);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i & stride) continue;
    const Complex a0 = v(i);
    const Complex a1 = v(i | stride);
    v(i) = u(0, 0) * a0 + u(0, 1) * a1;
    v(i | stride) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_controlled(CVector& v, int n, int c, int polarity, int q,
                      const Matrix& u) {
  const Eigen::Index stride = Eigen::Index(1) << (n - 1 - q);
  const Eigen::Index cmask = Eigen::Index(1) << (n - 1 - c);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i & stride) continue;
    if (((i & cmask) ? 1 : 0) != polarity) continue;
    const Complex a0 = v(i);
    const Complex a1 = v(i | stride);
    v(i) = u(0, 0) * a0 + u(0, 1) * a1;
    v(i | stride) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

// Project qubit q onto |0>. Returns the branch probability.
double apply_projector(CVector& v, int n, int q) {
  const Eigen::Index mask = Eigen::Index(1) << (n - 1 - q);
  double p = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i & mask) {
      v(i) = 0.0;
    } else {
      p += std::norm(v(i));
    }
  }
  if (p < kPostSelectTol)
    throw PostSelectionVanished("run_gate_list: post-selected branch vanished");
  v /= std::sqrt(p);
  return p;
}

void apply_gate(CVector& v, int n, const GateOp& g) {
  switch (g.kind) {
    case GateKind::Single:
      apply_single(v, n, g.target, g.matrix);
      break;
    case GateKind::Controlled:
      apply_controlled(v, n, g.control, g.polarity, g.target, g.matrix);
      break;
    case GateKind::Projector:
      break;  // handled by the caller
  }
}

GateOp single(std::string name, int target, Matrix m,
              std::optional<double> angle = std::nullopt) {
  return {GateKind::Single, std::move(name), target, -1, 1, angle, std::move(m)};
}

GateOp controlled(std::string name, int target, int control, int polarity,
                  Matrix m, std::optional<double> angle = std::nullopt) {
  return {GateKind::Controlled, std::move(name), target, control, polarity,
          angle, std::move(m)};
}

// ZYZ angles with v = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct Zyz {
  double alpha, beta, gamma, delta;
};

Zyz zyz_decompose(const Matrix& v) {
  const double alpha = 0.5 * std::arg(v.determinant());
  Matrix u = v * std::exp(Complex(0, -alpha));
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  Zyz out{alpha, 0.0, 2.0 * std::atan2(s, c), 0.0};
  if (s < 1e-12) {
    out.beta = -2.0 * std::arg(u(0, 0));
  } else if (c < 1e-12) {
    out.beta = 2.0 * std::arg(u(1, 0));
  } else {
    const double sum = -2.0 * std::arg(u(0, 0));   // beta + delta
    const double diff = 2.0 * std::arg(u(1, 0));   // beta - delta
    out.beta = (sum + diff) / 2.0;
    out.delta = (sum - diff) / 2.0;
  }
  return out;
}

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

Matrix matrix_for(const std::string& name, std::optional<double> angle) {
  auto need = [&]() {
    if (!angle) throw std::invalid_argument("parse_gate_list: " + name + " needs an angle");
    return *angle;
  };
  if (name == "H") return hadamard();
  if (name == "X" || name == "CNOT") return pauli_x();
  if (name == "RY") return rot_y(need());
  if (name == "RZ") return rot_z(need());
  if (name == "PHASE") return phase_gate(need());
  if (name == "V0") return v0_matrix(need());
  if (name == "V1") return v1_matrix(need());
  if (name == "V2") return v2_matrix(0.0);
  throw std::invalid_argument("parse_gate_list: unknown gate " + name);
}

}  // namespace

LcuAngles lcu_angles(const PTParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("lcu_angles: t must be >= 0");
  const EvolutionKernels kern = evolution_kernels(p, t);
  const double r = p.r();
  const double sk = p.s() * kern.kappa;
  // M2/sqrt|1-r^2| and M/1 in kernel form; both stay positive at the
  // exceptional point even though the paper's M1, M2 vanish there.
  const double m2k = std::sqrt(kern.c * kern.c + sk * sk);
  const double m = std::sqrt(kern.c * kern.c + (1.0 + r * r) * sk * sk);
  if (m2k < kNormalizerTol || m < kNormalizerTol)
    throw DegenerateNormalizer("lcu_angles: normalizer below 1e-12");
  const double phi = std::atan2(r * sk / m, m2k / m);
  const double phi1 = std::atan2(-sk / m2k, kern.c / m2k);
  const double scale = std::exp(kern.log_scale);
  const double root = std::sqrt(std::abs(1.0 - r * r));
  return {phi, phi1, 0.0, m * root * scale, m2k * root * scale, m * scale};
}

LcuGates build_gates(const LcuAngles& a) {
  return {v0_matrix(a.phi), v1_matrix(a.phi1), v2_matrix(a.phi2)};
}

std::vector<GateOp> circuit_gate_list(const PTParams& p, double t) {
  const LcuAngles a = lcu_angles(p, t);
  std::vector<GateOp> gates;
  gates.push_back(single("H", 0, hadamard()));
  gates.push_back(controlled("CNOT", 1, 0, 1, pauli_x()));
  gates.push_back(controlled("CNOT", 2, 0, 1, pauli_x()));
  gates.push_back(single("V0", 3, v0_matrix(a.phi), a.phi));
  gates.push_back(controlled("V1", 0, 3, 0, v1_matrix(a.phi1), a.phi1));
  gates.push_back(controlled("V2", 0, 3, 1, v2_matrix(a.phi2)));
  gates.push_back(single("H", 3, hadamard()));
  gates.push_back(GateOp{GateKind::Projector, "PROJ0", 3, -1, 1, std::nullopt, {}});
  return gates;
}

CircuitResult run_gate_list(const std::vector<GateOp>& gates, int nqubits) {
  CVector v = CVector::Zero(Eigen::Index(1) << nqubits);
  v(0) = 1.0;
  double p_success = 1.0;
  std::vector<int> projected;
  for (const GateOp& g : gates) {
    if (g.kind == GateKind::Projector) {
      p_success *= apply_projector(v, nqubits, g.target);
      projected.push_back(g.target);
    } else {
      apply_gate(v, nqubits, g);
    }
  }
  std::vector<int> keep;
  for (int q = 0; q < nqubits; ++q) {
    if (std::find(projected.begin(), projected.end(), q) == projected.end())
      keep.push_back(q);
  }
  DensityMatrix full(nqubits, v * v.adjoint());
  return {partial_trace(full, keep), p_success};
}

CircuitResult run_circuit(const PTParams& p, double t) {
  return run_gate_list(circuit_gate_list(p, t), 4);
}

Matrix controlled_unitary(const Matrix& v, int polarity) {
  require_unitary(v, "controlled_unitary");
  Matrix p_fire = Matrix::Zero(2, 2);
  p_fire(polarity, polarity) = 1.0;
  Matrix p_idle = identity(2) - p_fire;
  return kron(p_fire, v) + kron(p_idle, identity(2));
}

std::vector<GateOp> decompose_controlled(const Matrix& v, int polarity) {
  require_unitary(v, "decompose_controlled");
  if (polarity != 0 && polarity != 1)
    throw std::invalid_argument("decompose_controlled: polarity must be 0 or 1");
  constexpr int kControl = 0;
  constexpr int kTarget = 1;
  if ((v - identity(2)).cwiseAbs().maxCoeff() < 1e-12) return {};

  const Zyz z = zyz_decompose(v);
  std::vector<GateOp> gates;
  auto rz = [&](double a) {
    if (std::abs(a) > 1e-14) gates.push_back(single("RZ", kTarget, rot_z(a), a));
  };
  auto ry = [&](double a) {
    if (std::abs(a) > 1e-14) gates.push_back(single("RY", kTarget, rot_y(a), a));
  };
  if (polarity == 0) gates.push_back(single("X", kControl, pauli_x()));
  // C, CNOT, B, CNOT, A with A X B X C = v and A B C = I.
  rz((z.delta - z.beta) / 2.0);
  gates.push_back(controlled("CNOT", kTarget, kControl, 1, pauli_x()));
  rz(-(z.delta + z.beta) / 2.0);
  ry(-z.gamma / 2.0);
  gates.push_back(controlled("CNOT", kTarget, kControl, 1, pauli_x()));
  ry(z.gamma / 2.0);
  rz(z.beta);
  if (std::abs(z.alpha) > 1e-14)
    gates.push_back(single("PHASE", kControl, phase_gate(z.alpha), z.alpha));
  if (polarity == 0) gates.push_back(single("X", kControl, pauli_x()));
  return gates;
}

Matrix gate_list_unitary(const std::vector<GateOp>& gates, int nqubits) {
  const Eigen::Index dim = Eigen::Index(1) << nqubits;
  Matrix out(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    CVector col = CVector::Zero(dim);
    col(j) = 1.0;
    for (const GateOp& g : gates) {
      if (g.kind == GateKind::Projector)
        throw std::invalid_argument("gate_list_unitary: projector in gate list");
      apply_gate(col, nqubits, g);
    }
    out.col(j) = col;
  }
  return out;
}

std::string format_gate_list(const std::vector<GateOp>& gates) {
  std::ostringstream os;
  for (const GateOp& g : gates) {
    os << "GATE " << g.name << ' ' << g.target;
    if (g.kind == GateKind::Controlled)
      os << " control " << g.control << ' ' << g.polarity;
    if (g.angle) os << " angle " << format_angle(*g.angle);
    os << '\n';
  }
  return os.str();
}

std::vector<GateOp> parse_gate_list(const std::string& text) {
  std::vector<GateOp> gates;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag, name, word;
    int target;
    if (!(ls >> tag >> name >> target) || tag != "GATE")
      throw std::invalid_argument("parse_gate_list: malformed line: " + line);
    GateOp g{GateKind::Single, name, target, -1, 1, std::nullopt, {}};
    while (ls >> word) {
      if (word == "control") {
        if (!(ls >> g.control >> g.polarity))
          throw std::invalid_argument("parse_gate_list: malformed control: " + line);
        g.kind = GateKind::Controlled;
      } else if (word == "angle") {
        double a;
        if (!(ls >> a))
          throw std::invalid_argument("parse_gate_list: malformed angle: " + line);
        g.angle = a;
      } else {
        throw std::invalid_argument("parse_gate_list: unexpected token: " + word);
      }
    }
    if (name == "PROJ0") {
      g.kind = GateKind::Projector;
    } else {
      g.matrix = matrix_for(name, g.angle);
    }
    gates.push_back(std::move(g));
  }
  return gates;
}

double circuit_fidelity_report(const PTParams& p, double t) {
  const CircuitResult res = run_circuit(p, t);
  return fidelity(res.rho_work, evolve(ghz_density(), p, t));
}

}  // namespace ptsim
