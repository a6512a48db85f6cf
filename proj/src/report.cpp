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

#include "ptsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace ptsim {

namespace {

constexpr int kDefaultEvolveSteps = 400;
constexpr int kDefaultSweepSamples = 4000;
constexpr int kDefaultCircuitSteps = 20;

constexpr char kRecordHeader[] =
    "r,t,S_A,S_B,S_BC,I_AB,I_BC,C_AB,C_BC,p_success";

double clamp_nonneg(double v) {
  return v < 0.0 ? 0.0 : v;
}

int resolve_steps(const RunConfig& cfg, int fallback) {
  if (cfg.steps > 0) {
    if (cfg.steps < 2) throw std::invalid_argument("config: steps must be >= 2");
    return cfg.steps;
  }
  return fallback;
}

std::string opt_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string opt_json(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("null");
}

void json_array(std::ostream& os, size_t n,
                const std::function<void(std::ostream&, size_t)>& row) {
  os << "[\n";
  for (size_t i = 0; i < n; ++i) {
    row(os, i);
    os << (i + 1 < n ? ",\n" : "\n");
  }
  os << "]\n";
}

void json_matrix(std::ostream& os, const Matrix& m) {
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : "") << "[" << format_number(m(i, j).real()) << ", "
         << format_number(m(i, j).imag()) << "]";
    }
    os << "]";
  }
  os << "]";
}

}  // namespace

double resolve_horizon(const PTParams& p, double t_max) {
  if (t_max > 0.0) return t_max;
  return default_horizon(p);
}

std::vector<SweepRecord> evolve_dataset(const RunConfig& cfg) {
  const PTParams p(cfg.s, cfg.r);
  const int steps = resolve_steps(cfg, kDefaultEvolveSteps);
  const double t_max = resolve_horizon(p, cfg.t_max);
  const DensityMatrix rho0 = ghz_density();
  std::vector<SweepRecord> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = t_max * i / (steps - 1);
    const DensityMatrix rho = evolve(rho0, p, t);
    SweepRecord rec{};
    rec.r = cfg.r;
    rec.t = t;
    rec.s_a = clamp_nonneg(von_neumann_entropy(partial_trace(rho, {0})));
    rec.s_b = clamp_nonneg(von_neumann_entropy(partial_trace(rho, {1})));
    rec.s_bc = clamp_nonneg(von_neumann_entropy(partial_trace(rho, {1, 2})));
    rec.i_ab = clamp_nonneg(mutual_information(rho, 0, 1));
    rec.i_bc = clamp_nonneg(mutual_information(rho, 1, 2));
    rec.c_ab = concurrence(partial_trace(rho, {0, 1}));
    rec.c_bc = concurrence(partial_trace(rho, {1, 2}));
    try {
      rec.p_success = run_circuit(p, t).p_success;
    } catch (const DegenerateNormalizer&) {
      rec.p_success = std::nullopt;
    }
    rows.push_back(rec);
  }
  return rows;
}

std::vector<SweepSummary> sweep_dataset(const RunConfig& cfg) {
  if (cfg.r_grid.empty())
    throw std::invalid_argument("sweep: r grid must be nonempty");
  const int samples = resolve_steps(cfg, kDefaultSweepSamples);
  std::vector<SweepSummary> rows;
  rows.reserve(cfg.r_grid.size());
  for (double r : cfg.r_grid) {
    if (!(r > 0.0)) throw std::invalid_argument("sweep: r values must be > 0");
    const PTParams p(1.0, r);
    const double horizon = resolve_horizon(p, cfg.t_max);
    SweepSummary row{};
    row.r = r;
    row.delta_i = delta_mutual_info(r, horizon, samples);
    row.info = r < 1.0 ? row.delta_i + 1.0 : 2.0 * entropy_stable_b(r);
    row.amplitude = concurrence_amplitude(r, horizon, samples);
    row.c_s = r > 1.0 ? std::optional<double>(1.0 / r) : std::nullopt;
    rows.push_back(row);
  }
  return rows;
}

StableReport stable_report(double r) {
  if (!(r > 1.0))
    throw std::invalid_argument(
        "stable: requires r > 1; the unbroken phase has no stable state");
  StableReport rep{};
  rep.r = r;
  const DensityMatrix a = stable_state_a(r);
  const DensityMatrix b = stable_state_b(r);
  rep.rho_a = a.matrix();
  rep.rho_b = b.matrix();
  rep.bloch_a = bloch(a);
  rep.bloch_b = bloch(b);
  rep.s_a = von_neumann_entropy(a);
  rep.s_b = entropy_stable_b(r);
  rep.damping = 1.0 / (2.0 * r);
  rep.c_s = 1.0 / r;
  return rep;
}

std::vector<CircuitPoint> circuit_report(const RunConfig& cfg) {
  const PTParams p(cfg.s, cfg.r);
  const int steps = resolve_steps(cfg, kDefaultCircuitSteps);
  const double t_max = resolve_horizon(p, cfg.t_max);
  const DensityMatrix rho0 = ghz_density();
  std::vector<CircuitPoint> rows;
  rows.reserve(steps);
  for (int i = 1; i <= steps; ++i) {
    const double t = t_max * i / steps;
    CircuitPoint pt{cfg.r, t, 0.0, 0.0, 0.0, false};
    try {
      const CircuitResult res = run_circuit(p, t);
      const DensityMatrix direct = evolve(rho0, p, t);
      pt.trace_dist = trace_distance(res.rho_work, direct);
      pt.fid = fidelity(res.rho_work, direct);
      pt.p_success = res.p_success;
    } catch (const DegenerateNormalizer&) {
      pt.skipped = true;
    }
    rows.push_back(pt);
  }
  return rows;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_records_csv(std::ostream& os, const std::vector<SweepRecord>& rows) {
  os << kRecordHeader << '\n';
  for (const SweepRecord& r : rows) {
    os << format_number(r.r) << ',' << format_number(r.t) << ','
       << format_number(r.s_a) << ',' << format_number(r.s_b) << ','
       << format_number(r.s_bc) << ',' << format_number(r.i_ab) << ','
       << format_number(r.i_bc) << ',' << format_number(r.c_ab) << ','
       << format_number(r.c_bc) << ',' << opt_number(r.p_success) << '\n';
  }
}

void write_records_json(std::ostream& os, const std::vector<SweepRecord>& rows) {
  json_array(os, rows.size(), [&](std::ostream& o, size_t i) {
    const SweepRecord& r = rows[i];
    o << "  {\"r\": " << format_number(r.r) << ", \"t\": " << format_number(r.t)
      << ", \"S_A\": " << format_number(r.s_a)
      << ", \"S_B\": " << format_number(r.s_b)
      << ", \"S_BC\": " << format_number(r.s_bc)
      << ", \"I_AB\": " << format_number(r.i_ab)
      << ", \"I_BC\": " << format_number(r.i_bc)
      << ", \"C_AB\": " << format_number(r.c_ab)
      << ", \"C_BC\": " << format_number(r.c_bc)
      << ", \"p_success\": " << opt_json(r.p_success) << "}";
  });
}

void write_summary_csv(std::ostream& os, const std::vector<SweepSummary>& rows) {
  os << "r,delta_I,I_value,amplitude,C_s\n";
  for (const SweepSummary& r : rows) {
    os << format_number(r.r) << ',' << format_number(r.delta_i) << ','
       << format_number(r.info) << ',' << format_number(r.amplitude) << ','
       << opt_number(r.c_s) << '\n';
  }
}

void write_summary_json(std::ostream& os, const std::vector<SweepSummary>& rows) {
  json_array(os, rows.size(), [&](std::ostream& o, size_t i) {
    const SweepSummary& r = rows[i];
    o << "  {\"r\": " << format_number(r.r)
      << ", \"delta_I\": " << format_number(r.delta_i)
      << ", \"I_value\": " << format_number(r.info)
      << ", \"amplitude\": " << format_number(r.amplitude)
      << ", \"C_s\": " << opt_json(r.c_s) << "}";
  });
}

void write_circuit_csv(std::ostream& os, const std::vector<CircuitPoint>& rows) {
  os << "r,t,trace_distance,fidelity,p_success,status\n";
  for (const CircuitPoint& r : rows) {
    os << format_number(r.r) << ',' << format_number(r.t) << ',';
    if (r.skipped) {
      os << ",,,skipped\n";
    } else {
      os << format_number(r.trace_dist) << ',' << format_number(r.fid) << ','
         << format_number(r.p_success) << ",ok\n";
    }
  }
}

void write_circuit_json(std::ostream& os, const std::vector<CircuitPoint>& rows) {
  json_array(os, rows.size(), [&](std::ostream& o, size_t i) {
    const CircuitPoint& r = rows[i];
    o << "  {\"r\": " << format_number(r.r) << ", \"t\": " << format_number(r.t);
    if (r.skipped) {
      o << ", \"status\": \"skipped\"}";
    } else {
      o << ", \"trace_distance\": " << format_number(r.trace_dist)
        << ", \"fidelity\": " << format_number(r.fid)
        << ", \"p_success\": " << format_number(r.p_success)
        << ", \"status\": \"ok\"}";
    }
  });
}

void write_stable_text(std::ostream& os, const StableReport& rep) {
  auto entry = [&](const Complex& c) {
    return format_number(c.real()) + (c.imag() < 0 ? "-" : "+") +
           format_number(std::abs(c.imag())) + "i";
  };
  os << "r = " << format_number(rep.r) << '\n';
  os << "rho_A_ss = [[" << entry(rep.rho_a(0, 0)) << ", " << entry(rep.rho_a(0, 1))
     << "], [" << entry(rep.rho_a(1, 0)) << ", " << entry(rep.rho_a(1, 1)) << "]]\n";
  os << "rho_B_ss = [[" << entry(rep.rho_b(0, 0)) << ", " << entry(rep.rho_b(0, 1))
     << "], [" << entry(rep.rho_b(1, 0)) << ", " << entry(rep.rho_b(1, 1)) << "]]\n";
  os << "bloch_A = (" << format_number(rep.bloch_a(0)) << ", "
     << format_number(rep.bloch_a(1)) << ", " << format_number(rep.bloch_a(2)) << ")\n";
  os << "bloch_B = (" << format_number(rep.bloch_b(0)) << ", "
     << format_number(rep.bloch_b(1)) << ", " << format_number(rep.bloch_b(2)) << ")\n";
  os << "S_A = " << format_number(rep.s_a) << '\n';
  os << "S_B = " << format_number(rep.s_b) << '\n';
  os << "D = " << format_number(rep.damping) << '\n';
  os << "C_s = " << format_number(rep.c_s) << '\n';
}

void write_stable_json(std::ostream& os, const StableReport& rep) {
  os << "{\"r\": " << format_number(rep.r) << ",\n \"rho_A_ss\": ";
  json_matrix(os, rep.rho_a);
  os << ",\n \"rho_B_ss\": ";
  json_matrix(os, rep.rho_b);
  os << ",\n \"bloch_A\": [" << format_number(rep.bloch_a(0)) << ", "
     << format_number(rep.bloch_a(1)) << ", " << format_number(rep.bloch_a(2))
     << "],\n \"bloch_B\": [" << format_number(rep.bloch_b(0)) << ", "
     << format_number(rep.bloch_b(1)) << ", " << format_number(rep.bloch_b(2))
     << "],\n \"S_A\": " << format_number(rep.s_a)
     << ",\n \"S_B\": " << format_number(rep.s_b)
     << ",\n \"D\": " << format_number(rep.damping)
     << ",\n \"C_s\": " << format_number(rep.c_s) << "}\n";
}

}  // namespace ptsim
