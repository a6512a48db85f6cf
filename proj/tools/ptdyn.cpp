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

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ptsim/report.hpp"

namespace {

// Exit codes: 0 success, 1 invalid config, 2 verification failure, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

constexpr double kCircuitGateTol = 1e-9;

int write_output(const ptsim::RunConfig& cfg, const std::string& body) {
  if (cfg.output.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << cfg.output << '\n';
    return kExitIo;
  }
  out << body;
  if (!out) {
    std::cerr << "error: write failed: " << cfg.output << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int run_evolve(const ptsim::RunConfig& cfg) {
  auto rows = ptsim::evolve_dataset(cfg);
  std::ostringstream os;
  if (cfg.format == ptsim::OutputFormat::Csv) {
    ptsim::write_records_csv(os, rows);
  } else {
    ptsim::write_records_json(os, rows);
  }
  return write_output(cfg, os.str());
}

int run_sweep(const ptsim::RunConfig& cfg) {
  auto rows = ptsim::sweep_dataset(cfg);
  std::ostringstream os;
  if (cfg.format == ptsim::OutputFormat::Csv) {
    ptsim::write_summary_csv(os, rows);
  } else {
    ptsim::write_summary_json(os, rows);
  }
  return write_output(cfg, os.str());
}

int run_stable(const ptsim::RunConfig& cfg) {
  auto rep = ptsim::stable_report(cfg.r);
  std::ostringstream os;
  if (cfg.format == ptsim::OutputFormat::Json) {
    ptsim::write_stable_json(os, rep);
  } else {
    ptsim::write_stable_text(os, rep);
  }
  return write_output(cfg, os.str());
}

int run_turning(const ptsim::RunConfig& cfg) {
  ptsim::PTParams p(cfg.s, cfg.r);
  const double horizon = ptsim::resolve_horizon(p, cfg.t_max);
  auto tp = ptsim::find_turning_point(p, horizon);
  std::ostringstream os;
  if (tp) {
    os << "t_p = " << ptsim::format_number(tp->t_p)
       << "\ns_p = " << ptsim::format_number(tp->s_p) << '\n';
  } else {
    os << "NoTurningPoint\n";
  }
  return write_output(cfg, os.str());
}

int run_critical(const ptsim::RunConfig& cfg) {
  const double r_mi = ptsim::critical_r_mi(1e-8);
  return write_output(cfg, ptsim::format_number(r_mi) + "\n");
}

int run_circuit(const ptsim::RunConfig& cfg) {
  auto rows = ptsim::circuit_report(cfg);
  std::ostringstream os;
  if (cfg.format == ptsim::OutputFormat::Csv) {
    ptsim::write_circuit_csv(os, rows);
  } else {
    ptsim::write_circuit_json(os, rows);
  }
  bool failed = false;
  for (const auto& row : rows) {
    if (row.skipped) {
      std::cerr << "warning: degenerate normalizer at t = "
                << ptsim::format_number(row.t) << ", point skipped\n";
    } else if (row.trace_dist > kCircuitGateTol) {
      failed = true;
    }
  }
  if (cfg.dump) {
    ptsim::PTParams p(cfg.s, cfg.r);
    const double t = ptsim::resolve_horizon(p, cfg.t_max);
    os << ptsim::format_gate_list(ptsim::circuit_gate_list(p, t));
  }
  const int io = write_output(cfg, os.str());
  if (io != kExitOk) return io;
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit PT-symmetric dynamics simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  ptsim::RunConfig cfg;
  std::string format = "csv";
  app.add_option("--s", cfg.s, "Energy scale s (> 0)");
  app.add_option("--r", cfg.r, "Non-Hermiticity degree r (>= 0)");
  app.add_option("--r-grid", cfg.r_grid, "Comma-separated r grid for sweep")
      ->delimiter(',');
  app.add_option("--t-max", cfg.t_max, "Time horizon (default: regime-dependent)");
  app.add_option("--steps", cfg.steps, "Grid points / samples");
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", cfg.output, "Output file (default: stdout)");
  app.add_flag("--dump", cfg.dump, "circuit: append the gate list");

  auto* evolve = app.add_subcommand("evolve", "Time sweep of entropy, mutual information and concurrence");
  auto* sweep = app.add_subcommand("sweep", "Sweep over non-Hermiticity: delta I, I, amplitude, C_s");
  auto* stable = app.add_subcommand("stable", "Closed-form stable-state report (r > 1)");
  auto* turning = app.add_subcommand("turning", "Turning point of S(rho_B) in the broken phase");
  auto* critical = app.add_subcommand("critical", "Critical point r_MI of the mutual-information increase");
  auto* circuit = app.add_subcommand("circuit", "Verify the LCU circuit against direct evolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  cfg.format = format == "json" ? ptsim::OutputFormat::Json : ptsim::OutputFormat::Csv;

  try {
    if (evolve->parsed()) return run_evolve(cfg);
    if (sweep->parsed()) return run_sweep(cfg);
    if (stable->parsed()) return run_stable(cfg);
    if (turning->parsed()) return run_turning(cfg);
    if (critical->parsed()) return run_critical(cfg);
    if (circuit->parsed()) return run_circuit(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitConfig;
}
