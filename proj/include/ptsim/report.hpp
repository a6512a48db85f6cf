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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptsim/lcu.hpp"
#include "ptsim/measures.hpp"

namespace ptsim {

enum class OutputFormat { Csv, Json };

/// Shared configuration for the dataset-emitting commands. Fully
/// deterministic; identical configs produce byte-identical output.
struct RunConfig {
  double s = 1.0;
  double r = 0.5;
  double t_max = 0.0;  // <= 0: regime-dependent default horizon
  int steps = 0;       // <= 0: per-command default
  std::vector<double> r_grid;
  OutputFormat format = OutputFormat::Csv;
  std::string output;  // empty: stdout
  bool dump = false;
};

/// One row of a time sweep.
struct SweepRecord {
  double r, t;
  double s_a, s_b, s_bc;
  double i_ab, i_bc;
  double c_ab, c_bc;
  std::optional<double> p_success;
};

/// One row of a non-Hermiticity sweep. info is I_md (r < 1) or I_s (r >= 1);
/// c_s = 1/r is only defined past the exceptional point.
struct SweepSummary {
  double r;
  double delta_i;
  double info;
  double amplitude;
  std::optional<double> c_s;
};

struct StableReport {
  double r;
  Matrix rho_a, rho_b;
  Eigen::Vector3d bloch_a, bloch_b;
  double s_a, s_b;
  double damping;  // 1/(2r)
  double c_s;      // 1/r
};

struct CircuitPoint {
  double r, t;
  double trace_dist, fid, p_success;
  bool skipped;  // degenerate normalizer at this point
};

double resolve_horizon(const PTParams& p, double t_max);

std::vector<SweepRecord> evolve_dataset(const RunConfig& cfg);
std::vector<SweepSummary> sweep_dataset(const RunConfig& cfg);
StableReport stable_report(double r);
std::vector<CircuitPoint> circuit_report(const RunConfig& cfg);

/// 12 significant digits, locale-free.
std::string format_number(double v);

void write_records_csv(std::ostream& os, const std::vector<SweepRecord>& rows);
void write_records_json(std::ostream& os, const std::vector<SweepRecord>& rows);
void write_summary_csv(std::ostream& os, const std::vector<SweepSummary>& rows);
void write_summary_json(std::ostream& os, const std::vector<SweepSummary>& rows);
void write_circuit_csv(std::ostream& os, const std::vector<CircuitPoint>& rows);
void write_circuit_json(std::ostream& os, const std::vector<CircuitPoint>& rows);
void write_stable_text(std::ostream& os, const StableReport& rep);
void write_stable_json(std::ostream& os, const StableReport& rep);

}  // namespace ptsim
