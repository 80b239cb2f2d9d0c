// Copyright 2026 The rggdist Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgg/connection.hpp"
#include "rgg/geometry.hpp"
#include "rgg/graph_pmf.hpp"
#include "rgg/monte_carlo.hpp"
#include "rgg/quadrature.hpp"

namespace rgg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitUsage = 2,
  kExitUnsupported = 3,
};

struct SweepSpec {
  double r0_start = 0.0;
  double r0_stop = 1.0;
  int steps = 40;
  int n = 3;
  std::string model_kind = "hard";  ///< "hard" or "exp:beta=..."; r0 is substituted per point
  std::optional<McSettings> mc;     ///< set: Monte Carlo path; unset: quadrature (n <= 3)
  std::uint64_t seed = 1;           ///< echoed in the header; the Monte Carlo path uses mc->seed
  QuadratureSettings quad = default_pmf_settings();

  /// Throws ArgumentError for bad ranges, UnsupportedError for n >= 4 without mc.
  void validate(const DiskDomain& domain) const;
  /// Evenly spaced r0 values, endpoints included.
  std::vector<double> grid() const;
  /// Connection model at the given range.
  ConnectionModel model_at(double r0) const;
};

struct ConnectivityRow {
  double r0 = 0.0;
  double p_connected = 0.0;
  double p_complete = 0.0;
  PmfMethod method = PmfMethod::quadrature;
  double err_est = 0.0;
};

struct EntropyRow {
  double r0 = 0.0;
  double h_bits = 0.0;
  double h_std_err = 0.0;
  std::optional<double> bound_from_g3;
  std::optional<double> bound_from_g2;
};

/// Graph pmf at one sweep point (quadrature or Monte Carlo per the spec).
GraphPmf sweep_pmf(const SweepSpec& spec, const DiskDomain& domain, double r0);

std::vector<ConnectivityRow> connectivity_sweep(const SweepSpec& spec, const DiskDomain& domain);
std::vector<EntropyRow> entropy_sweep(const SweepSpec& spec, const DiskDomain& domain);

/// Shortest-free fixed format used for every CSV number.
std::string format_number(double value);

void write_connectivity_csv(std::ostream& out, const SweepSpec& spec, const DiskDomain& domain,
                            const std::vector<ConnectivityRow>& rows);
void write_entropy_csv(std::ostream& out, const SweepSpec& spec, const DiskDomain& domain,
                       const std::vector<EntropyRow>& rows);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rgg::cli
