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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rgg/random.hpp"

namespace rgg {

/// p(r) = 1 for r < r0, else 0.
struct HardDisk {
  double r0 = 0.0;
};

/// p(r) = exp(-(r / r0)^beta).
struct ExponentialSoft {
  double r0 = 1.0;
  double beta = 2.0;
};

struct Knot {
  double r = 0.0;
  double p = 0.0;
};

/// Piecewise-linear p(r) through the knots, constant beyond the end knots.
struct Tabulated {
  std::vector<Knot> knots;
};

/// Pair connection function: probability that two nodes at distance r share an edge.
class ConnectionModel {
 public:
  using Kind = std::variant<HardDisk, ExponentialSoft, Tabulated>;

  static ConnectionModel hard_disk(double r0);
  static ConnectionModel exponential_soft(double r0, double beta);
  static ConnectionModel tabulated(std::vector<Knot> knots);

  /// Parses `hard:r0=0.3`, `exp:r0=0.3,beta=2` or `table:@path.csv`
  /// (CSV with header `r,p`). Throws ArgumentError on malformed input.
  static ConnectionModel parse(std::string_view spec);

  const Kind& kind() const noexcept { return kind_; }

  /// Same family with the range parameter replaced (hard and exp only).
  ConnectionModel with_range(double r0) const;

  /// Distances at which p is not smooth; quadrature splits there.
  std::vector<double> kinks() const;

  /// Canonical textual form, e.g. `hard:r0=0.3`.
  std::string describe() const;

 private:
  explicit ConnectionModel(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// Reads a `r,p` CSV (header required) into knots.
std::vector<Knot> read_knots_csv(const std::string& path);

/// p(r) in [0, 1]. Throws DomainError for negative or NaN r.
double connect_prob(const ConnectionModel& model, double r);

/// Bernoulli(p(r)) edge indicator. Draws one uniform when 0 < p < 1 and
/// none when the outcome is certain.
bool sample_edge(const ConnectionModel& model, double r, RandomStream& rng);

}  // namespace rgg
