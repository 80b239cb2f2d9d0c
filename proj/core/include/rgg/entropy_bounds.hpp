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

// Upper bounds on H(G_n) from entropies of smaller graphs. Covering the n
// nodes by all m-subsets, each pair appears in C(n-2, m-2) subsets, so
// Shearer's inequality gives H(G_n) <= C(n,m) / C(n-2,m-2) * H(G_m)
// = n(n-1) / (m(m-1)) * H(G_m).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace rgg {

using Rational = boost::rational<std::int64_t>;

/// n(n-1) / (m(m-1)) for 2 <= m < n; throws ArgumentError otherwise.
Rational shearer_factor(int n, int m);

/// The same factor as C(n, m) / C(n-2, m-2); must equal shearer_factor.
Rational shearer_factor_binomial(int n, int m);

enum class EntropySource { quadrature, monte_carlo, closed_form };

std::string_view to_string(EntropySource s) noexcept;

struct EntropyInput {
  double bits = 0.0;
  EntropySource source = EntropySource::quadrature;
};

struct BoundEntry {
  int m = 0;
  double h_m_bits = 0.0;
  double bound_on_h_n_bits = 0.0;
  EntropySource source = EntropySource::quadrature;
};

struct BoundChain {
  int n = 0;
  std::vector<BoundEntry> entries;  ///< m descending
  std::vector<std::string> warnings;

  /// Smallest bound in the chain.
  double tightest() const;
};

/// Bounds on H(G_n) from every supplied H(G_m), m <= n (m = n contributes
/// itself). Per-edge entropies that increase with m by more than `tolerance`
/// are reported as warnings: they can only come from numerical error.
/// Throws ArgumentError when m = 2 is missing or n < 2.
BoundChain bound_chain(int n, const std::map<int, EntropyInput>& h_values, double tolerance = 0.0);

}  // namespace rgg
