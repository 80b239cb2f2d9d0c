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

#include "rgg/entropy_bounds.hpp"

#include <algorithm>
#include <limits>

#include <boost/math/special_functions/binomial.hpp>

#include "rgg/errors.hpp"

namespace rgg {
namespace {

void check_orders(int n, int m) {
  if (m < 2 || m >= n) {
    throw ArgumentError("shearer_factor requires 2 <= m < n, got n = " + std::to_string(n) +
                        ", m = " + std::to_string(m));
  }
}

std::int64_t binomial(int n, int k) {
  return static_cast<std::int64_t>(boost::math::binomial_coefficient<double>(
      static_cast<unsigned>(n), static_cast<unsigned>(k)));
}

std::int64_t ordered_pairs(int n) { return static_cast<std::int64_t>(n) * (n - 1); }

}  // namespace

Rational shearer_factor(int n, int m) {
  check_orders(n, m);
  return Rational(ordered_pairs(n), ordered_pairs(m));
}

Rational shearer_factor_binomial(int n, int m) {
  check_orders(n, m);
  if (n > 60) throw ArgumentError("shearer_factor_binomial: n too large for exact binomials");
  return Rational(binomial(n, m), binomial(n - 2, m - 2));
}

std::string_view to_string(EntropySource s) noexcept {
  switch (s) {
    case EntropySource::quadrature:
      return "quadrature";
    case EntropySource::monte_carlo:
      return "monte_carlo";
    case EntropySource::closed_form:
      return "closed_form";
  }
  return "unknown";
}

double BoundChain::tightest() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) best = std::min(best, e.bound_on_h_n_bits);
  return best;
}

BoundChain bound_chain(int n, const std::map<int, EntropyInput>& h_values, double tolerance) {
  if (n < 2) throw ArgumentError("bound_chain: n must be >= 2");
  if (!h_values.contains(2)) throw ArgumentError("bound_chain: H(G_2) is required");

  BoundChain chain;
  chain.n = n;
  for (auto it = h_values.rbegin(); it != h_values.rend(); ++it) {
    const auto [m, h] = *it;
    if (m > n) continue;
    if (m < 2) throw ArgumentError("bound_chain: node counts below 2 are meaningless");
    const Rational factor = m == n ? Rational(1) : shearer_factor(n, m);
    const double bound = boost::rational_cast<double>(factor) * h.bits;
    chain.entries.push_back({m, h.bits, bound, h.source});
  }

  // Per-edge entropy must not increase with m.
  for (std::size_t i = 0; i + 1 < chain.entries.size(); ++i) {
    const auto& larger = chain.entries[i];
    const auto& smaller = chain.entries[i + 1];
    const double per_edge_larger = larger.h_m_bits / static_cast<double>(ordered_pairs(larger.m) / 2);
    const double per_edge_smaller = smaller.h_m_bits / static_cast<double>(ordered_pairs(smaller.m) / 2);
    if (per_edge_larger > per_edge_smaller + tolerance) {
      chain.warnings.push_back("per-edge entropy increases from m = " + std::to_string(smaller.m) +
                               " to m = " + std::to_string(larger.m) + " (" +
                               std::to_string(per_edge_smaller) + " < " + std::to_string(per_edge_larger) +
                               " bits); upstream entropies are inaccurate");
    }
  }
  return chain;
}

}  // namespace rgg
