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

#include "rgg/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rgg {

void QuadratureSettings::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || !(abs_tol > 0.0 || rel_tol > 0.0)) {
    throw ArgumentError("quadrature: at least one of abs_tol, rel_tol must be positive");
  }
  if (max_subdivisions < 1) throw ArgumentError("quadrature: max_subdivisions must be >= 1");
  for (const auto& axis : breakpoints) {
    if (!std::is_sorted(axis.begin(), axis.end())) {
      throw ArgumentError("quadrature: breakpoints must be sorted per axis");
    }
  }
}

QuadratureSettings QuadratureSettings::scaled(double factor) const {
  QuadratureSettings s = *this;
  s.abs_tol *= factor;
  s.rel_tol *= factor;
  return s;
}

namespace detail {
namespace {

// Boost stores the nonnegative half of each symmetric rule, Gauss nodes at
// the even Kronrod positions.
template <unsigned Points>
EmbeddedRule make_rule() {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& x = gauss_kronrod<double, Points>::abscissa();
  const auto& wk = gauss_kronrod<double, Points>::weights();
  const auto& wg = gauss<double, Points / 2>::weights();

  EmbeddedRule rule;
  const std::size_t half = x.size();
  for (std::size_t i = half; i-- > 1;) {
    rule.nodes.push_back(-x[i]);
    rule.kronrod.push_back(wk[i]);
    rule.gauss.push_back(i % 2 == 0 ? wg[i / 2] : 0.0);
  }
  for (std::size_t i = 0; i < half; ++i) {
    rule.nodes.push_back(x[i]);
    rule.kronrod.push_back(wk[i]);
    rule.gauss.push_back(i % 2 == 0 ? wg[i / 2] : 0.0);
  }
  return rule;
}

}  // namespace

const EmbeddedRule& gauss_kronrod_15() {
  static const EmbeddedRule rule = make_rule<15>();
  return rule;
}

const EmbeddedRule& gauss_kronrod_7() {
  static const EmbeddedRule rule = make_rule<7>();
  return rule;
}

std::vector<double> panel_edges(double lo, double hi, std::span<const double> breakpoints) {
  std::vector<double> edges{lo};
  for (double b : breakpoints) {
    if (b > lo && b < hi) edges.push_back(b);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace detail
}  // namespace rgg
