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

// Integrals of the three-side pdf against arbitrary weights over boxes of
// side lengths, by iterated adaptive quadrature.
//
// For fixed (r12, r13) = (a, b) the third side lives on (|a-b|, a+b) and the
// pdf diverges like 1/sqrt at both ends (degenerate triangles). The inner
// integral substitutes r23 = max(a,b) - min(a,b) cos(t), which cancels the
// singularity, and splits at every r23 where the pdf changes branch (right
// angles, circumdiameter = D) or the weight has a known kink.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "rgg/distances.hpp"
#include "rgg/quadrature.hpp"

namespace rgg {

/// Axis-aligned box of side triples: [lower[k], upper[k]] for r12, r13, r23.
struct SideBox {
  std::array<double, 3> lower{};
  std::array<double, 3> upper{};

  static SideBox full(const DiskDomain& domain) {
    const double d = domain.diameter();
    return {{0.0, 0.0, 0.0}, {d, d, d}};
  }
};

namespace detail {

/// Third-side values at which the pdf (or a weight with kinks at `cuts`)
/// changes form, for fixed a, b.
/// Values of the third side at which a triangle with sides a, b has
/// circumdiameter equal to `diameter` (roots of a quadratic in its square).
inline void circumdiameter_roots(double a, double b, double diameter, std::vector<double>& out) {
  const double a2 = a * a, b2 = b * b;
  const double dd = diameter * diameter;
  const double lin = 2.0 * dd * (a2 + b2) - 4.0 * a2 * b2;
  const double con = dd * (a2 - b2) * (a2 - b2);
  const double disc = lin * lin - 4.0 * dd * con;
  if (disc < 0.0) return;
  const double root = std::sqrt(disc);
  for (double x : {(lin - root) / (2.0 * dd), (lin + root) / (2.0 * dd)}) {
    if (x > 0.0) out.push_back(std::sqrt(x));
  }
}

inline void third_side_breaks(double a, double b, double diameter, std::span<const double> cuts,
                              std::vector<double>& out) {
  out.clear();
  const double a2 = a * a, b2 = b * b;
  out.push_back(std::sqrt(a2 + b2));
  out.push_back(std::sqrt(std::abs(a2 - b2)));
  circumdiameter_roots(a, b, diameter, out);
  for (double c : cuts) out.push_back(c);
}

/// Values of b where the inner integral's piece structure changes, for fixed a.
inline void middle_side_breaks(double a, double diameter, std::span<const double> radii,
                               std::vector<double>& out) {
  out.clear();
  out.push_back(a);
  for (double r : radii) {
    if (!(r > 0.0)) continue;
    out.push_back(a + r);
    out.push_back(std::abs(a - r));
    out.push_back(std::sqrt(a * a + r * r));
    out.push_back(std::sqrt(std::abs(r * r - a * a)));
    circumdiameter_roots(a, r, diameter, out);
  }
}

template <std::size_t N>
using Packed = std::array<double, 2 * N>;

template <std::size_t N, class Weight>
Packed<N> inner_third_side(double a, double b, double c_lo, double c_hi, double diameter,
                           Weight& weight, std::span<const double> cuts, double abs_tol,
                           double rel_tol, std::size_t max_subdivisions) {
  Packed<N> out{};
  const double m = std::max(a, b);
  const double h = std::min(a, b);
  if (!(h > 0.0)) return out;
  const double lo = std::max(c_lo, m - h);
  const double hi = std::min({c_hi, m + h, diameter});
  if (!(hi > lo)) return out;

  auto to_angle = [&](double c) { return std::acos(std::clamp((m - c) / h, -1.0, 1.0)); };
  std::vector<double> breaks;
  third_side_breaks(a, b, diameter, cuts, breaks);
  // m - h and m + h are rounded; mapping them through acos would drop a
  // sliver of width ~sqrt(eps) next to the degenerate ends.
  std::vector<double> edges{c_lo <= m - h ? 0.0 : to_angle(lo)};
  for (double c : breaks) {
    if (c > lo && c < hi) edges.push_back(to_angle(c));
  }
  edges.push_back(hi == m + h ? std::numbers::pi : to_angle(hi));
  std::sort(edges.begin(), edges.end());

  auto integrand = [&](double t) {
    const double c = m - h * std::cos(t);
    const double jacobian = h * std::sin(t);
    // Q = (m + h + c)(m - h + c)(m + h - c)(c - m + h) with the last two
    // factors equal to h (1 -+ cos t); their product is (h sin t)^2 exactly.
    const double q = (m + h + c) * (m - h + c) * jacobian * jacobian;
    const double density = joint_pdf3_density_with_q(a, b, c, q, diameter) * jacobian;
    std::array<double, N> v{};
    if (density == 0.0) return v;
    const std::array<double, N> w = weight(a, b, c);
    for (std::size_t k = 0; k < N; ++k) v[k] = density * w[k];
    return v;
  };
  const auto r = integrate_adaptive<N>(integrand, edges, abs_tol, rel_tol, max_subdivisions);
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = r.value[k];
    out[N + k] = r.error_estimate[k];
  }
  return out;
}

template <std::size_t N, class Weight>
Packed<N> middle_side(double a, double b_lo, double b_hi, double c_lo, double c_hi, double diameter,
                      Weight& weight, std::span<const double> cuts, double abs_tol, double rel_tol,
                      std::size_t max_subdivisions) {
  const double inner_abs = 0.1 * abs_tol / std::max(b_hi - b_lo, 1e-300);
  auto inner = [&](double b) {
    return inner_third_side<N>(a, b, c_lo, c_hi, diameter, weight, cuts, inner_abs, 0.1 * rel_tol,
                               max_subdivisions);
  };
  std::vector<double> radii(cuts.begin(), cuts.end());
  radii.insert(radii.end(), {diameter, c_lo, c_hi});
  std::vector<double> breaks;
  middle_side_breaks(a, diameter, radii, breaks);
  // The weight itself jumps or kinks at the cuts along this side too.
  breaks.insert(breaks.end(), cuts.begin(), cuts.end());
  const auto edges = panel_edges(b_lo, b_hi, breaks);
  const auto r = integrate_adaptive<2 * N>(inner, edges, abs_tol, rel_tol, max_subdivisions, N, true);
  Packed<N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = r.value[k];
    out[N + k] = r.error_estimate[k] + r.value[N + k];
  }
  return out;
}

template <std::size_t N>
VectorQuadratureResult<N> unpack(const VectorQuadratureResult<2 * N>& r) {
  VectorQuadratureResult<N> out;
  out.subdivisions = r.subdivisions;
  out.converged = r.converged;
  for (std::size_t k = 0; k < N; ++k) {
    out.value[k] = r.value[k];
    out.error_estimate[k] = r.error_estimate[k] + r.value[N + k];
  }
  return out;
}

}  // namespace detail

/// Integral of joint_pdf3(r) * weight(r) over `box`, component-wise.
///
/// `weight(r12, r13, r23)` returns std::array<double, N>. `cuts` lists side
/// lengths at which the weight has kinks or jumps (e.g. r0 of a hard disk).
/// Errors from inner levels are folded into `error_estimate`; the result is
/// flagged unconverged (not thrown) when any component misses its tolerance.
template <std::size_t N, class Weight>
VectorQuadratureResult<N> integrate_joint_pdf3(const DiskDomain& domain, const SideBox& box,
                                               Weight&& weight, std::span<const double> cuts,
                                               const QuadratureSettings& settings) {
  settings.validate();
  const double diameter = domain.diameter();
  const double a_lo = std::max(box.lower[0], 0.0), a_hi = std::min(box.upper[0], diameter);
  if (!(a_hi > a_lo)) return {};
  const double mid_abs = 0.1 * settings.abs_tol / std::max(a_hi - a_lo, 1e-300);
  auto middle = [&](double a) {
    return detail::middle_side<N>(a, box.lower[1], box.upper[1], box.lower[2], box.upper[2],
                                  diameter, weight, cuts, mid_abs, 0.1 * settings.rel_tol,
                                  settings.max_subdivisions);
  };
  std::vector<double> breaks(cuts.begin(), cuts.end());
  for (double r : {box.lower[1], box.upper[1], box.lower[2], box.upper[2], diameter}) {
    breaks.push_back(r);
    breaks.push_back(0.5 * r);
  }
  // The feasible (r13, r23) region changes shape where a box edge of one
  // side meets a triangle inequality with a box edge of the other.
  for (double u : {box.lower[1], box.upper[1]}) {
    for (double v : {box.lower[2], box.upper[2]}) {
      breaks.push_back(u + v);
      breaks.push_back(std::abs(u - v));
    }
  }
  const auto edges = detail::panel_edges(a_lo, a_hi, breaks);
  const auto r = integrate_adaptive<2 * N>(middle, edges, settings.abs_tol, settings.rel_tol,
                                           settings.max_subdivisions, N, true);
  auto out = detail::unpack<N>(r);
  out.converged = detail::within_tolerance(out.value, out.error_estimate, settings.abs_tol,
                                           settings.rel_tol, N);
  return out;
}

/// Integral over (r13, r23) in the given ranges of joint_pdf3(r12, r13, r23) * weight
/// at fixed r12; with the full ranges this is the marginal density of R12.
template <std::size_t N, class Weight>
VectorQuadratureResult<N> integrate_joint_pdf3_at(double r12, const DiskDomain& domain,
                                                  const SideBox& box, Weight&& weight,
                                                  std::span<const double> cuts,
                                                  const QuadratureSettings& settings) {
  settings.validate();
  const auto packed =
      detail::middle_side<N>(r12, box.lower[1], box.upper[1], box.lower[2], box.upper[2],
                             domain.diameter(), weight, cuts, settings.abs_tol, settings.rel_tol,
                             settings.max_subdivisions);
  VectorQuadratureResult<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.value[k] = packed[k];
    out.error_estimate[k] = packed[N + k];
  }
  out.converged = detail::within_tolerance(out.value, out.error_estimate, settings.abs_tol,
                                           settings.rel_tol, N);
  return out;
}

/// Probability mass of the three-side pdf inside `box`.
QuadratureResult joint_pdf3_mass(const DiskDomain& domain, const SideBox& box,
                                 const QuadratureSettings& settings);

/// Marginal density of R12 at r12 obtained by integrating out the other two sides.
QuadratureResult joint_pdf3_marginal(double r12, const DiskDomain& domain,
                                     const QuadratureSettings& settings);

}  // namespace rgg
