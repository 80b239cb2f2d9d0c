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

#include "rgg/distances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "rgg/errors.hpp"

namespace rgg {
namespace {

using std::numbers::pi;

void require_length(double r, const char* what) {
  if (!std::isfinite(r) || r < 0.0) {
    throw DomainError(std::string(what) + " must be finite and nonnegative, got " + std::to_string(r));
  }
}

double phi_clamped(double x) noexcept {
  x = std::clamp(x, 0.0, 1.0);
  return std::acos(x) - x * std::sqrt((1.0 - x) * (1.0 + x));
}

long double phi_clamped_ext(long double x) noexcept {
  x = std::clamp(x, 0.0L, 1.0L);
  return std::acos(x) - x * std::sqrt((1.0L - x) * (1.0L + x));
}

template <class T>
T inscribed_bracket(T x, T y, T z, T q, T diameter, bool with_obtuse_term, T& scale, T& d) {
  auto ph = [](T v) {
    if constexpr (std::is_same_v<T, double>) {
      return phi_clamped(v);
    } else {
      return phi_clamped_ext(v);
    }
  };
  d = T(2) * x * y * z / std::sqrt(q);
  const T ratio = (d * d) / (diameter * diameter);
  const T half_pi = std::numbers::pi_v<T> / T(2);
  T bracket = -half_pi * (T(1) - ratio);
  scale = half_pi;
  for (T r : {x, y, z}) {
    const T u = ph(r / diameter), v = ratio * ph(r / d);
    bracket += u - v;
    scale += u + v;
  }
  if (with_obtuse_term) {
    const T w = T(2) * ratio * ph(z / d);
    bracket += w;
    scale += w;
  }
  return bracket;
}

/// Both inscribed branches share this bracket; `with_obtuse_term` adds the
/// extra term of the obtuse branch. Near right triangles with d close to D
/// the bracket cancels to a small value and is redone in extended precision.
double inscribed_branch(double x, double y, double z, double q, double diameter,
                        bool with_obtuse_term) {
  double scale = 0.0, d = 0.0;
  const double bracket = inscribed_bracket(x, y, z, q, diameter, with_obtuse_term, scale, d);
  const double d2 = diameter * diameter;
  if (std::abs(bracket) > 1e-3 * scale) return 64.0 * d / (pi * pi * d2 * d2) * bracket;
  using L = long double;
  L scale_ext = 0.0L, d_ext = 0.0L;
  const L bracket_ext = inscribed_bracket<L>(x, y, z, q, diameter, with_obtuse_term, scale_ext, d_ext);
  const L dd = diameter;
  const L pi2 = std::numbers::pi_v<L> * std::numbers::pi_v<L>;
  return static_cast<double>(64.0L * d_ext / (pi2 * dd * dd * dd * dd) * bracket_ext);
}

double outscribed_branch(double z, double d, double diameter) {
  const double d2 = diameter * diameter;
  return 128.0 * d / (pi * pi * d2 * d2) * phi_clamped(z / diameter);
}

std::array<double, 3> sorted_sides(const TriangleSides& s) {
  std::array<double, 3> r{s.r12, s.r13, s.r23};
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

std::string_view to_string(JointPdfCase c) noexcept {
  switch (c) {
    case JointPdfCase::obtuse_inscribed:
      return "obtuse_inscribed";
    case JointPdfCase::acute_inscribed:
      return "acute_inscribed";
    case JointPdfCase::obtuse_outscribed:
      return "obtuse_outscribed";
    case JointPdfCase::zero:
      return "zero";
    case JointPdfCase::outside_support:
      return "zero_support";
  }
  return "unknown";
}

double pair_pdf(double r, const DiskDomain& domain) {
  require_length(r, "pair_pdf: distance");
  const double diameter = domain.diameter();
  if (r >= diameter) return 0.0;
  return 16.0 * r / (pi * diameter * diameter) * phi(r / diameter);
}

namespace detail {

namespace {

JointPdfValue sorted_with_q(double x, double y, double z, double q, double diameter) noexcept {
  const double z2 = z * z;
  const double d = 2.0 * x * y * z / std::sqrt(q);
  const bool obtuse = z2 > x * x + y * y;
  // d == D and right triangles go to the inscribed and acute branches.
  if (d <= diameter) {
    const double v = inscribed_branch(x, y, z, q, diameter, obtuse);
    return {std::max(v, 0.0), obtuse ? JointPdfCase::obtuse_inscribed : JointPdfCase::acute_inscribed};
  }
  if (obtuse) return {outscribed_branch(z, d, diameter), JointPdfCase::obtuse_outscribed};
  return {0.0, JointPdfCase::zero};
}

}  // namespace

JointPdfValue joint_pdf3_sorted(double x, double y, double z, double diameter) noexcept {
  if (z > diameter) return {};
  const double q = (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z);
  const double z2 = z * z;
  if (!(q > kDefaultDegeneracyEps * z2 * z2)) return {};
  return sorted_with_q(x, y, z, q, diameter);
}

double joint_pdf3_density(double a, double b, double c, double diameter) noexcept {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return joint_pdf3_sorted(a, b, c, diameter).density;
}

double joint_pdf3_density_with_q(double a, double b, double c, double q, double diameter) noexcept {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  if (c > diameter || !(q > 0.0)) return 0.0;
  return sorted_with_q(a, b, c, q, diameter).density;
}

}  // namespace detail

JointPdfValue joint_pdf3(const TriangleSides& sides, const DiskDomain& domain) {
  validate_sides(sides);
  const auto r = sorted_sides(sides);
  return detail::joint_pdf3_sorted(r[0], r[1], r[2], domain.diameter());
}

double joint_pdf3_branch(const TriangleSides& sides, const DiskDomain& domain, JointPdfCase branch) {
  const auto tq = triangle_quantities(sides);
  if (!tq.circumdiameter) throw DomainError("joint_pdf3_branch: degenerate triangle");
  const auto r = sorted_sides(sides);
  const double d = *tq.circumdiameter;
  const double q = (r[0] + r[1] + r[2]) * (-r[0] + r[1] + r[2]) * (r[0] - r[1] + r[2]) * (r[0] + r[1] - r[2]);
  switch (branch) {
    case JointPdfCase::obtuse_inscribed:
      return inscribed_branch(r[0], r[1], r[2], q, domain.diameter(), true);
    case JointPdfCase::acute_inscribed:
      return inscribed_branch(r[0], r[1], r[2], q, domain.diameter(), false);
    case JointPdfCase::obtuse_outscribed:
      return outscribed_branch(r[2], d, domain.diameter());
    case JointPdfCase::zero:
    case JointPdfCase::outside_support:
      return 0.0;
  }
  return 0.0;
}

double pair_pdf_on_circle(double r, double s) {
  require_length(r, "pair_pdf_on_circle: distance");
  if (!std::isfinite(s) || s <= 0.0) {
    throw DomainError("pair_pdf_on_circle: diameter s must be positive, got " + std::to_string(s));
  }
  if (r >= s) return 0.0;
  return 8.0 * r / (pi * s * s) * std::acos(r / s);
}

double angle_pdf_trapezoid(double theta, double half_width_ij, double half_width_ik) {
  for (double w : {half_width_ij, half_width_ik}) {
    if (!(w > 0.0 && w < 0.5 * pi)) {
      throw DomainError("angle_pdf_trapezoid: half widths must lie in (0, pi/2), got " + std::to_string(w));
    }
  }
  if (!std::isfinite(theta)) throw DomainError("angle_pdf_trapezoid: angle must be finite");
  const double a = std::abs(theta);
  if (a >= pi) return 0.0;
  const double plateau = std::abs(half_width_ij - half_width_ik);
  const double support = half_width_ij + half_width_ik;
  if (a <= plateau) return 1.0 / (2.0 * std::max(half_width_ij, half_width_ik));
  if (a < support) return (support - a) / (4.0 * half_width_ij * half_width_ik);
  return 0.0;
}

double sbar_pdf(double s, const DiskDomain& domain) {
  const double diameter = domain.diameter();
  if (!(s >= 0.0 && s <= diameter)) {
    throw DomainError("sbar_pdf: s must lie in [0, D], got " + std::to_string(s));
  }
  const double u = s / diameter;
  return 6.0 * u * u * u * u * u / diameter;
}

ConditionalContext::ConditionalContext(double s) : s_(s) {
  if (!std::isfinite(s) || s <= 0.0) {
    throw DomainError("conditioning diameter must be finite and positive, got " + std::to_string(s));
  }
}

double conditional_joint_pdf3(const TriangleSides& sides, const ConditionalContext& ctx) {
  validate_sides(sides);
  const auto r = sorted_sides(sides);
  const double s = ctx.s();
  const double z = r[2];
  if (z > s) return 0.0;
  const auto tq = triangle_quantities(sides);
  if (!tq.circumdiameter) return 0.0;
  const double d = *tq.circumdiameter;
  const double s4 = s * s * s * s;
  if (d <= s) {
    double angles = -0.5 * pi;
    for (double x : r) angles += std::acos(std::min(x / s, 1.0));
    return std::max(0.0, 64.0 * d / (3.0 * pi * pi * s4) * angles);
  }
  if (tq.shape == TriangleShape::obtuse) {
    return 128.0 * d / (3.0 * pi * pi * s4) * std::acos(std::min(z / s, 1.0));
  }
  return 0.0;
}

QuadratureSettings default_conditioning_settings() {
  QuadratureSettings q;
  q.abs_tol = 1e-13;
  q.rel_tol = 1e-11;
  q.max_subdivisions = 2000;
  return q;
}

QuadratureResult joint_pdf3_via_conditioning(const TriangleSides& sides, const DiskDomain& domain,
                                             const QuadratureSettings& quad) {
  validate_sides(sides);
  const auto tq = triangle_quantities(sides);
  const double diameter = domain.diameter();
  if (!tq.circumdiameter || tq.rbar > diameter || tq.rbar <= 0.0) return {};

  QuadratureSettings settings = quad;
  settings.breakpoints = {{*tq.circumdiameter}};
  auto integrand = [&](const std::array<double, 1>& s) {
    return conditional_joint_pdf3(sides, ConditionalContext(s[0])) * sbar_pdf(s[0], domain);
  };
  if (tq.rbar == diameter) return {};
  return integrate<1>(integrand, Box<1>{{tq.rbar}, {diameter}}, settings);
}

}  // namespace rgg
