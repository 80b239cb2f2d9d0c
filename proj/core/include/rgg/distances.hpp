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

// Distance densities for points uniform in a disk: the two-point distance
// pdf, the joint pdf of the three sides of a random triangle, and the
// conditional densities (given the largest concentric enclosing diameter)
// from which the three-side pdf is assembled.

#include <string_view>

#include "rgg/geometry.hpp"
#include "rgg/quadrature.hpp"

namespace rgg {

/// Which branch of the three-side pdf applies to a triple.
enum class JointPdfCase {
  obtuse_inscribed,   ///< obtuse, circumdiameter d <= D
  acute_inscribed,    ///< acute or right, d <= D
  obtuse_outscribed,  ///< obtuse, d > D
  zero,               ///< acute or right, d > D: no such triangle fits in the disk
  outside_support,    ///< triangle inequality fails (Q <= guard) or longest side > D
};

std::string_view to_string(JointPdfCase c) noexcept;

struct JointPdfValue {
  double density = 0.0;
  JointPdfCase branch = JointPdfCase::outside_support;
};

/// Density of the distance between two uniform points in the disk,
/// 16 r / (pi D^2) * phi(r / D) on [0, D], zero beyond.
double pair_pdf(double r, const DiskDomain& domain);

/// Joint pdf of (R12, R13, R23) for three uniform points in the disk.
/// Sides are sorted first, so the result is bit-identical under permutation.
JointPdfValue joint_pdf3(const TriangleSides& sides, const DiskDomain& domain);

/// Evaluates the formula of one branch regardless of whether its conditions
/// hold. Requires a defined circumdiameter (nondegenerate triangle);
/// `outside_support` and `zero` return 0.
double joint_pdf3_branch(const TriangleSides& sides, const DiskDomain& domain, JointPdfCase branch);

/// Distance from a point on a circle of diameter s to a uniform point inside it:
/// 8 r / (pi s^2) * arccos(r / s) on [0, s].
double pair_pdf_on_circle(double r, double s);

/// Density of the difference of two independent uniforms on (-a, a) and
/// (-b, b), a, b in (0, pi/2): a symmetric trapezoid on (-(a+b), a+b).
double angle_pdf_trapezoid(double theta, double half_width_ij, double half_width_ik);

/// Density of the largest of three i.i.d. concentric enclosing diameters: 6 s^5 / D^6.
double sbar_pdf(double s, const DiskDomain& domain);

/// Conditioning value s of the largest concentric enclosing diameter.
class ConditionalContext {
 public:
  explicit ConditionalContext(double s);
  double s() const noexcept { return s_; }

 private:
  double s_;
};

/// Joint pdf of the three sides given that the largest concentric enclosing
/// diameter equals s (one vertex on the circle of diameter s, the other two inside).
double conditional_joint_pdf3(const TriangleSides& sides, const ConditionalContext& ctx);

/// Default settings for the one-dimensional conditioning integral.
QuadratureSettings default_conditioning_settings();

/// Recovers the three-side pdf by integrating the conditional pdf against the
/// density of s over [longest side, D], split at s = d. Independent of
/// joint_pdf3's closed form. Throws AccuracyError on non-convergence.
QuadratureResult joint_pdf3_via_conditioning(const TriangleSides& sides, const DiskDomain& domain,
                                             const QuadratureSettings& quad = default_conditioning_settings());

namespace detail {

/// Unchecked three-side pdf. Requires x <= y <= z, all finite and >= 0.
JointPdfValue joint_pdf3_sorted(double x, double y, double z, double diameter) noexcept;

/// Unchecked three-side pdf for any order of finite nonnegative sides.
double joint_pdf3_density(double a, double b, double c, double diameter) noexcept;

/// As joint_pdf3_density, with Q supplied by the caller (who can often form
/// it without cancellation near the degenerate rim). Zero only for q <= 0;
/// no degeneracy guard is applied.
double joint_pdf3_density_with_q(double a, double b, double c, double q, double diameter) noexcept;

}  // namespace detail
}  // namespace rgg
