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

#include <cstddef>
#include <optional>
#include <utility>

#include "rgg/random.hpp"

namespace rgg {

/// Disk of diameter D in the plane; node locations are i.i.d. uniform on it.
class DiskDomain {
 public:
  explicit DiskDomain(double diameter = 1.0);

  double diameter() const noexcept { return diameter_; }
  double radius() const noexcept { return 0.5 * diameter_; }

 private:
  double diameter_;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point2D a, Point2D b) noexcept;

/// Candidate side lengths (r12, r13, r23) of the triangle spanned by nodes 1, 2, 3.
struct TriangleSides {
  double r12 = 0.0;
  double r13 = 0.0;
  double r23 = 0.0;
};

enum class TriangleShape { acute_or_right, obtuse };

struct TriangleQuantities {
  double q = 0.0;     ///< 16 x squared area; positive iff triangle inequalities hold
  double rbar = 0.0;  ///< longest side
  std::optional<double> circumdiameter;  ///< empty when q is at or below the degeneracy guard
  TriangleShape shape = TriangleShape::acute_or_right;
};

/// Relative guard: q <= eps * rbar^4 is treated as a degenerate triangle.
inline constexpr double kDefaultDegeneracyEps = 1e-14;

/// Slack within which arguments just outside [0, 1] are clamped.
inline constexpr double kPhiSlack = 1e-12;

/// phi(x) = arccos(x) - x sqrt(1 - x^2) on [0, 1].
double phi(double x);

/// Q in product (Heron) form.
double triangle_q(const TriangleSides& sides);

/// Q as the expanded symmetric quartic; only used to cross-check triangle_q.
double triangle_q_quartic(const TriangleSides& sides) noexcept;

TriangleQuantities triangle_quantities(const TriangleSides& sides,
                                       double degeneracy_eps = kDefaultDegeneracyEps);

/// Throws DomainError unless every side is finite and nonnegative.
void validate_sides(const TriangleSides& sides);

/// Uniform point in the disk centered at the origin, by rejection from the
/// bounding square (two uniforms per attempt, 4/pi attempts on average).
Point2D sample_point_in_disk(const DiskDomain& domain, RandomStream& rng) noexcept;

/// Number of node pairs n(n-1)/2.
std::size_t pair_count(int n);

/// Lexicographic index of the pair (i, j), 1 <= i < j <= n:
/// (1,2) -> 0, (1,3) -> 1, ..., (1,n) -> n-2, (2,3) -> n-1, ...
std::size_t pair_index(int i, int j, int n);

/// Inverse of pair_index; returns 1-based (i, j).
std::pair<int, int> pair_from_index(std::size_t index, int n);

}  // namespace rgg
