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

#include "rgg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rgg/errors.hpp"

namespace rgg {

DiskDomain::DiskDomain(double diameter) : diameter_(diameter) {
  if (!std::isfinite(diameter) || diameter <= 0.0) {
    throw DomainError("disk diameter must be finite and positive, got " +
                      std::to_string(diameter));
  }
}

double distance(Point2D a, Point2D b) noexcept {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

double phi(double x) {
  if (!(x >= -kPhiSlack && x <= 1.0 + kPhiSlack)) {
    throw DomainError("phi: argument outside [0, 1]: " + std::to_string(x));
  }
  x = std::clamp(x, 0.0, 1.0);
  return std::acos(x) - x * std::sqrt((1.0 - x) * (1.0 + x));
}

void validate_sides(const TriangleSides& s) {
  for (double r : {s.r12, s.r13, s.r23}) {
    if (!std::isfinite(r) || r < 0.0) {
      throw DomainError("side lengths must be finite and nonnegative");
    }
  }
}

double triangle_q(const TriangleSides& s) {
  const double a = s.r12, b = s.r13, c = s.r23;
  return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

double triangle_q_quartic(const TriangleSides& s) noexcept {
  const double a2 = s.r12 * s.r12, b2 = s.r13 * s.r13, c2 = s.r23 * s.r23;
  return 2.0 * a2 * b2 + 2.0 * a2 * c2 + 2.0 * b2 * c2 - a2 * a2 - b2 * b2 - c2 * c2;
}

TriangleQuantities triangle_quantities(const TriangleSides& sides, double degeneracy_eps) {
  validate_sides(sides);
  // Sorting makes every derived quantity bit-identical under permutation.
  std::array<double, 3> r{sides.r12, sides.r13, sides.r23};
  std::sort(r.begin(), r.end());
  const TriangleSides sorted{r[0], r[1], r[2]};

  TriangleQuantities out;
  out.q = triangle_q(sorted);
  out.rbar = r[2];
  out.shape = r[2] * r[2] > r[0] * r[0] + r[1] * r[1] ? TriangleShape::obtuse
                                                      : TriangleShape::acute_or_right;
  const double rbar4 = out.rbar * out.rbar * out.rbar * out.rbar;
  if (out.q > degeneracy_eps * rbar4 && out.q > 0.0) {
    out.circumdiameter = 2.0 * r[0] * r[1] * r[2] / std::sqrt(out.q);
  }
  return out;
}

Point2D sample_point_in_disk(const DiskDomain& domain, RandomStream& rng) noexcept {
  const double radius = domain.radius();
  for (;;) {
    const double x = 2.0 * rng.uniform() - 1.0;
    const double y = 2.0 * rng.uniform() - 1.0;
    if (x * x + y * y <= 1.0) return {radius * x, radius * y};
  }
}

std::size_t pair_count(int n) {
  if (n < 0) throw ArgumentError("node count must be nonnegative");
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
}

std::size_t pair_index(int i, int j, int n) {
  if (n < 2 || i < 1 || j > n || i >= j) {
    throw ArgumentError("pair_index requires 1 <= i < j <= n, got (" + std::to_string(i) +
                        ", " + std::to_string(j) + ", " + std::to_string(n) + ")");
  }
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(j - 1);
  const auto m = static_cast<std::size_t>(n);
  // Pairs preceding row a: sum_{k<a} (m - 1 - k).
  return a * (2 * m - a - 1) / 2 + (b - a - 1);
}

std::pair<int, int> pair_from_index(std::size_t index, int n) {
  if (index >= pair_count(n)) {
    throw ArgumentError("pair index " + std::to_string(index) + " out of range for n = " +
                        std::to_string(n));
  }
  int i = 1;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++i;
  }
  return {i, i + 1 + static_cast<int>(index)};
}

}  // namespace rgg
