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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rgg/distances.hpp"
#include "rgg/errors.hpp"
#include "rgg/quadrature.hpp"
#include "rgg/random.hpp"

using namespace rgg;
using rgg::testing::rel_diff;

namespace {

TriangleSides random_sides(std::mt19937_64& gen, double scale) {
  std::uniform_real_distribution<double> u(0.0, scale);
  return {u(gen), u(gen), u(gen)};
}

TriangleSides random_valid(std::mt19937_64& gen, double scale) {
  for (;;) {
    const auto s = random_sides(gen, scale);
    if (triangle_q(s) > 1e-8 * std::pow(scale, 4)) return s;
  }
}

}  // namespace

TEST_SUITE("distances") {
  TEST_CASE("pair pdf: support and domain") {
    const DiskDomain domain(1.0);
    CHECK(pair_pdf(0.0, domain) == 0.0);
    CHECK(pair_pdf(1.0, domain) == 0.0);
    CHECK(pair_pdf(1.5, domain) == 0.0);
    CHECK(pair_pdf(0.5, domain) > 0.0);
    CHECK_THROWS_AS(pair_pdf(-0.1, domain), DomainError);
  }

  TEST_CASE("pair pdf moments match the known disk values") {
    // For two uniform points in a disk of radius R: E[r] = 128 R / (45 pi), E[r^2] = R^2.
    const DiskDomain domain(3.0);
    const double radius = 1.5;
    QuadratureSettings s;
    s.abs_tol = 1e-12;
    auto m1 = [&](const std::array<double, 1>& x) { return x[0] * pair_pdf(x[0], domain); };
    auto m2 = [&](const std::array<double, 1>& x) { return x[0] * x[0] * pair_pdf(x[0], domain); };
    CHECK(rel_diff(integrate<1>(m1, Box<1>{{0.0}, {3.0}}, s).value, 128.0 * radius / (45.0 * std::numbers::pi)) <
          1e-10);
    CHECK(rel_diff(integrate<1>(m2, Box<1>{{0.0}, {3.0}}, s).value, radius * radius) < 1e-10);
  }

  TEST_CASE("joint pdf is exactly invariant under side permutations") {
    std::mt19937_64 gen(21);
    const DiskDomain domain(1.0);
    for (int i = 0; i < 2000; ++i) {
      const auto s = random_sides(gen, 1.0);
      const double ref = joint_pdf3(s, domain).density;
      const auto tag = joint_pdf3(s, domain).branch;
      for (const TriangleSides& p : {TriangleSides{s.r13, s.r12, s.r23}, TriangleSides{s.r23, s.r13, s.r12},
                                     TriangleSides{s.r12, s.r23, s.r13}, TriangleSides{s.r13, s.r23, s.r12},
                                     TriangleSides{s.r23, s.r12, s.r13}}) {
        CHECK(joint_pdf3(p, domain).density == ref);
        CHECK(joint_pdf3(p, domain).branch == tag);
      }
    }
  }

  TEST_CASE("joint pdf is nonnegative and scales as length^-3") {
    std::mt19937_64 gen(22);
    const DiskDomain unit(1.0);
    for (double lambda : {0.25, 2.0, 7.5}) {
      const DiskDomain scaled(lambda);
      for (int i = 0; i < 500; ++i) {
        const auto s = random_sides(gen, 1.0);
        const double base = joint_pdf3(s, unit).density;
        CHECK(base >= 0.0);
        const double v = joint_pdf3({lambda * s.r12, lambda * s.r13, lambda * s.r23}, scaled).density;
        CHECK(rel_diff(v, base / (lambda * lambda * lambda)) <= 1e-12);
      }
    }
  }

  TEST_CASE("case tags") {
    const DiskDomain domain(1.0);
    CHECK(joint_pdf3({0.5, 0.5, 0.5}, domain).branch == JointPdfCase::acute_inscribed);
    CHECK(joint_pdf3({0.3, 0.4, 0.6}, domain).branch == JointPdfCase::obtuse_inscribed);
    // d = 2 abc / sqrt(Q) > 1 with an obtuse angle
    CHECK(joint_pdf3({0.5, 0.5, 0.95}, domain).branch == JointPdfCase::obtuse_outscribed);
    CHECK(joint_pdf3({0.5, 0.5, 0.95}, domain).density > 0.0);
    // equilateral with d = 0.9 * 2 / sqrt(3) > 1
    const auto eq = joint_pdf3({0.9, 0.9, 0.9}, domain);
    CHECK(eq.branch == JointPdfCase::zero);
    CHECK(eq.density == 0.0);
    const auto out = joint_pdf3({0.3, 0.3, 0.9}, domain);
    CHECK(out.branch == JointPdfCase::outside_support);
    CHECK(out.density == 0.0);
    CHECK(joint_pdf3({0.2, 0.3, 0.5}, domain).density == 0.0);  // Q = 0
    CHECK(joint_pdf3({1.1, 0.6, 0.6}, domain).density == 0.0);  // longest side beyond D
    CHECK(to_string(JointPdfCase::outside_support) == "zero_support");
    CHECK(to_string(JointPdfCase::acute_inscribed) == "acute_inscribed");
    CHECK_THROWS_AS(joint_pdf3({-0.1, 0.5, 0.5}, domain), DomainError);
  }

  TEST_CASE("equilateral value matches the closed form written out") {
    // a = 0.5, D = 1: d = a 2/sqrt(3), acute, inscribed.
    const double a = 0.5, d = 2.0 * a / std::sqrt(3.0);
    auto ph = [](double x) { return std::acos(x) - x * std::sqrt(1.0 - x * x); };
    const double expected = 64.0 * d / (std::numbers::pi * std::numbers::pi) *
                            (3.0 * (ph(a) - d * d * ph(a / d)) - std::numbers::pi / 2.0 * (1.0 - d * d));
    CHECK(rel_diff(joint_pdf3({a, a, a}, DiskDomain(1.0)).density, expected) < 1e-14);
  }

  TEST_CASE("branches agree on the obtuse d = D boundary") {
    std::mt19937_64 gen(23);
    const DiskDomain domain(1.0);
    int tested = 0;
    while (tested < 100) {
      const auto s = random_valid(gen, 1.0);
      const auto t = triangle_quantities(s);
      if (t.shape != TriangleShape::obtuse) continue;
      const double k = 1.0 / *t.circumdiameter;
      const TriangleSides b{k * s.r12, k * s.r13, k * s.r23};
      const double inscribed = joint_pdf3_branch(b, domain, JointPdfCase::obtuse_inscribed);
      const double outscribed = joint_pdf3_branch(b, domain, JointPdfCase::obtuse_outscribed);
      CHECK(rel_diff(inscribed, outscribed) <= 1e-9);
      ++tested;
    }
  }

  TEST_CASE("branches agree on right triangles") {
    std::mt19937_64 gen(24);
    std::uniform_real_distribution<double> u(0.01, 0.7);
    const DiskDomain domain(1.0);
    int tested = 0;
    while (tested < 100) {
      const double a = u(gen), b = u(gen), c = std::hypot(a, b);
      if (c > 1.0) continue;
      const TriangleSides s{a, c, b};
      const double obtuse = joint_pdf3_branch(s, domain, JointPdfCase::obtuse_inscribed);
      const double acute = joint_pdf3_branch(s, domain, JointPdfCase::acute_inscribed);
      CHECK(rel_diff(obtuse, acute) <= 1e-9);
      ++tested;
    }
  }

  TEST_CASE("on-circle pair pdf matches the arc construction and normalizes") {
    for (double s : {0.3, 1.0, 2.5}) {
      for (double f : {0.01, 0.2, 0.5, 0.77, 0.99}) {
        CHECK(rel_diff(pair_pdf_on_circle(f * s, s), rgg::testing::on_circle_distance_pdf(f * s, s)) < 1e-13);
      }
      auto g = [s](const std::array<double, 1>& x) { return pair_pdf_on_circle(x[0], s); };
      CHECK(integrate<1>(g, Box<1>{{0.0}, {s}}, {}).value == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  TEST_CASE("angle pdf matches the box convolution and the sampled difference") {
    std::mt19937_64 gen(25);
    std::uniform_real_distribution<double> w(0.01, std::numbers::pi / 2 - 0.01);
    for (int i = 0; i < 200; ++i) {
      const double a = w(gen), b = w(gen);
      std::uniform_real_distribution<double> t(-(a + b) * 1.2, (a + b) * 1.2);
      const double theta = t(gen);
      CHECK(std::abs(angle_pdf_trapezoid(theta, a, b) - rgg::testing::box_difference_pdf(theta, a, b)) < 1e-13);
    }
    // Sampled check at one shape: fraction of |U - V| < 0.4.
    const double a = 0.9, b = 0.5;
    RandomStream rng(5, 0);
    int hits = 0;
    constexpr int kN = 200000;
    for (int i = 0; i < kN; ++i) {
      const double u = a * (2 * rng.uniform() - 1), v = b * (2 * rng.uniform() - 1);
      if (std::abs(u - v) < 0.4) ++hits;
    }
    auto f = [&](const std::array<double, 1>& x) { return angle_pdf_trapezoid(x[0], a, b); };
    QuadratureSettings s;
    s.breakpoints = {{a - b}};
    const double p = 2.0 * integrate<1>(f, Box<1>{{0.0}, {0.4}}, s).value;
    CHECK(std::abs(hits / double(kN) - p) < 4.0 * std::sqrt(p * (1 - p) / kN));
    CHECK_THROWS_AS(angle_pdf_trapezoid(0.1, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(angle_pdf_trapezoid(0.1, 0.5, 2.0), DomainError);
  }

  TEST_CASE("largest enclosing diameter density") {
    const DiskDomain domain(2.0);
    auto f = [&](const std::array<double, 1>& x) { return sbar_pdf(x[0], domain); };
    CHECK(integrate<1>(f, Box<1>{{0.0}, {2.0}}, {}).value == doctest::Approx(1.0).epsilon(1e-12));
    // The largest of three uniform radii: P(2 max rho <= s) = (s/D)^6.
    RandomStream rng(6, 0);
    int below = 0;
    constexpr int kN = 100000;
    for (int i = 0; i < kN; ++i) {
      double m = 0.0;
      for (int k = 0; k < 3; ++k) {
        const auto p = sample_point_in_disk(domain, rng);
        m = std::max(m, 2.0 * std::hypot(p.x, p.y));
      }
      if (m <= 1.6) ++below;
    }
    const double p = integrate<1>(f, Box<1>{{0.0}, {1.6}}, {}).value;
    CHECK(p == doctest::Approx(std::pow(0.8, 6)).epsilon(1e-12));
    CHECK(std::abs(below / double(kN) - p) < 4.0 * std::sqrt(p * (1 - p) / kN));
    CHECK_THROWS_AS(sbar_pdf(2.5, domain), DomainError);
    CHECK_THROWS_AS(sbar_pdf(-0.5, domain), DomainError);
  }

  TEST_CASE("conditional pdf matches the vertex-on-circle construction") {
    std::mt19937_64 gen(26);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    int compared = 0;
    for (int i = 0; i < 3000; ++i) {
      const double s = u(gen);
      const auto sides = random_valid(gen, s);
      const double lib = conditional_joint_pdf3(sides, ConditionalContext(s));
      const double ref = rgg::testing::conditional_sides_pdf(sides.r12, sides.r13, sides.r23, s);
      CHECK(std::abs(lib - ref) <= 1e-10 * std::max(1.0, std::abs(ref)) / (s * s * s));
      if (ref > 0.0) ++compared;
    }
    CHECK(compared > 1000);
    CHECK_THROWS_AS(ConditionalContext(0.0), DomainError);
  }

  TEST_CASE("conditioning route reproduces the closed form") {
    std::mt19937_64 gen(27);
    const DiskDomain domain(1.0);
    for (int i = 0; i < 60; ++i) {
      const auto s = random_valid(gen, 1.0);
      const double closed = joint_pdf3(s, domain).density;
      const auto via = joint_pdf3_via_conditioning(s, domain);
      CHECK(rel_diff(closed, via.value) <= 1e-6);
    }
  }
}
