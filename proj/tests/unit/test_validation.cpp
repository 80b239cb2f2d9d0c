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

#include "rgg/connection.hpp"
#include "rgg/validation.hpp"

using namespace rgg;

TEST_SUITE("validation") {
  TEST_CASE("support test for histogram cells") {
    CHECK(cell_meets_support(0, 0, 0, 10));
    CHECK(cell_meets_support(2, 3, 6, 10));
    CHECK_FALSE(cell_meets_support(0, 0, 2, 10));
    CHECK_FALSE(cell_meets_support(1, 2, 5, 10));
    CHECK(cell_meets_support(1, 2, 4, 10));
  }

  TEST_CASE("cell probabilities of a coarse grid sum to one") {
    QuadratureSettings s;
    s.abs_tol = 1e-9;
    s.rel_tol = 1e-6;
    const auto p = cell_probabilities3(4, DiskDomain(1.0), s);
    double total = 0.0;
    for (double x : p) total += x;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(p[(0 * 4 + 1) * 4 + 3] == p[(3 * 4 + 0) * 4 + 1]);
  }

  TEST_CASE("pair oracle passes") {
    McSettings mc;
    mc.samples = 200000;
    const auto r = validate_pair(DiskDomain(1.0), mc);
    CHECK(r.passed());
    CHECK(r.checks.size() == 2);
  }

  TEST_CASE("three-side oracle passes on a coarse grid") {
    McSettings mc;
    mc.samples = 300000;
    mc.seed = 3;
    const auto r = validate_pdf3(DiskDomain(1.0), mc, 8);
    CHECK(r.passed());
  }

  TEST_CASE("conditioning grid triples are valid") {
    const DiskDomain domain(2.0);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t k = 0; k < 5; ++k) {
          const auto s = conditioning_grid_triple(i, j, k, 5, domain);
          CHECK(triangle_q(s) > 0.0);
          CHECK(s.r23 <= 2.0);
        }
      }
    }
  }

  TEST_CASE("pmf oracle passes and flags a wrong comparison") {
    McSettings mc;
    mc.samples = 200000;
    const auto model = ConnectionModel::hard_disk(0.5);
    CHECK(validate_pmf3(model, DiskDomain(1.0), mc).passed());
    GraphPmf a{2, {0.5, 0.5}, PmfMethod::quadrature, 0.0};
    GraphPmf b{2, {0.4, 0.6}, PmfMethod::monte_carlo, 0.0};
    CHECK(worst_pmf_z(a, b, 10000) > 4.0);
    CHECK(worst_pmf_z(a, a, 10000) == 0.0);
  }

  TEST_CASE("empty report does not pass") { CHECK_FALSE(ValidationReport{}.passed()); }
}
