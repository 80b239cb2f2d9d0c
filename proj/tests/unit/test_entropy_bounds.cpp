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

#include <map>

#include "rgg/entropy_bounds.hpp"
#include "rgg/errors.hpp"

using namespace rgg;

TEST_SUITE("entropy_bounds") {
  TEST_CASE("known factors") {
    CHECK(shearer_factor(5, 3) == Rational(10, 3));
    CHECK(shearer_factor(5, 2) == Rational(10));
    CHECK(shearer_factor(4, 3) == Rational(2));
    CHECK(shearer_factor(3, 2) == Rational(3));
  }

  TEST_CASE("factor times m(m-1) is n(n-1), and equals the binomial ratio") {
    for (int n = 3; n <= 40; ++n) {
      for (int m = 2; m < n; ++m) {
        const auto f = shearer_factor(n, m);
        CHECK(f * Rational(m * (m - 1)) == Rational(n * (n - 1)));
        CHECK(f == shearer_factor_binomial(n, m));
      }
    }
  }

  TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(shearer_factor(5, 5), ArgumentError);
    CHECK_THROWS_AS(shearer_factor(5, 1), ArgumentError);
    CHECK_THROWS_AS(shearer_factor(3, 4), ArgumentError);
    CHECK_THROWS_AS(bound_chain(5, {{3, {2.0, EntropySource::quadrature}}}), ArgumentError);
    CHECK_THROWS_AS(bound_chain(1, {{2, {1.0, EntropySource::quadrature}}}), ArgumentError);
  }

  TEST_CASE("chain for five nodes") {
    const std::map<int, EntropyInput> h{{2, {0.9, EntropySource::quadrature}},
                                        {3, {2.5, EntropySource::quadrature}},
                                        {5, {7.0, EntropySource::monte_carlo}}};
    const auto chain = bound_chain(5, h);
    REQUIRE(chain.entries.size() == 3);
    CHECK(chain.entries[0].m == 5);
    CHECK(chain.entries[0].bound_on_h_n_bits == 7.0);
    CHECK(chain.entries[1].m == 3);
    CHECK(chain.entries[1].bound_on_h_n_bits == doctest::Approx(25.0 / 3.0));
    CHECK(chain.entries[2].bound_on_h_n_bits == doctest::Approx(9.0));
    CHECK(chain.tightest() == 7.0);
    CHECK(chain.warnings.empty());
    CHECK(to_string(chain.entries[0].source) == "monte_carlo");
  }

  TEST_CASE("increasing per-edge entropy is flagged") {
    const std::map<int, EntropyInput> h{{2, {0.5, EntropySource::quadrature}},
                                        {3, {1.8, EntropySource::quadrature}}};
    const auto chain = bound_chain(3, h);
    CHECK(chain.warnings.size() == 1);
    CHECK(bound_chain(3, h, 0.2).warnings.empty());
  }
}
