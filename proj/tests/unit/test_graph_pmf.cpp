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
#include <vector>

#include "rgg/connection.hpp"
#include "rgg/errors.hpp"
#include "rgg/graph_pmf.hpp"
#include "rgg/monte_carlo.hpp"

using namespace rgg;

namespace {

double sum(const GraphPmf& pmf) {
  double s = 0.0;
  for (double p : pmf.probs) s += p;
  return s;
}

// Largest difference between entries that node relabeling maps onto each other.
double relabel_asymmetry(const GraphPmf& pmf) {
  std::array<int, 3> perm{1, 2, 3};
  double worst = 0.0;
  do {
    for (std::uint64_t c = 0; c < 8; ++c) {
      worst = std::max(worst, std::abs(pmf.probs[c] - pmf.probs[relabel(3, c, perm)]));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return worst;
}

// Every entry of the sampled pmf within 4 standard errors of the quadrature pmf.
void check_against_sampling(const GraphPmf& exact, const ConnectionModel& model, const DiskDomain& domain) {
  McSettings mc;
  mc.samples = 1'000'000;
  mc.seed = 77;
  const auto est = estimate_pmf(exact.n, model, domain, mc);
  for (std::size_t c = 0; c < exact.probs.size(); ++c) {
    const double p = exact.probs[c];
    const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / static_cast<double>(mc.samples));
    CHECK_MESSAGE(std::abs(est.probs[c] - p) <= 4 * se + exact.error_estimate,
                  model.describe(), " outcome ", c, " exact ", p, " sampled ", est.probs[c]);
  }
}

}  // namespace

TEST_SUITE("graph_pmf") {
  TEST_CASE("edge vector coding") {
    const auto e = EdgeVector::from_code(4, 0b100101);
    CHECK(e.size() == 6);
    CHECK(e.code() == 0b100101);
    CHECK(e.has_edge(1, 2));
    CHECK(e.has_edge(2, 1));
    CHECK_FALSE(e.has_edge(1, 3));
    CHECK(e.has_edge(1, 4));        // pair index 2
    CHECK_FALSE(e.has_edge(2, 3));  // pair index 3
    CHECK(e.has_edge(3, 4));        // pair index 5
    CHECK(EdgeVector(3, {1, 0, 1}).code() == 0b101);
    CHECK_THROWS_AS(EdgeVector(3, {1, 0}), ArgumentError);
    CHECK_THROWS_AS(EdgeVector::from_code(3, 8), ArgumentError);
  }

  TEST_CASE("connectivity of small graphs") {
    CHECK(is_connected(1, 0));
    CHECK_FALSE(is_connected(2, 0));
    CHECK(is_connected(2, 1));
    CHECK_FALSE(is_connected(3, 0b001));
    CHECK(is_connected(3, 0b011));
    CHECK(is_connected(3, 0b110));
    CHECK(is_connected(3, 0b111));
    // path 1-2-3-4: pairs (1,2)=0, (2,3)=3, (3,4)=5
    CHECK(is_connected(4, (1u << 0) | (1u << 3) | (1u << 5)));
    CHECK_FALSE(is_connected(4, (1u << 0) | (1u << 5)));
  }

  TEST_CASE("relabel") {
    const std::array<int, 3> swap12{2, 1, 3};
    CHECK(relabel(3, 0b001, swap12) == 0b001);  // (1,2) stays
    CHECK(relabel(3, 0b010, swap12) == 0b100);  // (1,3) -> (2,3)
    const std::array<int, 2> bad{1, 2};
    CHECK_THROWS_AS(relabel(3, 1, bad), ArgumentError);
  }

  TEST_CASE("entropy") {
    CHECK(entropy_bits(std::vector<double>(8, 0.125)) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(entropy_bits(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(entropy_bits(std::vector<double>{0.0, 1.0, 0.0}) == 0.0);
    CHECK(entropy_bits(std::vector<double>{1e-10, 1.0 - 1e-10}) > 0.0);
  }

  TEST_CASE("two nodes: hard disk, soft and tabulated against sampling") {
    const DiskDomain domain(1.0);
    for (const auto& m : {ConnectionModel::hard_disk(0.35), ConnectionModel::exponential_soft(0.3, 2.0),
                          ConnectionModel::tabulated({{0.0, 0.9}, {0.5, 0.4}, {0.8, 0.0}})}) {
      const auto pmf = pmf_n2(m, domain);
      CHECK(pmf.n == 2);
      CHECK(std::abs(sum(pmf) - 1.0) <= 1e-6);
      check_against_sampling(pmf, m, domain);
    }
  }

  TEST_CASE("three nodes against sampling") {
    const DiskDomain domain(1.0);
    for (const auto& m : {ConnectionModel::hard_disk(0.4), ConnectionModel::exponential_soft(0.35, 1.5),
                          ConnectionModel::tabulated({{0.1, 1.0}, {0.4, 0.6}, {0.7, 0.1}})}) {
      const auto pmf = pmf_n3(m, domain);
      CHECK(pmf.method == PmfMethod::quadrature);
      CHECK(std::abs(sum(pmf) - 1.0) <= 1e-6);
      CHECK(relabel_asymmetry(pmf) <= pmf.error_estimate);
      check_against_sampling(pmf, m, domain);
    }
  }

  TEST_CASE("extreme ranges give deterministic graphs") {
    const DiskDomain domain(1.0);
    const auto none = pmf_n3(ConnectionModel::hard_disk(0.0), domain);
    CHECK(none.probs[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(entropy(none) < 1e-6);
    const auto all = pmf_n3(ConnectionModel::hard_disk(1.0), domain);
    CHECK(prob_complete(all) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(prob_connected(all) == doctest::Approx(1.0).epsilon(1e-6));
    const auto two = pmf_n2(ConnectionModel::hard_disk(2.0), domain);
    CHECK(two.probs[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(two) <= 1e-9);
    const auto never = pmf_n3(ConnectionModel::tabulated({{0.0, 0.0}, {0.5, 0.0}}), domain);
    CHECK(never.probs[0] == 1.0);
    CHECK(never.error_estimate == 0.0);
  }

  TEST_CASE("connectivity is ordered and nondecreasing in the range") {
    const DiskDomain domain(1.0);
    double last_conn = 0.0, last_comp = 0.0;
    for (double r0 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const auto pmf = pmf_n3(ConnectionModel::hard_disk(r0), domain);
      const double conn = prob_connected(pmf), comp = prob_complete(pmf);
      CHECK(comp <= conn);
      CHECK(conn <= 1.0);
      CHECK(conn >= last_conn - pmf.error_estimate);
      CHECK(comp >= last_comp - pmf.error_estimate);
      last_conn = conn;
      last_comp = comp;
    }
  }

  TEST_CASE("larger graphs need sampling") {
    const DiskDomain domain(1.0);
    CHECK_THROWS_AS(exact_pmf(4, ConnectionModel::hard_disk(0.3), domain), UnsupportedError);
    CHECK_NOTHROW(exact_pmf(2, ConnectionModel::hard_disk(0.3), domain));
  }
}
