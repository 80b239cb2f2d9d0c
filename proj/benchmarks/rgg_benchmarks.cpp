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


#include <cmath>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "rgg/connection.hpp"
#include "rgg/distances.hpp"
#include "rgg/geometry.hpp"
#include "rgg/graph_pmf.hpp"
#include "rgg/monte_carlo.hpp"
#include "rgg/random.hpp"
#include "rgg/triangle_integrals.hpp"

namespace {

using namespace rgg;

void BM_JointPdf3(benchmark::State& state) {
  const DiskDomain domain(1.0);
  RandomStream rng(1);
  std::vector<TriangleSides> sides(1024);
  for (auto& s : sides) s = {rng.uniform(), rng.uniform(), rng.uniform()};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(joint_pdf3(sides[i++ & 1023], domain));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_JointPdf3);

void BM_JointPdf3Mass(benchmark::State& state) {
  const DiskDomain domain(1.0);
  QuadratureSettings q;
  q.abs_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  q.rel_tol = 0.0;
  q.max_subdivisions = 5000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(joint_pdf3_mass(domain, SideBox::full(domain), q));
  }
}
BENCHMARK(BM_JointPdf3Mass)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PmfN3(benchmark::State& state) {
  const DiskDomain domain(1.0);
  const auto model = ConnectionModel::hard_disk(static_cast<double>(state.range(0)) / 100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmf_n3(model, domain));
  }
}
BENCHMARK(BM_PmfN3)->Arg(10)->Arg(35)->Arg(60)->Arg(85)->Unit(benchmark::kMillisecond);

void BM_SampleGraph(benchmark::State& state) {
  const DiskDomain domain(1.0);
  const auto model = ConnectionModel::hard_disk(0.4);
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_graph(n, model, domain, rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleGraph)->Arg(3)->Arg(5)->Arg(8);

void BM_EstimatePmf(benchmark::State& state) {
  const DiskDomain domain(1.0);
  const auto model = ConnectionModel::hard_disk(0.4);
  McSettings mc;
  mc.samples = 1'000'000;
  mc.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_pmf(5, model, domain, mc));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mc.samples));
}
BENCHMARK(BM_EstimatePmf)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
