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

// Sampling estimators: empirical graph pmf and entropy for any small n, and
// side-length histograms used as oracles for the closed-form densities.
//
// Samples are split over `workers` threads. Worker w draws from
// RandomStream(seed, w) and owns its accumulator; accumulators are merged in
// worker order, so results depend only on (samples, seed, workers).

#include <cstdint>
#include <vector>

#include "rgg/connection.hpp"
#include "rgg/geometry.hpp"
#include "rgg/graph_pmf.hpp"

namespace rgg {

struct McSettings {
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;

  void validate() const;
};

/// Largest outcome table the estimators will allocate: 2^20 entries.
inline constexpr std::size_t kMaxEstimatedEdges = 20;

/// Stream id reserved for bootstrap resampling (workers use 0, 1, ...).
inline constexpr std::uint64_t kBootstrapStream = std::uint64_t{1} << 63;

/// n uniform points, all pair distances, one Bernoulli draw per pair.
EdgeVector sample_graph(int n, const ConnectionModel& model, const DiskDomain& domain, RandomStream& rng);

struct OutcomeCounts {
  int n = 0;
  std::vector<std::uint64_t> counts;  ///< indexed by outcome code
  std::uint64_t total = 0;
};

/// Raw outcome frequencies; throws UnsupportedError if n(n-1)/2 > 20.
OutcomeCounts sample_outcomes(int n, const ConnectionModel& model, const DiskDomain& domain,
                              const McSettings& mc);

/// Normalized outcome frequencies; error_estimate is the largest per-entry standard error.
GraphPmf estimate_pmf(int n, const ConnectionModel& model, const DiskDomain& domain, const McSettings& mc);
GraphPmf pmf_from_counts(const OutcomeCounts& counts);

struct EntropyOptions {
  bool miller_madow = true;
  unsigned bootstrap_resamples = 100;
};

struct EntropyEstimate {
  double entropy_bits = 0.0;  ///< plug-in entropy, plus the Miller-Madow term when enabled
  double std_error = 0.0;     ///< bootstrap standard deviation
  double plug_in_bits = 0.0;
  std::size_t observed_outcomes = 0;
};

/// Entropy of the empirical pmf. The bootstrap resamples outcome counts
/// multinomially from RandomStream(seed, kBootstrapStream).
EntropyEstimate entropy_from_counts(const OutcomeCounts& counts, std::uint64_t seed,
                                    const EntropyOptions& options = {});

EntropyEstimate estimate_entropy(int n, const ConnectionModel& model, const DiskDomain& domain,
                                 const McSettings& mc, const EntropyOptions& options = {});

/// Uniform bins-per-axis histogram of sampled (r12, r13, r23) over [0, D]^3.
struct Histogram3 {
  std::size_t bins = 0;
  double diameter = 1.0;
  bool canonical = false;  ///< sides sorted ascending before binning
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * bins + j) * bins + k;
  }
  double width() const noexcept { return diameter / static_cast<double>(bins); }
  double cell_volume() const noexcept { return width() * width() * width(); }
  /// count / (total * cell volume)
  double density(std::size_t i, std::size_t j, std::size_t k) const;
};

Histogram3 distance_histogram3(const DiskDomain& domain, const McSettings& mc, std::size_t bins,
                               bool canonical = false);

/// Histogram of the distance between two sampled points over [0, D].
struct Histogram1 {
  std::size_t bins = 0;
  double diameter = 1.0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

Histogram1 pair_distance_histogram(const DiskDomain& domain, const McSettings& mc, std::size_t bins);

}  // namespace rgg
