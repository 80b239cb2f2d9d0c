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

#include "rgg/monte_carlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "rgg/errors.hpp"

namespace rgg {
namespace {

/// Runs body(worker, samples_for_worker, stream) on each worker and returns
/// the per-worker accumulators in worker order.
template <class Acc, class Make, class Body>
std::vector<Acc> run_workers(const McSettings& mc, Make make, Body body) {
  mc.validate();
  const unsigned workers = mc.workers;
  std::vector<Acc> acc;
  acc.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) acc.push_back(make());
  auto share = [&](unsigned w) {
    const std::uint64_t base = mc.samples / workers;
    return base + (w < mc.samples % workers ? 1 : 0);
  };
  if (workers == 1) {
    RandomStream rng(mc.seed, 0);
    body(acc[0], share(0), rng);
    return acc;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      RandomStream rng(mc.seed, w);
      body(acc[w], share(w), rng);
    });
  }
  for (auto& t : threads) t.join();
  return acc;
}

std::size_t bin_of(double r, double diameter, std::size_t bins) {
  const auto b = static_cast<std::size_t>(r / diameter * static_cast<double>(bins));
  return std::min(b, bins - 1);
}

}  // namespace

void McSettings::validate() const {
  if (samples < 1) throw ArgumentError("Monte Carlo samples must be >= 1");
  if (workers < 1) throw ArgumentError("Monte Carlo workers must be >= 1");
}

namespace {

std::uint64_t sample_code(int n, const ConnectionModel& model, const DiskDomain& domain,
                          RandomStream& rng, std::vector<Point2D>& points) {
  for (int i = 0; i < n; ++i) points[static_cast<std::size_t>(i)] = sample_point_in_disk(domain, rng);
  std::uint64_t code = 0;
  unsigned k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const double r = distance(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      if (sample_edge(model, r, rng)) code |= std::uint64_t{1} << k;
    }
  }
  return code;
}

}  // namespace

EdgeVector sample_graph(int n, const ConnectionModel& model, const DiskDomain& domain, RandomStream& rng) {
  if (n < 2) throw ArgumentError("sample_graph: n must be >= 2");
  if (pair_count(n) > kMaxCodedEdges) throw UnsupportedError("sample_graph: too many pairs");
  std::vector<Point2D> points(static_cast<std::size_t>(n));
  return EdgeVector::from_code(n, sample_code(n, model, domain, rng, points));
}

OutcomeCounts sample_outcomes(int n, const ConnectionModel& model, const DiskDomain& domain,
                              const McSettings& mc) {
  if (n < 2) throw ArgumentError("Monte Carlo estimation needs n >= 2");
  const std::size_t edges = pair_count(n);
  if (edges > kMaxEstimatedEdges) {
    throw UnsupportedError("outcome space too large: n(n-1)/2 = " + std::to_string(edges) +
                           " exceeds " + std::to_string(kMaxEstimatedEdges));
  }
  const std::size_t outcomes = std::size_t{1} << edges;
  auto per_worker = run_workers<std::vector<std::uint64_t>>(
      mc, [&] { return std::vector<std::uint64_t>(outcomes, 0); },
      [&](std::vector<std::uint64_t>& counts, std::uint64_t samples, RandomStream& rng) {
        std::vector<Point2D> points(static_cast<std::size_t>(n));
        for (std::uint64_t s = 0; s < samples; ++s) ++counts[sample_code(n, model, domain, rng, points)];
      });
  OutcomeCounts out{n, std::vector<std::uint64_t>(outcomes, 0), mc.samples};
  for (const auto& counts : per_worker) {
    for (std::size_t c = 0; c < outcomes; ++c) out.counts[c] += counts[c];
  }
  return out;
}

GraphPmf pmf_from_counts(const OutcomeCounts& counts) {
  GraphPmf pmf;
  pmf.n = counts.n;
  pmf.method = PmfMethod::monte_carlo;
  pmf.probs.resize(counts.counts.size());
  const double total = static_cast<double>(counts.total);
  double worst = 0.0;
  for (std::size_t c = 0; c < counts.counts.size(); ++c) {
    const double p = static_cast<double>(counts.counts[c]) / total;
    pmf.probs[c] = p;
    worst = std::max(worst, std::sqrt(p * (1.0 - p) / total));
  }
  pmf.error_estimate = worst;
  return pmf;
}

GraphPmf estimate_pmf(int n, const ConnectionModel& model, const DiskDomain& domain, const McSettings& mc) {
  return pmf_from_counts(sample_outcomes(n, model, domain, mc));
}

namespace {

double entropy_of_counts(std::span<const std::uint64_t> counts, std::uint64_t total, bool miller_madow) {
  const double n = static_cast<double>(total);
  double h = 0.0;
  std::size_t observed = 0;
  for (auto c : counts) {
    if (c == 0) continue;
    ++observed;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  h = std::max(h, 0.0);
  if (miller_madow) h += static_cast<double>(observed - 1) / (2.0 * n * std::numbers::ln2);
  return h;
}

}  // namespace

EntropyEstimate entropy_from_counts(const OutcomeCounts& counts, std::uint64_t seed,
                                    const EntropyOptions& options) {
  EntropyEstimate est;
  if (counts.total == 0) throw ArgumentError("entropy_from_counts: no samples");
  est.plug_in_bits = entropy_of_counts(counts.counts, counts.total, false);
  est.entropy_bits = entropy_of_counts(counts.counts, counts.total, options.miller_madow);
  est.observed_outcomes = static_cast<std::size_t>(
      std::count_if(counts.counts.begin(), counts.counts.end(), [](auto c) { return c > 0; }));

  if (options.bootstrap_resamples < 2 || est.observed_outcomes <= 1) return est;

  // Multinomial resampling over the observed outcomes via sequential binomials.
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < counts.counts.size(); ++c) {
    if (counts.counts[c] > 0) support.push_back(c);
  }
  RandomStream rng(seed, kBootstrapStream);
  std::vector<std::uint64_t> resample(support.size());
  double mean = 0.0, m2 = 0.0;
  for (unsigned b = 0; b < options.bootstrap_resamples; ++b) {
    std::uint64_t remaining = counts.total;
    std::uint64_t mass_left = counts.total;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const std::uint64_t c = counts.counts[support[i]];
      if (i + 1 == support.size() || remaining == 0) {
        resample[i] = remaining;
      } else {
        const double p = std::min(1.0, static_cast<double>(c) / static_cast<double>(mass_left));
        std::binomial_distribution<std::uint64_t> draw(remaining, p);
        resample[i] = draw(rng);
      }
      remaining -= resample[i];
      mass_left -= c;
    }
    const double h = entropy_of_counts(resample, counts.total, options.miller_madow);
    const double delta = h - mean;
    mean += delta / (b + 1);
    m2 += delta * (h - mean);
  }
  est.std_error = std::sqrt(m2 / (options.bootstrap_resamples - 1));
  return est;
}

EntropyEstimate estimate_entropy(int n, const ConnectionModel& model, const DiskDomain& domain,
                                 const McSettings& mc, const EntropyOptions& options) {
  return entropy_from_counts(sample_outcomes(n, model, domain, mc), mc.seed, options);
}

double Histogram3::density(std::size_t i, std::size_t j, std::size_t k) const {
  return static_cast<double>(counts.at(index(i, j, k))) / (static_cast<double>(total) * cell_volume());
}

Histogram3 distance_histogram3(const DiskDomain& domain, const McSettings& mc, std::size_t bins, bool canonical) {
  if (bins < 2) throw ArgumentError("distance_histogram3: bins must be >= 2");
  const double diameter = domain.diameter();
  const std::size_t cells = bins * bins * bins;
  auto per_worker = run_workers<std::vector<std::uint64_t>>(
      mc, [&] { return std::vector<std::uint64_t>(cells, 0); },
      [&](std::vector<std::uint64_t>& counts, std::uint64_t samples, RandomStream& rng) {
        for (std::uint64_t s = 0; s < samples; ++s) {
          const Point2D p1 = sample_point_in_disk(domain, rng);
          const Point2D p2 = sample_point_in_disk(domain, rng);
          const Point2D p3 = sample_point_in_disk(domain, rng);
          std::array<double, 3> r{distance(p1, p2), distance(p1, p3), distance(p2, p3)};
          if (canonical) std::sort(r.begin(), r.end());
          const std::size_t i = bin_of(r[0], diameter, bins), j = bin_of(r[1], diameter, bins),
                            k = bin_of(r[2], diameter, bins);
          ++counts[(i * bins + j) * bins + k];
        }
      });
  Histogram3 h;
  h.bins = bins;
  h.diameter = diameter;
  h.canonical = canonical;
  h.total = mc.samples;
  h.counts.assign(cells, 0);
  for (const auto& counts : per_worker) {
    for (std::size_t c = 0; c < cells; ++c) h.counts[c] += counts[c];
  }
  return h;
}

Histogram1 pair_distance_histogram(const DiskDomain& domain, const McSettings& mc, std::size_t bins) {
  if (bins < 1) throw ArgumentError("pair_distance_histogram: bins must be >= 1");
  const double diameter = domain.diameter();
  auto per_worker = run_workers<std::vector<std::uint64_t>>(
      mc, [&] { return std::vector<std::uint64_t>(bins, 0); },
      [&](std::vector<std::uint64_t>& counts, std::uint64_t samples, RandomStream& rng) {
        for (std::uint64_t s = 0; s < samples; ++s) {
          const Point2D a = sample_point_in_disk(domain, rng);
          const Point2D b = sample_point_in_disk(domain, rng);
          ++counts[bin_of(distance(a, b), diameter, bins)];
        }
      });
  Histogram1 h{bins, diameter, std::vector<std::uint64_t>(bins, 0), mc.samples};
  for (const auto& counts : per_worker) {
    for (std::size_t c = 0; c < bins; ++c) h.counts[c] += counts[c];
  }
  return h;
}

}  // namespace rgg
