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

#include "rgg/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rgg/distances.hpp"
#include "rgg/triangle_integrals.hpp"

namespace rgg {
namespace {

std::string describe(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  bool first = true;
  for (const auto& [k, v] : items) {
    if (!first) os << ' ';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

bool ValidationReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

bool cell_meets_support(std::size_t i, std::size_t j, std::size_t k, std::size_t bins) {
  (void)bins;
  // Cell [i, i+1) x [j, j+1) x [k, k+1) in bin units: some point satisfies
  // all three strict triangle inequalities iff each lower edge is below the
  // sum of the other two upper edges.
  const double a0 = static_cast<double>(i), b0 = static_cast<double>(j), c0 = static_cast<double>(k);
  return a0 < b0 + c0 + 2.0 && b0 < a0 + c0 + 2.0 && c0 < a0 + b0 + 2.0;
}

std::vector<double> cell_probabilities3(std::size_t bins, const DiskDomain& domain,
                                        const QuadratureSettings& settings) {
  const double w = domain.diameter() / static_cast<double>(bins);
  std::vector<double> probs(bins * bins * bins, 0.0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> double& {
    return probs[(i * bins + j) * bins + k];
  };
  for (std::size_t i = 0; i < bins; ++i) {
    for (std::size_t j = i; j < bins; ++j) {
      for (std::size_t k = j; k < bins; ++k) {
        if (!cell_meets_support(i, j, k, bins)) continue;
        const SideBox box{{i * w, j * w, k * w}, {(i + 1) * w, (j + 1) * w, (k + 1) * w}};
        const auto r = joint_pdf3_mass(domain, box, settings);
        const double p = std::max(r.value, 0.0);
        const std::size_t idx[3] = {i, j, k};
        std::size_t perm[3] = {0, 1, 2};
        do {
          at(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = p;
        } while (std::next_permutation(perm, perm + 3));
      }
    }
  }
  return probs;
}

HistogramComparison compare_histogram3(const Histogram3& h, std::span<const double> cell_probabilities,
                                       double min_expected, double z) {
  HistogramComparison out;
  const double total = static_cast<double>(h.total);
  for (std::size_t i = 0; i < h.bins; ++i) {
    for (std::size_t j = 0; j < h.bins; ++j) {
      for (std::size_t k = 0; k < h.bins; ++k) {
        const std::size_t idx = h.index(i, j, k);
        const double observed = static_cast<double>(h.counts[idx]);
        if (!cell_meets_support(i, j, k, h.bins) && observed > 0.0) ++out.stray_cells;
        const double expected = total * cell_probabilities[idx];
        if (expected < min_expected) continue;
        ++out.compared_cells;
        const double dev = std::abs(observed - expected) / std::sqrt(expected);
        out.worst_z = std::max(out.worst_z, dev);
        if (dev <= z) ++out.passing_cells;
      }
    }
  }
  return out;
}

double worst_pmf_z(const GraphPmf& exact, const GraphPmf& sampled, std::uint64_t samples) {
  double worst = 0.0;
  const double n = static_cast<double>(samples);
  for (std::size_t c = 0; c < exact.probs.size(); ++c) {
    const double p = exact.probs[c];
    const double diff = std::abs(sampled.probs.at(c) - p);
    const double se = std::sqrt(p * (1.0 - p) / n);
    if (se > 0.0) {
      worst = std::max(worst, diff / se);
    } else if (diff > 0.0) {
      // A point mass in the exact pmf can only be matched exactly.
      worst = std::max(worst, diff * std::sqrt(n) > 1e-6 ? std::numeric_limits<double>::infinity() : 0.0);
    }
  }
  return worst;
}

ValidationReport validate_pdf3(const DiskDomain& domain, const McSettings& mc, std::size_t bins) {
  ValidationReport report{"pdf3", {}};
  const auto hist = distance_histogram3(domain, mc, bins);
  QuadratureSettings quad;
  quad.abs_tol = 1e-9;
  quad.rel_tol = 1e-5;
  quad.max_subdivisions = 2000;
  const auto probs = cell_probabilities3(bins, domain, quad);
  const auto cmp = compare_histogram3(hist, probs);

  report.checks.push_back({"cells_within_4_sigma", cmp.compared_cells > 0 && cmp.pass_fraction() >= 0.99,
                           cmp.pass_fraction(), 0.99,
                           describe({{"compared_cells", double(cmp.compared_cells)},
                                     {"passing_cells", double(cmp.passing_cells)},
                                     {"worst_z", cmp.worst_z}})});
  report.checks.push_back({"no_mass_outside_support", cmp.stray_cells == 0, double(cmp.stray_cells), 0.0,
                           describe({{"stray_cells", double(cmp.stray_cells)}})});
  double total_prob = 0.0;
  for (double p : probs) total_prob += p;
  report.checks.push_back({"cell_probabilities_sum_to_one", std::abs(total_prob - 1.0) <= 1e-3,
                           std::abs(total_prob - 1.0), 1e-3, describe({{"sum", total_prob}})});
  return report;
}

ValidationReport validate_pair(const DiskDomain& domain, const McSettings& mc, std::size_t bins) {
  ValidationReport report{"pair", {}};
  QuadratureSettings quad;
  quad.abs_tol = 1e-12;
  quad.rel_tol = 1e-12;
  const double diameter = domain.diameter();
  auto f = [&](const std::array<double, 1>& r) { return pair_pdf(r[0], domain); };
  const auto norm = integrate<1>(f, Box<1>{{0.0}, {diameter}}, quad);
  report.checks.push_back({"normalization", std::abs(norm.value - 1.0) <= 1e-9, std::abs(norm.value - 1.0),
                           1e-9, describe({{"integral", norm.value}})});

  const auto hist = pair_distance_histogram(domain, mc, bins);
  const double n = static_cast<double>(hist.total);
  const double w = diameter / static_cast<double>(bins);
  double worst = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    const auto p = integrate<1>(f, Box<1>{{b * w}, {(b + 1) * w}}, quad).value;
    const double sigma = std::sqrt(n * p * (1.0 - p));
    const double diff = std::abs(static_cast<double>(hist.counts[b]) - n * p);
    worst = std::max(worst, sigma > 0.0 ? diff / sigma : (diff > 0.0 ? 1e300 : 0.0));
  }
  report.checks.push_back({"bins_within_4_sigma", worst <= 4.0, worst, 4.0,
                           describe({{"bins", double(bins)}, {"samples", n}})});
  return report;
}

TriangleSides conditioning_grid_triple(std::size_t i, std::size_t j, std::size_t k, std::size_t grid,
                                       const DiskDomain& domain) {
  const double diameter = domain.diameter();
  const double g = static_cast<double>(grid);
  const double a = diameter * (static_cast<double>(i) + 0.5) / g;
  const double b = diameter * (static_cast<double>(j) + 0.5) / g;
  const double lo = std::abs(a - b);
  const double hi = std::min(a + b, diameter);
  const double c = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / g;
  return {a, b, c};
}

ValidationReport validate_condpdf(const DiskDomain& domain, std::size_t grid, double rel_tol) {
  ValidationReport report{"condpdf", {}};
  double worst = 0.0;
  std::size_t compared = 0, both_zero = 0;
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      for (std::size_t k = 0; k < grid; ++k) {
        const auto sides = conditioning_grid_triple(i, j, k, grid, domain);
        const double closed = joint_pdf3(sides, domain).density;
        const double via = joint_pdf3_via_conditioning(sides, domain).value;
        if (closed == 0.0 && via == 0.0) {
          ++both_zero;
          continue;
        }
        ++compared;
        const double rel = std::abs(closed - via) / std::max(std::abs(closed), std::abs(via));
        worst = std::max(worst, rel);
      }
    }
  }
  report.checks.push_back({"conditioning_matches_closed_form", worst <= rel_tol, worst, rel_tol,
                           describe({{"triples", double(compared + both_zero)},
                                     {"both_zero", double(both_zero)}})});
  return report;
}

ValidationReport validate_pmf3(const ConnectionModel& model, const DiskDomain& domain, const McSettings& mc,
                               const QuadratureSettings& quad) {
  ValidationReport report{"pmf3", {}};
  const auto exact = pmf_n3(model, domain, quad);
  const auto sampled = estimate_pmf(3, model, domain, mc);
  const double z = worst_pmf_z(exact, sampled, mc.samples);
  report.checks.push_back({"entries_within_4_sigma", z <= 4.0, z, 4.0,
                           describe({{"samples", double(mc.samples)}})});

  double sum = 0.0;
  for (double p : exact.probs) sum += p;
  report.checks.push_back({"normalization", std::abs(sum - 1.0) <= 1e-6, std::abs(sum - 1.0), 1e-6,
                           describe({{"sum", sum}})});

  // Relabeling nodes permutes the three pair slots; one-edge and two-edge
  // outcomes form the two nontrivial orbits.
  double asym = 0.0;
  for (const auto& orbit : {std::array<int, 3>{1, 2, 4}, std::array<int, 3>{3, 5, 6}}) {
    const auto [lo, hi] = std::minmax({exact.probs[orbit[0]], exact.probs[orbit[1]], exact.probs[orbit[2]]});
    asym = std::max(asym, hi - lo);
  }
  report.checks.push_back({"relabeling_symmetry", asym <= exact.error_estimate, asym, exact.error_estimate,
                           describe({{"error_estimate", exact.error_estimate}})});
  return report;
}

}  // namespace rgg
