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

// Oracle comparisons between the closed-form densities / quadrature pmfs and
// independent sampling estimates. Each returns a report of named checks.

#include <cstddef>
#include <string>
#include <vector>

#include "rgg/connection.hpp"
#include "rgg/geometry.hpp"
#include "rgg/graph_pmf.hpp"
#include "rgg/monte_carlo.hpp"
#include "rgg/quadrature.hpp"

namespace rgg {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double worst_deviation = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::string target;
  std::vector<ValidationCheck> checks;

  bool passed() const;
};

/// Probability of every histogram cell under the three-side pdf, by
/// integrating over the cell (not cell-center x volume: cells cut by the
/// degenerate-triangle rim would be badly overestimated). Permutation
/// symmetry is used to integrate each unordered cell once.
std::vector<double> cell_probabilities3(std::size_t bins, const DiskDomain& domain,
                                        const QuadratureSettings& settings);

/// Whether the cell box contains triples satisfying the triangle inequalities.
bool cell_meets_support(std::size_t i, std::size_t j, std::size_t k, std::size_t bins);

struct HistogramComparison {
  std::size_t compared_cells = 0;  ///< cells with expected count >= min_expected
  std::size_t passing_cells = 0;   ///< of those, |observed - expected| <= z sqrt(expected)
  std::size_t stray_cells = 0;     ///< cells outside the support with nonzero count
  double worst_z = 0.0;            ///< max |observed - expected| / sqrt(expected) over compared cells
  double pass_fraction() const {
    return compared_cells == 0 ? 0.0 : static_cast<double>(passing_cells) / static_cast<double>(compared_cells);
  }
};

HistogramComparison compare_histogram3(const Histogram3& histogram, std::span<const double> cell_probabilities,
                                       double min_expected = 100.0, double z = 4.0);

/// Largest |mc - exact| / sqrt(exact (1 - exact) / N) over pmf entries.
/// Entries with zero variance must agree exactly (z reported as 0 or inf).
double worst_pmf_z(const GraphPmf& exact, const GraphPmf& sampled, std::uint64_t samples);

/// Three-side pdf vs a sampled histogram; passes when at least 99% of cells
/// with expected count >= 100 lie within 4 sqrt(expected).
ValidationReport validate_pdf3(const DiskDomain& domain, const McSettings& mc, std::size_t bins = 20);

/// Two-point pdf: normalization and per-bin agreement with sampled pairs (4 sigma).
ValidationReport validate_pair(const DiskDomain& domain, const McSettings& mc, std::size_t bins = 50);

/// Conditioning route vs closed form on a grid^3 set of valid triples (relative tolerance).
ValidationReport validate_condpdf(const DiskDomain& domain, std::size_t grid = 10, double rel_tol = 1e-6);

/// Quadrature pmf for three nodes vs Monte Carlo (4 sigma per entry),
/// normalization and relabeling symmetry.
ValidationReport validate_pmf3(const ConnectionModel& model, const DiskDomain& domain, const McSettings& mc,
                               const QuadratureSettings& quad = default_pmf_settings());

/// Valid triple number (i, j, k) of the grid used by validate_condpdf:
/// r12, r13 at cell centers of [0, D], r23 at cell centers of its feasible range.
TriangleSides conditioning_grid_triple(std::size_t i, std::size_t j, std::size_t k, std::size_t grid,
                                       const DiskDomain& domain);

}  // namespace rgg
