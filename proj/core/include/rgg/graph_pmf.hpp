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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rgg/connection.hpp"
#include "rgg/geometry.hpp"
#include "rgg/quadrature.hpp"

namespace rgg {

/// Edge indicators X_ij, i < j, in pair_index order. Encodes to an integer
/// with bit k set iff the k-th pair is an edge.
class EdgeVector {
 public:
  EdgeVector(int n, std::vector<std::uint8_t> bits);
  static EdgeVector from_code(int n, std::uint64_t code);

  int nodes() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t k) const { return bits_.at(k) != 0; }
  /// 1-based node ids.
  bool has_edge(int i, int j) const;
  std::uint64_t code() const noexcept;

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

/// Largest edge count representable as an outcome code.
inline constexpr std::size_t kMaxCodedEdges = 63;

enum class PmfMethod { quadrature, monte_carlo };

std::string_view to_string(PmfMethod m) noexcept;

/// Distribution of the edge vector over all 2^(n(n-1)/2) outcomes, indexed by code.
struct GraphPmf {
  int n = 0;
  std::vector<double> probs;
  PmfMethod method = PmfMethod::quadrature;
  double error_estimate = 0.0;
};

/// Settings used by pmf_n2 / pmf_n3 unless the caller overrides them.
QuadratureSettings default_pmf_settings();

/// Exact pmf for two nodes: P(edge) = int_0^D pair_pdf(r) p(r) dr.
GraphPmf pmf_n2(const ConnectionModel& model, const DiskDomain& domain,
                const QuadratureSettings& quad = default_pmf_settings());

/// Exact pmf for three nodes from the three-side joint pdf.
/// Both functions return a deterministic pmf with zero error when p is the
/// constant 0 or 1 on [0, D] (e.g. a hard disk with r0 = 0 or r0 >= D).
/// Throws AccuracyError if the integral does not reach the tolerance.
GraphPmf pmf_n3(const ConnectionModel& model, const DiskDomain& domain,
                const QuadratureSettings& quad = default_pmf_settings());

/// Dispatches to pmf_n2 / pmf_n3; n >= 4 throws UnsupportedError (use the
/// Monte Carlo estimator instead).
GraphPmf exact_pmf(int n, const ConnectionModel& model, const DiskDomain& domain,
                   const QuadratureSettings& quad = default_pmf_settings());

/// Shannon entropy in bits with 0 log 0 = 0.
double entropy(const GraphPmf& pmf);
double entropy_bits(std::span<const double> probs);

/// Whether the graph with this outcome code spans all n nodes.
bool is_connected(int n, std::uint64_t code);

double prob_connected(const GraphPmf& pmf);
double prob_complete(const GraphPmf& pmf);

/// Outcome code after relabeling node v as perm[v-1] (perm is a 1-based permutation).
std::uint64_t relabel(int n, std::uint64_t code, std::span<const int> perm);

}  // namespace rgg
