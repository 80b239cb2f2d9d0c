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

#include "rgg/graph_pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <variant>
#include <string>

#include "rgg/distances.hpp"
#include "rgg/errors.hpp"
#include "rgg/triangle_integrals.hpp"

namespace rgg {
namespace {

GraphPmf finish(int n, std::span<const double> raw, std::span<const double> errors) {
  GraphPmf pmf;
  pmf.n = n;
  pmf.method = PmfMethod::quadrature;
  pmf.probs.assign(raw.begin(), raw.end());
  // Quadrature roundoff can leave entries a hair outside [0, 1].
  for (auto& p : pmf.probs) p = std::clamp(p, 0.0, 1.0);
  pmf.error_estimate = std::accumulate(errors.begin(), errors.end(), 0.0);
  return pmf;
}

[[noreturn]] void accuracy_failure(const char* what, std::span<const double> values,
                                   std::span<const double> errors) {
  throw AccuracyError(std::string(what) + ": quadrature tolerance not reached",
                      std::accumulate(values.begin(), values.end(), 0.0),
                      std::accumulate(errors.begin(), errors.end(), 0.0));
}

/// Edge outcome when p(r) is the same constant 0 or 1 on all of [0, D].
std::optional<bool> constant_edge(const ConnectionModel& model, double diameter) {
  if (const auto* h = std::get_if<HardDisk>(&model.kind())) {
    if (h->r0 <= 0.0) return false;
    if (h->r0 >= diameter) return true;
  } else if (const auto* t = std::get_if<Tabulated>(&model.kind())) {
    const auto all = [&](double v) {
      return std::all_of(t->knots.begin(), t->knots.end(), [v](const Knot& k) { return k.p == v; });
    };
    if (all(0.0)) return false;
    if (all(1.0)) return true;
  }
  return std::nullopt;
}

GraphPmf deterministic_pmf(int n, bool connected) {
  GraphPmf pmf;
  pmf.n = n;
  pmf.method = PmfMethod::quadrature;
  const std::size_t pairs = pair_count(n);
  pmf.probs.assign(std::size_t{1} << pairs, 0.0);
  pmf.probs[connected ? (std::size_t{1} << pairs) - 1 : 0] = 1.0;
  return pmf;
}

}  // namespace

EdgeVector::EdgeVector(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  if (n < 2) throw ArgumentError("edge vector needs at least two nodes");
  if (bits_.size() != pair_count(n)) throw ArgumentError("edge vector length must be n(n-1)/2");
  for (auto& b : bits_) b = b != 0;
}

EdgeVector EdgeVector::from_code(int n, std::uint64_t code) {
  const auto m = pair_count(n);
  if (m > kMaxCodedEdges) throw ArgumentError("too many pairs for an integer code");
  if (m < 64 && (code >> m) != 0) throw ArgumentError("outcome code has bits beyond the pair count");
  std::vector<std::uint8_t> bits(m);
  for (std::size_t k = 0; k < m; ++k) bits[k] = (code >> k) & 1U;
  return EdgeVector(n, std::move(bits));
}

bool EdgeVector::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return bits_[pair_index(i, j, n_)] != 0;
}

std::uint64_t EdgeVector::code() const noexcept {
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < bits_.size() && k < 64; ++k) c |= std::uint64_t{bits_[k]} << k;
  return c;
}

std::string_view to_string(PmfMethod m) noexcept {
  return m == PmfMethod::quadrature ? "quadrature" : "monte_carlo";
}

QuadratureSettings default_pmf_settings() {
  QuadratureSettings q;
  q.abs_tol = 1e-4;
  q.rel_tol = 0.0;
  q.max_subdivisions = 2000;
  return q;
}

GraphPmf pmf_n2(const ConnectionModel& model, const DiskDomain& domain, const QuadratureSettings& quad) {
  quad.validate();
  const double diameter = domain.diameter();
  if (const auto c = constant_edge(model, diameter)) return deterministic_pmf(2, *c);
  const auto kinks = model.kinks();
  const auto edges = detail::panel_edges(0.0, diameter, kinks);
  auto integrand = [&](double r) {
    const double f = pair_pdf(r, domain);
    const double p = connect_prob(model, r);
    return std::array<double, 2>{f * (1.0 - p), f * p};
  };
  const auto r = integrate_adaptive<2>(integrand, edges, quad.abs_tol, quad.rel_tol, quad.max_subdivisions);
  if (!r.converged) accuracy_failure("pmf_n2", r.value, r.error_estimate);
  return finish(2, r.value, r.error_estimate);
}

GraphPmf pmf_n3(const ConnectionModel& model, const DiskDomain& domain, const QuadratureSettings& quad) {
  quad.validate();
  if (const auto c = constant_edge(model, domain.diameter())) return deterministic_pmf(3, *c);
  const auto kinks = model.kinks();
  // Outcome bit 0 is edge (1,2) = r12, bit 1 is (1,3) = r13, bit 2 is (2,3) = r23.
  auto weight = [&model](double r12, double r13, double r23) {
    const std::array<double, 3> p{connect_prob(model, r12), connect_prob(model, r13),
                                  connect_prob(model, r23)};
    std::array<double, 8> w;
    for (unsigned code = 0; code < 8; ++code) {
      double v = 1.0;
      for (unsigned k = 0; k < 3; ++k) v *= (code >> k) & 1U ? p[k] : 1.0 - p[k];
      w[code] = v;
    }
    return w;
  };
  const auto r = integrate_joint_pdf3<8>(domain, SideBox::full(domain), weight, kinks, quad);
  if (!r.converged) accuracy_failure("pmf_n3", r.value, r.error_estimate);
  return finish(3, r.value, r.error_estimate);
}

GraphPmf exact_pmf(int n, const ConnectionModel& model, const DiskDomain& domain,
                   const QuadratureSettings& quad) {
  switch (n) {
    case 2:
      return pmf_n2(model, domain, quad);
    case 3:
      return pmf_n3(model, domain, quad);
    default:
      throw UnsupportedError("exact graph pmf is only available for n = 2 and n = 3 (got n = " +
                             std::to_string(n) + "); use the Monte Carlo estimator");
  }
}

double entropy_bits(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::max(h, 0.0);
}

double entropy(const GraphPmf& pmf) { return entropy_bits(pmf.probs); }

bool is_connected(int n, std::uint64_t code) {
  if (n < 1) throw ArgumentError("is_connected: n must be >= 1");
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (!((code >> k) & 1U)) continue;
      const int a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

double prob_connected(const GraphPmf& pmf) {
  double total = 0.0;
  for (std::size_t code = 0; code < pmf.probs.size(); ++code) {
    if (is_connected(pmf.n, code)) total += pmf.probs[code];
  }
  return total;
}

double prob_complete(const GraphPmf& pmf) { return pmf.probs.empty() ? 0.0 : pmf.probs.back(); }

std::uint64_t relabel(int n, std::uint64_t code, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(n)) throw ArgumentError("relabel: permutation size must be n");
  std::uint64_t out = 0;
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      if (!((code >> k) & 1U)) continue;
      int a = perm[static_cast<std::size_t>(i - 1)], b = perm[static_cast<std::size_t>(j - 1)];
      if (a > b) std::swap(a, b);
      out |= std::uint64_t{1} << pair_index(a, b, n);
    }
  }
  return out;
}

}  // namespace rgg
