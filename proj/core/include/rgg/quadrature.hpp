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

// Deterministic adaptive quadrature on boxes of dimension 1 to 3.
//
// One dimension uses a 7/15-point Gauss-Kronrod pair with the QUADPACK error
// heuristic; two and three dimensions use the tensor product of the 3/7-point
// pair and bisect the panel along the axis with the largest embedded-rule
// discrepancy. Panels are refined in order of decreasing error estimate, ties
// broken by the lexicographically smallest panel origin, so results are a
// pure function of the inputs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "rgg/errors.hpp"

namespace rgg {

struct QuadratureSettings {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_subdivisions = 5000;
  /// Per-axis interior split points; initial panels are cut at all of them.
  std::vector<std::vector<double>> breakpoints;

  /// Throws ArgumentError unless a tolerance is positive and max_subdivisions >= 1.
  void validate() const;

  /// Copy with tolerances scaled by `factor` (used to budget nested integrals).
  QuadratureSettings scaled(double factor) const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
  bool converged = true;
};

template <std::size_t N>
struct VectorQuadratureResult {
  std::array<double, N> value{};
  std::array<double, N> error_estimate{};
  std::size_t subdivisions = 0;
  bool converged = true;
};

template <std::size_t Dim>
struct Box {
  std::array<double, Dim> lower{};
  std::array<double, Dim> upper{};
};

namespace detail {

/// Embedded Gauss/Kronrod pair on [-1, 1]; nodes ascending, Gauss weight 0
/// on Kronrod-only nodes.
struct EmbeddedRule {
  std::vector<double> nodes;
  std::vector<double> kronrod;
  std::vector<double> gauss;
};

const EmbeddedRule& gauss_kronrod_15();
const EmbeddedRule& gauss_kronrod_7();

/// Sorted unique cut list [lo, interior breakpoints..., hi].
std::vector<double> panel_edges(double lo, double hi, std::span<const double> breakpoints);

template <std::size_t N>
struct Panel1D {
  double a = 0.0;
  double b = 0.0;
  std::array<double, N> value{};
  std::array<double, N> error{};
  double score = 0.0;
};

template <std::size_t N>
struct Panel1DOrder {
  bool operator()(const Panel1D<N>& x, const Panel1D<N>& y) const noexcept {
    if (x.score != y.score) return x.score < y.score;
    return x.a > y.a;
  }
};

template <std::size_t N, class F>
Panel1D<N> evaluate_gk15(F& f, double a, double b, std::size_t tracked) {
  const EmbeddedRule& rule = gauss_kronrod_15();
  constexpr std::size_t kNodes = 15;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<std::array<double, N>, kNodes> fv;
  for (std::size_t i = 0; i < kNodes; ++i) fv[i] = f(center + half * rule.nodes[i]);

  Panel1D<N> p;
  p.a = a;
  p.b = b;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = std::numeric_limits<double>::min();
  for (std::size_t k = 0; k < N; ++k) {
    double resk = 0.0, resg = 0.0, resabs = 0.0;
    for (std::size_t i = 0; i < kNodes; ++i) {
      resk += rule.kronrod[i] * fv[i][k];
      resg += rule.gauss[i] * fv[i][k];
      resabs += rule.kronrod[i] * std::abs(fv[i][k]);
    }
    const double mean = 0.5 * resk;
    double resasc = 0.0;
    for (std::size_t i = 0; i < kNodes; ++i) resasc += rule.kronrod[i] * std::abs(fv[i][k] - mean);
    const double scale = std::abs(half);
    resabs *= scale;
    resasc *= scale;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    p.value[k] = resk * half;
    p.error[k] = err;
  }
  for (std::size_t k = 0; k < tracked; ++k) p.score += p.error[k];
  return p;
}

/// With `carried`, components [tracked, 2 tracked) hold error estimates of
/// the first `tracked` components that were produced by inner integrals.
template <std::size_t N>
bool within_tolerance(const std::array<double, N>& value, const std::array<double, N>& error,
                      double abs_tol, double rel_tol, std::size_t tracked, bool carried = false) {
  for (std::size_t k = 0; k < tracked; ++k) {
    const double e = carried ? error[k] + std::abs(value[tracked + k]) : error[k];
    if (!(e <= std::max(abs_tol, rel_tol * std::abs(value[k])))) return false;
  }
  return true;
}

}  // namespace detail

/// Adaptive 1-D integration of a vector-valued integrand over [edges.front(),
/// edges.back()], initially split at every interior edge.
///
/// Only the first `tracked` components take part in the convergence test and
/// panel ranking; the rest are integrated along (nested integrals use them to
/// carry inner error estimates). Never throws on non-convergence: the result
/// reports `converged == false` with the best estimate seen. With `carried`
/// (requires N == 2 * tracked) the convergence test also counts the inner
/// error estimates held in the upper half.
template <std::size_t N, class F>
VectorQuadratureResult<N> integrate_adaptive(F&& f, std::span<const double> edges, double abs_tol,
                                             double rel_tol, std::size_t max_subdivisions,
                                             std::size_t tracked = N, bool carried = false) {
  using Panel = detail::Panel1D<N>;
  VectorQuadratureResult<N> out;
  std::vector<Panel> heap;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] > edges[i]) heap.push_back(detail::evaluate_gk15<N>(f, edges[i], edges[i + 1], tracked));
  }
  if (heap.empty()) return out;

  const detail::Panel1DOrder<N> order;
  std::make_heap(heap.begin(), heap.end(), order);

  std::array<double, N> value{}, error{};
  auto recompute = [&] {
    value.fill(0.0);
    error.fill(0.0);
    for (const auto& p : heap) {
      for (std::size_t k = 0; k < N; ++k) {
        value[k] += p.value[k];
        error[k] += p.error[k];
      }
    }
  };
  auto score_of = [&](const std::array<double, N>& e) {
    double s = 0.0;
    for (std::size_t k = 0; k < tracked; ++k) s += e[k];
    return s;
  };
  recompute();

  auto best_value = value;
  auto best_error = error;
  double best_score = score_of(error);
  std::size_t steps = 0;
  bool converged = detail::within_tolerance(value, error, abs_tol, rel_tol, tracked, carried);

  while (!converged && steps < max_subdivisions) {
    std::pop_heap(heap.begin(), heap.end(), order);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), order);
      break;
    }
    Panel left = detail::evaluate_gk15<N>(f, worst.a, mid, tracked);
    Panel right = detail::evaluate_gk15<N>(f, mid, worst.b, tracked);
    for (std::size_t k = 0; k < N; ++k) {
      value[k] += left.value[k] + right.value[k] - worst.value[k];
      error[k] += left.error[k] + right.error[k] - worst.error[k];
    }
    heap.push_back(std::move(left));
    std::push_heap(heap.begin(), heap.end(), order);
    heap.push_back(std::move(right));
    std::push_heap(heap.begin(), heap.end(), order);
    ++steps;
    converged = detail::within_tolerance(value, error, abs_tol, rel_tol, tracked, carried);
    if (converged) break;
    const double s = score_of(error);
    if (s < best_score) {
      best_score = s;
      best_value = value;
      best_error = error;
    }
  }

  out.subdivisions = steps;
  if (converged) {
    recompute();
    out.value = value;
    out.error_estimate = error;
    out.converged = true;
  } else {
    out.value = best_value;
    out.error_estimate = best_error;
    out.converged = false;
  }
  return out;
}

namespace detail {

template <std::size_t Dim>
struct PanelND {
  Box<Dim> box;
  double value = 0.0;
  double error = 0.0;
  std::size_t split_axis = 0;
};

template <std::size_t Dim>
struct PanelNDOrder {
  bool operator()(const PanelND<Dim>& x, const PanelND<Dim>& y) const noexcept {
    if (x.error != y.error) return x.error < y.error;
    return y.box.lower < x.box.lower;
  }
};

template <std::size_t Dim, class F>
PanelND<Dim> evaluate_tensor_gk7(F& f, const Box<Dim>& box) {
  const EmbeddedRule& rule = gauss_kronrod_7();
  const std::size_t m = rule.nodes.size();
  std::array<double, Dim> center, half;
  double jacobian = 1.0;
  for (std::size_t d = 0; d < Dim; ++d) {
    center[d] = 0.5 * (box.lower[d] + box.upper[d]);
    half[d] = 0.5 * (box.upper[d] - box.lower[d]);
    jacobian *= half[d];
  }

  double kronrod = 0.0, gauss = 0.0;
  std::array<double, Dim> axis_discrepancy{};
  std::array<std::size_t, Dim> idx{};
  std::size_t total = 1;
  for (std::size_t d = 0; d < Dim; ++d) total *= m;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t d = 0; d < Dim; ++d) {
      idx[d] = rem % m;
      rem /= m;
    }
    std::array<double, Dim> x;
    double wk = 1.0, wg = 1.0;
    for (std::size_t d = 0; d < Dim; ++d) {
      x[d] = center[d] + half[d] * rule.nodes[idx[d]];
      wk *= rule.kronrod[idx[d]];
      wg *= rule.gauss[idx[d]];
    }
    const double fx = f(x);
    kronrod += wk * fx;
    gauss += wg * fx;
    for (std::size_t d = 0; d < Dim; ++d) {
      // Kronrod on every axis except d, (Kronrod - Gauss) on d.
      const double others = wk / rule.kronrod[idx[d]];
      axis_discrepancy[d] += others * (rule.kronrod[idx[d]] - rule.gauss[idx[d]]) * fx;
    }
  }

  PanelND<Dim> p;
  p.box = box;
  p.value = kronrod * jacobian;
  p.error = std::abs((kronrod - gauss) * jacobian);
  double widest = -1.0;
  for (std::size_t d = 0; d < Dim; ++d) {
    const double e = std::abs(axis_discrepancy[d]);
    if (e > widest) {
      widest = e;
      p.split_axis = d;
    }
  }
  return p;
}

}  // namespace detail

/// Adaptive integration of a scalar integrand over an axis-aligned box.
///
/// `f` is called with a `std::array<double, Dim>`. Throws AccuracyError
/// (carrying the best value and estimate) if `max_subdivisions` is exhausted.
template <std::size_t Dim, class F>
QuadratureResult integrate(F&& f, const Box<Dim>& box, const QuadratureSettings& settings) {
  static_assert(Dim >= 1 && Dim <= 3, "integrate supports 1 to 3 dimensions");
  settings.validate();
  for (std::size_t d = 0; d < Dim; ++d) {
    if (!(box.upper[d] > box.lower[d])) throw ArgumentError("integrate: degenerate box");
  }
  auto axis_breaks = [&](std::size_t d) -> std::span<const double> {
    if (d < settings.breakpoints.size()) return settings.breakpoints[d];
    return {};
  };

  QuadratureResult result;
  if constexpr (Dim == 1) {
    const auto edges = detail::panel_edges(box.lower[0], box.upper[0], axis_breaks(0));
    auto g = [&f](double x) { return std::array<double, 1>{f(std::array<double, 1>{x})}; };
    const auto r = integrate_adaptive<1>(g, edges, settings.abs_tol, settings.rel_tol,
                                         settings.max_subdivisions);
    result = {r.value[0], r.error_estimate[0], r.subdivisions, r.converged};
  } else {
    using Panel = detail::PanelND<Dim>;
    std::array<std::vector<double>, Dim> edges;
    for (std::size_t d = 0; d < Dim; ++d)
      edges[d] = detail::panel_edges(box.lower[d], box.upper[d], axis_breaks(d));

    std::vector<Panel> heap;
    std::array<std::size_t, Dim> idx{};
    while (true) {
      Box<Dim> cell;
      for (std::size_t d = 0; d < Dim; ++d) {
        cell.lower[d] = edges[d][idx[d]];
        cell.upper[d] = edges[d][idx[d] + 1];
      }
      heap.push_back(detail::evaluate_tensor_gk7<Dim>(f, cell));
      std::size_t d = 0;
      while (d < Dim && ++idx[d] + 1 >= edges[d].size()) idx[d++] = 0;
      if (d == Dim) break;
    }
    const detail::PanelNDOrder<Dim> order;
    std::make_heap(heap.begin(), heap.end(), order);

    double value = 0.0, error = 0.0;
    for (const auto& p : heap) {
      value += p.value;
      error += p.error;
    }
    double best_value = value, best_error = error;
    std::size_t steps = 0;
    auto ok = [&] { return error <= std::max(settings.abs_tol, settings.rel_tol * std::abs(value)); };
    bool converged = ok();
    while (!converged && steps < settings.max_subdivisions) {
      std::pop_heap(heap.begin(), heap.end(), order);
      const Panel worst = heap.back();
      heap.pop_back();
      const std::size_t axis = worst.split_axis;
      const double mid = 0.5 * (worst.box.lower[axis] + worst.box.upper[axis]);
      Box<Dim> lo = worst.box, hi = worst.box;
      lo.upper[axis] = mid;
      hi.lower[axis] = mid;
      Panel a = detail::evaluate_tensor_gk7<Dim>(f, lo);
      Panel b = detail::evaluate_tensor_gk7<Dim>(f, hi);
      value += a.value + b.value - worst.value;
      error += a.error + b.error - worst.error;
      heap.push_back(std::move(a));
      std::push_heap(heap.begin(), heap.end(), order);
      heap.push_back(std::move(b));
      std::push_heap(heap.begin(), heap.end(), order);
      ++steps;
      converged = ok();
      if (!converged && error < best_error) {
        best_error = error;
        best_value = value;
      }
    }
    if (converged) {
      value = 0.0;
      error = 0.0;
      for (const auto& p : heap) {
        value += p.value;
        error += p.error;
      }
      result = {value, error, steps, true};
    } else {
      result = {best_value, best_error, steps, false};
    }
  }

  if (!result.converged) {
    throw AccuracyError("integrate: tolerance not reached after " +
                            std::to_string(result.subdivisions) + " subdivisions",
                        result.value, result.error_estimate);
  }
  return result;
}

}  // namespace rgg
