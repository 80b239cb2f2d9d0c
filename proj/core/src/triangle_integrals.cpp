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

#include "rgg/triangle_integrals.hpp"

namespace rgg {
namespace {

constexpr auto kUnitWeight = [](double, double, double) { return std::array<double, 1>{1.0}; };

QuadratureResult to_scalar(const VectorQuadratureResult<1>& r) {
  return {r.value[0], r.error_estimate[0], r.subdivisions, r.converged};
}

}  // namespace

QuadratureResult joint_pdf3_mass(const DiskDomain& domain, const SideBox& box,
                                 const QuadratureSettings& settings) {
  return to_scalar(integrate_joint_pdf3<1>(domain, box, kUnitWeight, {}, settings));
}

QuadratureResult joint_pdf3_marginal(double r12, const DiskDomain& domain,
                                     const QuadratureSettings& settings) {
  if (!std::isfinite(r12) || r12 < 0.0) throw DomainError("joint_pdf3_marginal: r12 must be >= 0");
  return to_scalar(
      integrate_joint_pdf3_at<1>(r12, domain, SideBox::full(domain), kUnitWeight, {}, settings));
}

}  // namespace rgg
