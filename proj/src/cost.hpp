// Copyright 2026 The vqcompile Authors.
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

#include "ansatz.hpp"
#include "linalg.hpp"

namespace vqc {

/// Below this overlap magnitude the distance derivative is undefined and
/// derivative routines throw SingularOverlapError.
inline constexpr double kSingularOverlapEps = 1e-12;

/// Central finite-difference steps (first / second order).
inline constexpr double kFdStepFirst = 1e-5;
inline constexpr double kFdStepSecond = 1e-4;

/// Hilbert-Schmidt gate distance 1 - |Tr(t^dag u)| / dim. Gauge invariant
/// under a global phase of u; in [0, 1] for unitary inputs.
double distance(const CMat& u, const TargetGate& t);
double distance(const CMat& u, const CMat& t);

struct CostReport {
  double value = 0.0;
  Complex overlap;           // Tr(t^dag u)
  double overlap_magnitude = 0.0;
  RVec gradient;             // empty unless requested
  RVec hessian_diag;         // empty unless requested
};

CostReport cost_report(const CMat& u, const TargetGate& t);

/// Trainable-circuit cost evaluations. The full circuit is
/// stack(params) * frozen_prefix (the stack is applied after the prefix in
/// circuit time). Pass the identity as prefix for a bare stack.
double stack_distance(const AnsatzLayout& layout, int layers,
                      const RVec& params, const CMat& frozen_prefix,
                      const TargetGate& t);

/// Analytic gradient of the distance w.r.t. every stack parameter, via one
/// forward and one adjoint sweep over the gate sequence. Throws
/// SingularOverlapError when |Tr(t^dag U)| <= kSingularOverlapEps.
RVec distance_gradient(const AnsatzLayout& layout, int layers,
                       const RVec& params, const CMat& frozen_prefix,
                       const TargetGate& t);

/// Value and gradient in one pass (optimizer hot path).
std::pair<double, RVec> distance_value_and_gradient(
    const AnsatzLayout& layout, int layers, const RVec& params,
    const CMat& frozen_prefix, const TargetGate& t);

/// Diagonal of the distance Hessian. Uses the exact second derivative of
/// 1 - |f|/N with f = Tr(t^dag U):
///   d''_j = -[ Re(conj(f) f'') + |f'|^2 - Re(conj(f) f')^2 / |f|^2 ] / (N |f|)
RVec distance_hessian_diag(const AnsatzLayout& layout, int layers,
                           const RVec& params, const CMat& frozen_prefix,
                           const TargetGate& t);

/// Second derivative of the distance along an arbitrary parameter-space
/// direction (used for the constrained RZ-pair valley checks).
double distance_directional_second(const AnsatzLayout& layout, int layers,
                                   const RVec& params,
                                   const CMat& frozen_prefix,
                                   const TargetGate& t, const RVec& direction);

/// Central finite differences of the distance, order 1 or 2; the
/// implementation-independent oracle for the analytic derivatives.
RVec finite_diff(const AnsatzLayout& layout, int layers, const RVec& params,
                 const CMat& frozen_prefix, const TargetGate& t, int order,
                 double step);

}  // namespace vqc
