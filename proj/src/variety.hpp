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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ansatz.hpp"
#include "cost.hpp"
#include "linalg.hpp"

namespace vqc {

enum class VarietyBranch { kHeaA, kHeaB, kCheckerboardPi };

std::string to_string(VarietyBranch b);

/// A single-layer parameter configuration whose layer unitary equals
/// e^{i alpha} I, together with the integer witnesses that generated it.
struct VarietyPoint {
  AnsatzKind kind = AnsatzKind::kHea;
  int qubits = 0;
  bool wrap = true;
  VarietyBranch branch = VarietyBranch::kHeaA;
  RVec params;   // one layer
  double alpha = 0.0;
  std::vector<int> witnesses;  // u,v per wire then w per chain gate; or the
                               // pi multiples for the checkerboard
};

/// Default bound on the integer witnesses |u|,|v|,|w|.
inline constexpr int kDefaultWitnessBound = 3;

/// Draws a HEA identity-variety point. Branch A: theta_D = 2 pi w,
/// theta_Y = pi u, theta_Z1 + theta_Z2 = pi v with theta_Z1 free.
/// Branch B: theta_D = pi (2w - 1), theta_Z1 + theta_Z2 = pi (1/2 + v).
/// The constructed layer is verified identity-up-to-phase before returning.
VarietyPoint sample_hea_variety(int qubits, VarietyBranch branch,
                                int integer_bound, std::uint64_t seed,
                                bool wrap = true);

/// Checkerboard sufficient family: every omega an integer multiple of pi.
VarietyPoint sample_checkerboard_variety(int qubits, std::uint64_t seed,
                                         int integer_bound =
                                             kDefaultWitnessBound);

/// Returns alpha with max|u - e^{i alpha} I| < tol, or nullopt.
std::optional<double> is_identity_up_to_phase(const CMat& u, double tol);

struct ValleyDirection {
  int wire = 0;
  int param_a = 0;  // Z1 index
  int param_b = 0;  // Z2 index
  double second_derivative = 0.0;
};

enum class ExtremumVerdict { kConfirmed, kViolation };

struct ExtremumReport {
  ExtremumVerdict verdict = ExtremumVerdict::kConfirmed;
  double grad_max_abs = 0.0;
  RVec hessian_diag;
  std::vector<ValleyDirection> valley_directions;  // HEA only
  std::string detail;  // populated on violation
};

inline constexpr double kDefaultGradTol = 1e-9;
inline constexpr double kDefaultValleyTol = 1e-9;

/// Evaluates the analytic gradient and Hessian diagonal of the distance to
/// `t` at the variety point; for the HEA also the directional second
/// derivative along each wire's constrained RZ pair (e_Z1 - e_Z2).
/// CONFIRMED iff max |gradient| < tol_grad and every non-valley Hessian
/// entry >= -tol_grad.
ExtremumReport verify_extremum(const VarietyPoint& point, const TargetGate& t,
                               double tol_grad = kDefaultGradTol,
                               double tol_valley = kDefaultValleyTol);

}  // namespace vqc
