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

#include "variety.hpp"

#include <cmath>
#include <sstream>

#include "rng.hpp"

namespace vqc {

std::string to_string(VarietyBranch b) {
  switch (b) {
    case VarietyBranch::kHeaA:
      return "hea_a";
    case VarietyBranch::kHeaB:
      return "hea_b";
    case VarietyBranch::kCheckerboardPi:
      return "checkerboard_pi";
  }
  return "?";
}

std::optional<double> is_identity_up_to_phase(const CMat& u, double tol) {
  return identity_phase(u, tol);
}

namespace {

constexpr double kVerifyTol = 1e-10;

VarietyPoint finish(VarietyPoint p) {
  AnsatzLayout layout(p.kind, p.qubits, p.wrap);
  const CMat u = stack_unitary(layout, 1, p.params);
  const auto alpha = identity_phase(u, kVerifyTol);
  if (!alpha)
    throw Error("variety sample failed identity-up-to-phase verification");
  p.alpha = *alpha;
  return p;
}

}  // namespace

VarietyPoint sample_hea_variety(int qubits, VarietyBranch branch,
                                int integer_bound, std::uint64_t seed,
                                bool wrap) {
  if (branch == VarietyBranch::kCheckerboardPi)
    throw InvalidSpecError("sample_hea_variety: HEA branch expected");
  AnsatzLayout layout(AnsatzKind::kHea, qubits, wrap);
  Rng rng(seed);

  VarietyPoint p;
  p.kind = AnsatzKind::kHea;
  p.qubits = qubits;
  p.wrap = wrap;
  p.branch = branch;
  p.params = RVec::Zero(layout.params_per_layer());

  const bool a = branch == VarietyBranch::kHeaA;
  for (int i = 0; i < qubits; ++i) {
    const int u = rng.uniform_int(-integer_bound, integer_bound);
    const int v = rng.uniform_int(-integer_bound, integer_bound);
    const double z1 = rng.uniform_angle();
    const double pair_sum = a ? kPi * v : kPi * (0.5 + v);
    p.params[3 * i] = z1;
    p.params[3 * i + 1] = kPi * u;
    p.params[3 * i + 2] = pair_sum - z1;
    p.witnesses.push_back(u);
    p.witnesses.push_back(v);
  }
  const int chain_gates = layout.params_per_layer() - 3 * qubits;
  for (int c = 0; c < chain_gates; ++c) {
    const int w = rng.uniform_int(-integer_bound, integer_bound);
    p.params[3 * qubits + c] = a ? 2.0 * kPi * w : kPi * (2.0 * w - 1.0);
    p.witnesses.push_back(w);
  }
  return finish(std::move(p));
}

VarietyPoint sample_checkerboard_variety(int qubits, std::uint64_t seed,
                                         int integer_bound) {
  AnsatzLayout layout(AnsatzKind::kCheckerboard, qubits);
  Rng rng(seed);

  VarietyPoint p;
  p.kind = AnsatzKind::kCheckerboard;
  p.qubits = qubits;
  p.branch = VarietyBranch::kCheckerboardPi;
  p.params = RVec::Zero(layout.params_per_layer());
  for (int j = 0; j < layout.params_per_layer(); ++j) {
    const int m = rng.uniform_int(-integer_bound, integer_bound);
    p.params[j] = kPi * m;
    p.witnesses.push_back(m);
  }
  return finish(std::move(p));
}

ExtremumReport verify_extremum(const VarietyPoint& point, const TargetGate& t,
                               double tol_grad, double tol_valley) {
  AnsatzLayout layout(point.kind, point.qubits, point.wrap);
  const CMat prefix = CMat::Identity(layout.dim(), layout.dim());

  ExtremumReport report;
  const RVec grad =
      distance_gradient(layout, 1, point.params, prefix, t);
  report.grad_max_abs = grad.cwiseAbs().maxCoeff();
  report.hessian_diag =
      distance_hessian_diag(layout, 1, point.params, prefix, t);

  std::ostringstream detail;
  bool ok = true;
  if (report.grad_max_abs >= tol_grad) {
    ok = false;
    detail << "gradient max " << report.grad_max_abs << " >= " << tol_grad
           << "; ";
  }

  std::vector<bool> in_valley(point.params.size(), false);
  if (point.kind == AnsatzKind::kHea) {
    for (int i = 0; i < point.qubits; ++i) {
      ValleyDirection v;
      v.wire = i;
      v.param_a = 3 * i;
      v.param_b = 3 * i + 2;
      RVec dir = RVec::Zero(point.params.size());
      dir[v.param_a] = 1.0;
      dir[v.param_b] = -1.0;
      v.second_derivative = distance_directional_second(
          layout, 1, point.params, prefix, t, dir);
      report.valley_directions.push_back(v);
      in_valley[v.param_a] = true;
      in_valley[v.param_b] = true;
      if (std::abs(v.second_derivative) >= tol_valley) {
        ok = false;
        detail << "valley wire " << i << " second derivative "
               << v.second_derivative << "; ";
      }
    }
  }
  for (int j = 0; j < report.hessian_diag.size(); ++j) {
    if (in_valley[j]) continue;
    if (report.hessian_diag[j] < -tol_grad) {
      ok = false;
      detail << "hessian[" << j << "] = " << report.hessian_diag[j] << " < 0; ";
    }
  }

  report.verdict =
      ok ? ExtremumVerdict::kConfirmed : ExtremumVerdict::kViolation;
  report.detail = detail.str();
  return report;
}

}  // namespace vqc
