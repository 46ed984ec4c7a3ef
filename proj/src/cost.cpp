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

#include "cost.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace vqc {

namespace {

// Tr(a * b) without forming the product.
Complex trace_of_product(const CMat& a, const CMat& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

void check_dims(const CMat& u, const CMat& t) {
  if (u.rows() != u.cols() || t.rows() != t.cols() || u.rows() != t.rows())
    throw DimensionError("distance: dimension mismatch");
}

double distance_from_overlap(Complex f, int dim) {
  return 1.0 - std::abs(f) / static_cast<double>(dim);
}

struct SweepResult {
  Complex f;                  // Tr(t^dag U)
  std::vector<Complex> df;    // per-parameter Tr(t^dag dU/dtheta_j)
  std::vector<Complex> d2f;   // per-parameter Tr(t^dag d2U/dtheta_j^2)
};

// One forward pass and one adjoint pass over the gate sequence. With
// Q = prefix * t^dag the overlap is f = Tr(Q S); the derivative w.r.t. the
// parameter owned by gate g is Tr(Q G_P..G_{g+1} G_g E_g^k F_{g-1}).
SweepResult overlap_sweep(const GateSequence& seq, const CMat& frozen_prefix,
                          const TargetGate& t, bool second_order) {
  const int dim = seq.dim();
  if (frozen_prefix.rows() != dim || t.dim() != dim)
    throw DimensionError("overlap_sweep: dimension mismatch");
  const auto& gates = seq.gates();

  std::vector<CMat> fwd(gates.size() + 1);
  fwd[0] = CMat::Identity(dim, dim);
  for (size_t g = 0; g < gates.size(); ++g)
    fwd[g + 1] = gates[g].matrix * fwd[g];

  const CMat q = frozen_prefix * t.matrix.adjoint();
  SweepResult out;
  out.f = trace_of_product(q, fwd.back());
  out.df.assign(seq.n_params(), Complex(0, 0));
  if (second_order) out.d2f.assign(seq.n_params(), Complex(0, 0));

  CMat acc = q;  // q * G_P .. G_{g+1}
  for (int g = static_cast<int>(gates.size()) - 1; g >= 0; --g) {
    const CMat with_gate = acc * gates[g].matrix;
    const int p = gates[g].param_index;
    if (p >= 0) {
      const CMat ef = gates[g].generator * fwd[g];
      out.df[p] += trace_of_product(with_gate, ef);
      if (second_order)
        out.d2f[p] += trace_of_product(with_gate, gates[g].generator * ef);
    }
    acc = with_gate;
  }
  return out;
}

void require_regular(const Complex& f) {
  if (std::abs(f) <= kSingularOverlapEps)
    throw SingularOverlapError(
        "overlap magnitude below singular threshold; distance derivative "
        "undefined");
}

double gradient_entry(Complex f, Complex df, int dim) {
  return -(std::conj(df) * f).real() / (dim * std::abs(f));
}

double hessian_entry(Complex f, Complex df, Complex d2f, int dim) {
  const double af = std::abs(f);
  const double re_fdf = (std::conj(f) * df).real();
  return -((std::conj(f) * d2f).real() + std::norm(df) -
           re_fdf * re_fdf / (af * af)) /
         (dim * af);
}

}  // namespace

double distance(const CMat& u, const CMat& t) {
  check_dims(u, t);
  return distance_from_overlap(hs_overlap(t, u), static_cast<int>(t.rows()));
}

double distance(const CMat& u, const TargetGate& t) {
  return distance(u, t.matrix);
}

CostReport cost_report(const CMat& u, const TargetGate& t) {
  check_dims(u, t.matrix);
  CostReport r;
  r.overlap = hs_overlap(t.matrix, u);
  r.overlap_magnitude = std::abs(r.overlap);
  r.value = distance_from_overlap(r.overlap, t.dim());
  return r;
}

double stack_distance(const AnsatzLayout& layout, int layers,
                      const RVec& params, const CMat& frozen_prefix,
                      const TargetGate& t) {
  return distance(stack_unitary(layout, layers, params) * frozen_prefix, t);
}

std::pair<double, RVec> distance_value_and_gradient(
    const AnsatzLayout& layout, int layers, const RVec& params,
    const CMat& frozen_prefix, const TargetGate& t) {
  const GateSequence seq = build_sequence(layout, layers, params);
  const SweepResult sw = overlap_sweep(seq, frozen_prefix, t, false);
  require_regular(sw.f);
  RVec grad(seq.n_params());
  for (int j = 0; j < seq.n_params(); ++j)
    grad[j] = gradient_entry(sw.f, sw.df[j], t.dim());
  return {distance_from_overlap(sw.f, t.dim()), std::move(grad)};
}

RVec distance_gradient(const AnsatzLayout& layout, int layers,
                       const RVec& params, const CMat& frozen_prefix,
                       const TargetGate& t) {
  return distance_value_and_gradient(layout, layers, params, frozen_prefix, t)
      .second;
}

RVec distance_hessian_diag(const AnsatzLayout& layout, int layers,
                           const RVec& params, const CMat& frozen_prefix,
                           const TargetGate& t) {
  const GateSequence seq = build_sequence(layout, layers, params);
  const SweepResult sw = overlap_sweep(seq, frozen_prefix, t, true);
  require_regular(sw.f);
  RVec h(seq.n_params());
  for (int j = 0; j < seq.n_params(); ++j)
    h[j] = hessian_entry(sw.f, sw.df[j], sw.d2f[j], t.dim());
  return h;
}

double distance_directional_second(const AnsatzLayout& layout, int layers,
                                   const RVec& params,
                                   const CMat& frozen_prefix,
                                   const TargetGate& t,
                                   const RVec& direction) {
  const GateSequence seq = build_sequence(layout, layers, params);
  const int P = seq.n_params();
  if (direction.size() != P)
    throw DimensionError("direction length does not match parameter count");

  const CMat q = frozen_prefix * t.matrix.adjoint();
  const CMat u = seq.unitary();
  const Complex f = trace_of_product(q, u);
  require_regular(f);

  // f'(0) and f''(0) along the direction via first and mixed second
  // derivatives of U. Only nonzero direction entries contribute.
  std::vector<int> support;
  for (int j = 0; j < P; ++j)
    if (direction[j] != 0.0) support.push_back(j);

  Complex f1(0, 0), f2(0, 0);
  for (int a : support) {
    f1 += direction[a] * trace_of_product(q, seq.param_derivative(a));
    for (int b : support) {
      const CMat m = (a == b) ? seq.param_derivative(a, 2)
                              : seq.mixed_derivative(a, b);
      f2 += direction[a] * direction[b] * trace_of_product(q, m);
    }
  }
  return hessian_entry(f, f1, f2, t.dim());
}

RVec finite_diff(const AnsatzLayout& layout, int layers, const RVec& params,
                 const CMat& frozen_prefix, const TargetGate& t, int order,
                 double step) {
  if (step <= 0.0) throw InvalidSpecError("finite_diff: step must be > 0");
  if (order != 1 && order != 2)
    throw InvalidSpecError("finite_diff: order must be 1 or 2");
  const int P = static_cast<int>(params.size());
  RVec out(P);
  const double d0 =
      order == 2 ? stack_distance(layout, layers, params, frozen_prefix, t)
                 : 0.0;
  for (int j = 0; j < P; ++j) {
    RVec p = params, m = params;
    p[j] += step;
    m[j] -= step;
    const double dp = stack_distance(layout, layers, p, frozen_prefix, t);
    const double dm = stack_distance(layout, layers, m, frozen_prefix, t);
    out[j] = order == 1 ? (dp - dm) / (2.0 * step)
                        : (dp - 2.0 * d0 + dm) / (step * step);
  }
  return out;
}

}  // namespace vqc
