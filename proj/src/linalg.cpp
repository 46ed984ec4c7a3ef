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

#include "linalg.hpp"

#include <cmath>

namespace vqc {

namespace {
const Complex kI(0.0, 1.0);

CMat make_pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMat make_pauli_y() {
  CMat m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}
CMat make_pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
CMat make_cnot() {
  CMat m = CMat::Identity(4, 4);
  m(2, 2) = 0;
  m(3, 3) = 0;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}
}  // namespace

const CMat& pauli_x() {
  static const CMat m = make_pauli_x();
  return m;
}
const CMat& pauli_y() {
  static const CMat m = make_pauli_y();
  return m;
}
const CMat& pauli_z() {
  static const CMat m = make_pauli_z();
  return m;
}
const CMat& cnot() {
  static const CMat m = make_cnot();
  return m;
}

CMat rotation(const CMat& sigma, double theta) {
  // exp(-i theta sigma) = cos(theta) I - i sin(theta) sigma for involutions.
  const auto dim = sigma.rows();
  return std::cos(theta) * CMat::Identity(dim, dim) -
         kI * std::sin(theta) * sigma;
}

CMat rx(double theta) { return rotation(pauli_x(), theta); }
CMat ry(double theta) { return rotation(pauli_y(), theta); }
CMat rz(double theta) { return rotation(pauli_z(), theta); }

CMat rzz(double theta) {
  static const CMat zz = kron(pauli_z(), pauli_z());
  return rotation(zz, theta);
}

CMat cry(double theta) {
  CMat m = CMat::Identity(4, 4);
  m.block<2, 2>(2, 2) = ry(theta);
  return m;
}

CMat make_gate(const GateSpec& spec) {
  switch (spec.kind) {
    case GateKind::kRX:
      return rx(spec.angle);
    case GateKind::kRY:
      return ry(spec.angle);
    case GateKind::kRZ:
      return rz(spec.angle);
    case GateKind::kRZZ:
      return rzz(spec.angle);
    case GateKind::kCRY:
      return cry(spec.angle);
    case GateKind::kCNOT:
      return cnot();
    case GateKind::kPauliX:
      return pauli_x();
    case GateKind::kPauliY:
      return pauli_y();
    case GateKind::kPauliZ:
      return pauli_z();
    case GateKind::kControlled:
      return make_target(spec.base, spec.controls).matrix;
  }
  throw InvalidSpecError("make_gate: unknown gate kind");
}

CMat kron(const CMat& a, const CMat& b) {
  const auto ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  CMat out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

CMat embed_gate(const CMat& g, const std::vector<int>& wires, int n) {
  const int m = static_cast<int>(wires.size());
  const int sub = 1 << m;
  const int dim = 1 << n;
  if (g.rows() != sub || g.cols() != sub)
    throw DimensionError("embed_gate: gate dim does not match wire count");
  for (int w : wires) {
    if (w < 0 || w >= n)
      throw DimensionError("embed_gate: wire index out of range");
  }
  for (size_t i = 0; i < wires.size(); ++i)
    for (size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw InvalidSpecError("embed_gate: duplicate wire");

  // Bit of basis index for wire w (wire 0 = most significant).
  std::vector<int> shift(m);
  for (int q = 0; q < m; ++q) shift[q] = n - 1 - wires[q];

  CMat out = CMat::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int sub_in = 0;
    for (int q = 0; q < m; ++q)
      sub_in = (sub_in << 1) | ((col >> shift[q]) & 1);
    int base = col;
    for (int q = 0; q < m; ++q) base &= ~(1 << shift[q]);
    for (int sub_out = 0; sub_out < sub; ++sub_out) {
      const Complex amp = g(sub_out, sub_in);
      if (amp == Complex(0.0, 0.0)) continue;
      int row = base;
      for (int q = 0; q < m; ++q)
        row |= ((sub_out >> (m - 1 - q)) & 1) << shift[q];
      out(row, col) += amp;
    }
  }
  return out;
}

Complex hs_overlap(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_overlap: dimension mismatch");
  return (a.adjoint() * b).trace();
}

TargetGate make_target(const CMat& base, int controls) {
  if (base.rows() != 2 || base.cols() != 2)
    throw InvalidSpecError("make_target: base must be 2x2");
  if (!is_unitary(base, 1e-10))
    throw InvalidSpecError("make_target: base must be unitary");
  if (controls < 1) throw InvalidSpecError("make_target: need k >= 1");
  const int dim = 1 << (controls + 1);
  TargetGate t;
  t.base = base;
  t.controls = controls;
  t.matrix = CMat::Identity(dim, dim);
  t.matrix.block<2, 2>(dim - 2, dim - 2) = base;
  return t;
}

TargetGate toffoli(int controls) { return make_target(pauli_x(), controls); }

double unitarity_defect(const CMat& u) {
  const CMat d = u.adjoint() * u - CMat::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

bool is_unitary(const CMat& u, double tol) {
  return u.rows() == u.cols() && unitarity_defect(u) < tol;
}

std::optional<double> identity_phase(const CMat& u, double tol) {
  if (u.rows() != u.cols()) return std::nullopt;
  const double alpha = std::arg(u(0, 0));
  const Complex phase = std::exp(Complex(0.0, alpha));
  const double err =
      (u - phase * CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (err < tol) return alpha;
  return std::nullopt;
}

}  // namespace vqc
