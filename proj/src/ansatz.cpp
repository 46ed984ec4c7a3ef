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

#include "ansatz.hpp"

#include <algorithm>
#include <utility>

namespace vqc {

namespace {
const Complex kI(0.0, 1.0);

CMat projector_one() {
  CMat p = CMat::Zero(2, 2);
  p(1, 1) = 1.0;
  return p;
}

// Effective right generator of CRY: |1><1| (x) (-i Y).
const CMat& cry_generator() {
  static const CMat g = kron(projector_one(), -kI * pauli_y());
  return g;
}
}  // namespace

std::string to_string(AnsatzKind kind) {
  return kind == AnsatzKind::kHea ? "hea" : "checkerboard";
}

AnsatzKind ansatz_kind_from_string(const std::string& name) {
  if (name == "hea") return AnsatzKind::kHea;
  if (name == "checkerboard") return AnsatzKind::kCheckerboard;
  throw InvalidSpecError("unknown ansatz kind: " + name);
}

AnsatzLayout::AnsatzLayout(AnsatzKind kind, int qubits, bool wrap)
    : kind_(kind), qubits_(qubits), wrap_(wrap) {
  if (qubits < 2) throw InvalidSpecError("ansatz needs at least 2 qubits");
  if (kind == AnsatzKind::kHea) {
    for (int i = 0; i < qubits; ++i) {
      table_.push_back({GateKind::kRZ, {i}, "Z"});
      table_.push_back({GateKind::kRY, {i}, "Y"});
      table_.push_back({GateKind::kRZ, {i}, "Z"});
    }
    for (int c = 0; c + 1 < qubits; ++c) chain_.emplace_back(c, c + 1);
    if (wrap) chain_.emplace_back(qubits - 1, 0);
    for (auto [ctrl, tgt] : chain_)
      table_.push_back({GateKind::kCRY, {ctrl, tgt}, "|1><1| x Y"});
  } else {
    for (int start : {0, 1})
      for (int a = start; a + 1 < qubits; a += 2) chain_.emplace_back(a, a + 1);
    for (auto [a, b] : chain_) {
      table_.push_back({GateKind::kRX, {a}, "X"});
      table_.push_back({GateKind::kRX, {b}, "X"});
      table_.push_back({GateKind::kRZZ, {a, b}, "ZZ"});
      table_.push_back({GateKind::kRZ, {a}, "Z"});
      table_.push_back({GateKind::kRZ, {b}, "Z"});
    }
  }
}

GateSequence::GateSequence(int dim, std::vector<SequenceGate> gates,
                           int n_params)
    : dim_(dim), n_params_(n_params), gates_(std::move(gates)) {
  param_to_gate_.assign(n_params_, -1);
  for (size_t g = 0; g < gates_.size(); ++g) {
    const int p = gates_[g].param_index;
    if (p >= 0) param_to_gate_[p] = static_cast<int>(g);
  }
}

int GateSequence::gate_of_param(int param_index) const {
  if (param_index < 0 || param_index >= n_params_)
    throw InvalidSpecError("parameter index out of range");
  return param_to_gate_[param_index];
}

CMat GateSequence::product_with_insertions(
    const std::vector<std::pair<int, int>>& insertions) const {
  CMat u = CMat::Identity(dim_, dim_);
  for (size_t g = 0; g < gates_.size(); ++g) {
    CMat m = gates_[g].matrix;
    for (auto [gi, power] : insertions)
      if (gi == static_cast<int>(g))
        for (int k = 0; k < power; ++k) m = m * gates_[g].generator;
    u = m * u;
  }
  return u;
}

CMat GateSequence::unitary() const { return product_with_insertions({}); }

CMat GateSequence::param_derivative(int param_index, int order) const {
  return product_with_insertions({{gate_of_param(param_index), order}});
}

CMat GateSequence::mixed_derivative(int param_i, int param_j) const {
  const int gi = gate_of_param(param_i);
  const int gj = gate_of_param(param_j);
  if (gi == gj) return param_derivative(param_i, 2);
  return product_with_insertions({{gi, 1}, {gj, 1}});
}

GateSequence build_sequence(const AnsatzLayout& layout, int layers,
                            const RVec& params) {
  const int ppl = layout.params_per_layer();
  if (params.size() != static_cast<Eigen::Index>(ppl) * layers)
    throw DimensionError("parameter vector length does not match layout");
  const int n = layout.qubits();
  const int dim = layout.dim();

  std::vector<SequenceGate> gates;
  for (int layer = 0; layer < layers; ++layer) {
    const int base = layer * ppl;
    if (layout.kind() == AnsatzKind::kHea) {
      for (int i = 0; i < n; ++i) {
        for (int s = 0; s < 3; ++s) {
          const int p = base + 3 * i + s;
          const CMat& sigma = (s == 1) ? pauli_y() : pauli_z();
          gates.push_back({embed_gate(rotation(sigma, params[p]), {i}, n),
                           embed_gate(-kI * sigma, {i}, n), p});
        }
      }
      const auto& chain = layout.chain();
      for (size_t c = 0; c < chain.size(); ++c) {
        const int p = base + 3 * n + static_cast<int>(c);
        const std::vector<int> wires{chain[c].first, chain[c].second};
        gates.push_back({embed_gate(cry(params[p]), wires, n),
                         embed_gate(cry_generator(), wires, n), p});
      }
    } else {
      const auto& blocks = layout.chain();
      static const CMat zz = kron(pauli_z(), pauli_z());
      for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const int p = base + 5 * static_cast<int>(bi);
        const auto [a, b] = blocks[bi];
        gates.push_back({embed_gate(rx(params[p]), {a}, n),
                         embed_gate(-kI * pauli_x(), {a}, n), p});
        gates.push_back({embed_gate(rx(params[p + 1]), {b}, n),
                         embed_gate(-kI * pauli_x(), {b}, n), p + 1});
        gates.push_back({embed_gate(rzz(params[p + 2]), {a, b}, n),
                         embed_gate(-kI * zz, {a, b}, n), p + 2});
        gates.push_back({embed_gate(rz(params[p + 3]), {a}, n),
                         embed_gate(-kI * pauli_z(), {a}, n), p + 3});
        gates.push_back({embed_gate(rz(params[p + 4]), {b}, n),
                         embed_gate(-kI * pauli_z(), {b}, n), p + 4});
      }
    }
  }
  return GateSequence(dim, std::move(gates),
                      static_cast<int>(params.size()));
}

CMat hea_layer(int qubits, const RVec& theta, bool wrap) {
  AnsatzLayout layout(AnsatzKind::kHea, qubits, wrap);
  return build_sequence(layout, 1, theta).unitary();
}

CMat checkerboard_layer(int qubits, const RVec& omega) {
  AnsatzLayout layout(AnsatzKind::kCheckerboard, qubits);
  return build_sequence(layout, 1, omega).unitary();
}

CMat stack_unitary(const AnsatzLayout& layout, int layers,
                   const RVec& params) {
  return build_sequence(layout, layers, params).unitary();
}

CMat param_derivative(const AnsatzLayout& layout, int layers,
                      const RVec& params, int param_index) {
  return build_sequence(layout, layers, params).param_derivative(param_index);
}

CMat param_second_derivative(const AnsatzLayout& layout, int layers,
                             const RVec& params, int param_index) {
  return build_sequence(layout, layers, params)
      .param_derivative(param_index, 2);
}

}  // namespace vqc
