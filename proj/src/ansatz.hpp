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

#include <string>
#include <vector>

#include "linalg.hpp"

namespace vqc {

enum class AnsatzKind { kHea, kCheckerboard };

std::string to_string(AnsatzKind kind);
AnsatzKind ansatz_kind_from_string(const std::string& name);

/// One slot of the layout's parameter table: which gate a parameter drives
/// and the Pauli string generating it.
struct ParamSlot {
  GateKind gate = GateKind::kRZ;
  std::vector<int> wires;
  std::string generator;  // e.g. "Z", "Y", "ZZ", "|1><1| x Y"
};

/// Declarative description of one ansatz layer family.
///
/// Parameter order within a layer is canonical and load-bearing for every
/// derivative index in this library:
///   HEA:          (Z1, Y, Z2) triples by wire, then the CRY chain gates by
///                 chain position (control i -> target i+1, wrap n-1 -> 0).
///   checkerboard: per block (x_a, x_b, zz, z_a, z_b); blocks of the first
///                 sub-column (pairs (0,1),(2,3),...) then the second
///                 sub-column (pairs (1,2),(3,4),...).
class AnsatzLayout {
 public:
  AnsatzLayout(AnsatzKind kind, int qubits, bool wrap = true);

  AnsatzKind kind() const { return kind_; }
  int qubits() const { return qubits_; }
  bool wrap() const { return wrap_; }
  int dim() const { return 1 << qubits_; }
  int params_per_layer() const { return static_cast<int>(table_.size()); }
  const std::vector<ParamSlot>& param_table() const { return table_; }

  /// Two-qubit block pairs of each checkerboard sub-column.
  const std::vector<std::pair<int, int>>& chain() const { return chain_; }

 private:
  AnsatzKind kind_;
  int qubits_;
  bool wrap_;
  std::vector<ParamSlot> table_;
  std::vector<std::pair<int, int>> chain_;  // CRY chain or block pairs
};

/// A parameterized circuit flattened to gate granularity, in circuit-time
/// order (element 0 acts first). Derivatives use the effective right
/// generator E of each gate: dG/dtheta = G * E with E constant, which holds
/// for plain rotations (E = -i sigma) and for CRY (E = |1><1| (x) (-i Y)).
struct SequenceGate {
  CMat matrix;     // embedded, dim 2^n
  CMat generator;  // embedded E; empty for fixed gates
  int param_index = -1;
};

class GateSequence {
 public:
  GateSequence(int dim, std::vector<SequenceGate> gates, int n_params);

  int dim() const { return dim_; }
  int n_params() const { return n_params_; }
  const std::vector<SequenceGate>& gates() const { return gates_; }

  /// Product of all gates (later gates left-multiply).
  CMat unitary() const;

  /// Exact dU/dtheta_j (order 1) or d^2U/dtheta_j^2 (order 2) by generator
  /// insertion at the gate owning parameter j.
  CMat param_derivative(int param_index, int order = 1) const;

  /// Mixed second derivative d^2U/(dtheta_i dtheta_j), i != j.
  CMat mixed_derivative(int param_i, int param_j) const;

  /// Gate index owning a parameter.
  int gate_of_param(int param_index) const;

 private:
  CMat product_with_insertions(const std::vector<std::pair<int, int>>&
                                   insertions) const;  // (gate idx, E power)

  int dim_;
  int n_params_;
  std::vector<SequenceGate> gates_;
  std::vector<int> param_to_gate_;
};

/// Single HEA layer: per wire RZ(z1), RY(y), RZ(z2) in circuit time, then the
/// CRY daisy chain. Slice length must equal layout.params_per_layer().
CMat hea_layer(int qubits, const RVec& theta, bool wrap = true);

/// Single checkerboard layer: first sub-column of blocks on (0,1),(2,3),...,
/// then second sub-column on (1,2),(3,4),.... Block = (RZ (x) RZ) RZZ
/// (RX (x) RX) in matrix order (RX first in circuit time).
CMat checkerboard_layer(int qubits, const RVec& omega);

/// Flattens `layers` consecutive layers of the layout into a GateSequence.
GateSequence build_sequence(const AnsatzLayout& layout, int layers,
                            const RVec& params);

/// Product of j layer unitaries; layer i+1 is applied after layer i in
/// circuit time (left-multiplies).
CMat stack_unitary(const AnsatzLayout& layout, int layers, const RVec& params);

/// Exact per-parameter matrix derivative of the stack unitary.
CMat param_derivative(const AnsatzLayout& layout, int layers,
                      const RVec& params, int param_index);

/// Exact second derivative w.r.t. one parameter. For the checkerboard this
/// equals -stack_unitary identically.
CMat param_second_derivative(const AnsatzLayout& layout, int layers,
                             const RVec& params, int param_index);

}  // namespace vqc
