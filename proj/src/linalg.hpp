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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace vqc {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// Pauli matrices and common fixed gates.
const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();
const CMat& cnot();

/// Rotation convention used throughout: R_sigma(theta) = exp(-i theta sigma),
/// full angle, no half-angle factor. `sigma` must be an involution
/// (sigma^2 = I), which holds for every Pauli string.
CMat rotation(const CMat& sigma, double theta);

CMat rx(double theta);
CMat ry(double theta);
CMat rz(double theta);
CMat rzz(double theta);

/// Controlled-RY in block form I_2 (+) RY(theta), control = first tensor
/// factor (the more significant wire of the pair).
CMat cry(double theta);

enum class GateKind {
  kRX,
  kRY,
  kRZ,
  kRZZ,
  kCRY,
  kCNOT,
  kPauliX,
  kPauliY,
  kPauliZ,
  kControlled,  // k-controlled 2x2 base
};

/// Declarative gate description. `wires` are logical qubit indices used when
/// the gate is embedded into a register; `angle` is ignored by fixed gates.
struct GateSpec {
  GateKind kind = GateKind::kRZ;
  double angle = 0.0;
  std::vector<int> wires;
  // Only for kControlled:
  CMat base;
  int controls = 1;
};

/// Realizes a GateSpec as its dense unitary (2x2, 4x4, or 2^(k+1) for
/// kControlled). Throws InvalidSpecError for malformed specs.
CMat make_gate(const GateSpec& spec);

/// Standard Kronecker product, dim = a.dim * b.dim.
CMat kron(const CMat& a, const CMat& b);

/// Embeds gate `g` (dim 2^m) acting on `wires` (m distinct indices < n) into
/// the 2^n register. Wire 0 is the most significant tensor factor. Supports
/// arbitrary, including non-adjacent and descending, wire lists.
CMat embed_gate(const CMat& g, const std::vector<int>& wires, int n);

/// Hilbert-Schmidt overlap Tr(a^dag b), no normalization.
Complex hs_overlap(const CMat& a, const CMat& b);

/// A k-controlled single-qubit gate I_{2^(k+1)-2} (+) base, with metadata.
struct TargetGate {
  CMat matrix;
  CMat base;
  int controls = 0;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Builds I_{2^(k+1)-2} (+) base for a unitary 2x2 `base` and k >= 1 controls.
TargetGate make_target(const CMat& base, int controls);

/// k-Toffoli: X with k controls (n = k+1 qubits).
TargetGate toffoli(int controls);

/// max |(U^dag U - I)_ij|
double unitarity_defect(const CMat& u);
bool is_unitary(const CMat& u, double tol = 1e-10);

/// If max|u - e^{i alpha} I| < tol (alpha read off the first diagonal entry),
/// returns alpha; otherwise nullopt.
std::optional<double> identity_phase(const CMat& u, double tol);

inline bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace vqc
