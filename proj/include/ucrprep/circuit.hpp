// Copyright 2026 The ucrprep Authors
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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace ucrprep {

/// Rotation axis (0, a_y, a_z) in the y–z plane.
class RotationAxis {
 public:
  /// Throws std::invalid_argument unless a_x = 0 and a_y² + a_z² = 1 within
  /// 1e-12.
  RotationAxis(double ax, double ay, double az);

  static RotationAxis y() { return RotationAxis(0.0, 1.0, 0.0); }
  static RotationAxis z() { return RotationAxis(0.0, 0.0, 1.0); }

  double ay() const { return ay_; }
  double az() const { return az_; }
  bool is_y() const { return ay_ == 1.0 && az_ == 0.0; }
  bool is_z() const { return ay_ == 0.0 && az_ == 1.0; }

  bool operator==(const RotationAxis &) const = default;

 private:
  double ay_;
  double az_;
};

/// R_a(α) = cos(α/2)·I + i·sin(α/2)·(a·σ).
Eigen::Matrix2cd rotation_matrix(const RotationAxis &axis, double angle);

/// Qubits are 1-based; qubit 1 is the most significant index bit.
struct Cnot {
  int control;
  int target;
  bool operator==(const Cnot &) const = default;
};

struct Rot {
  RotationAxis axis;
  int target;
  double angle;
  bool operator==(const Rot &) const = default;
};

using Gate = std::variant<Cnot, Rot>;

/**
 * @brief Uniformly controlled rotation.
 *
 * For each control pattern i, read big-endian over @c controls (controls[0]
 * is the most significant bit), R_axis(angles[i]) is applied to @c target.
 */
struct UcrGate {
  std::vector<int> controls;
  int target;
  RotationAxis axis;
  std::vector<double> angles;

  int k() const { return static_cast<int>(controls.size()); }
};

struct GateCounts {
  std::size_t cnot = 0;
  std::size_t rot = 0;
  bool operator==(const GateCounts &) const = default;
};

/// Time-ordered gate list over n qubits; gates[0] is applied first.
class Circuit {
 public:
  explicit Circuit(int n);

  int num_qubits() const { return n_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws std::out_of_range for qubits outside [1, n] or a CNOT whose
  /// control equals its target.
  void add(const Gate &g);
  void cnot(int control, int target) { add(Cnot{control, target}); }
  void rot(const RotationAxis &axis, int target, double angle) {
    add(Rot{axis, target, angle});
  }
  void append(const Circuit &other);
  void reserve(std::size_t count) { gates_.reserve(count); }

  bool operator==(const Circuit &) const = default;

 private:
  int n_;
  std::vector<Gate> gates_;
};

void validate_ucr(const UcrGate &g, int n);

/**
 * @brief Lower a uniformly controlled rotation onto CNOT + rotation gates.
 *
 * k = 0 gives one rotation. For k ≥ 1 the ladder is Rot(θ_1), CNOT, Rot(θ_2),
 * CNOT, ..., Rot(θ_{2^k}), CNOT with θ = alpha_to_theta(angles). The CNOT
 * after rotation t is controlled by the control whose bit flips between
 * gray(t−1) and gray(t) (cyclically), so the last one lands on controls[0].
 * The mirrored form is the same list in reverse order and starts with a CNOT.
 */
void lower_ucr(const UcrGate &g, bool mirrored, Circuit &out);
Circuit lower_ucr(const UcrGate &g, int n, bool mirrored = false);

inline constexpr int kDefaultUcrMatrixCap = 10;

/// diag(R(α_0), ..., R(α_{2^k−1})) over (controls..., target), target least
/// significant. Throws std::invalid_argument when k exceeds @p cap.
Eigen::MatrixXcd ucr_matrix(const UcrGate &g, int cap = kDefaultUcrMatrixCap);

/// Reverse order and negate rotation angles.
Circuit dagger(const Circuit &c);

struct SimplifyOptions {
  /// When set, rotations with |angle| ≤ *prune_atol are dropped.
  std::optional<double> prune_atol;
};

/// Cancel adjacent identical CNOTs and merge adjacent rotations sharing axis
/// and target, until no rule applies.
Circuit simplify(const Circuit &c, const SimplifyOptions &options = {});

GateCounts gate_counts(const Circuit &c);

}  // namespace ucrprep
