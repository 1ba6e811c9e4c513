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

#include <cstdint>
#include <optional>

#include "ucrprep/angles.hpp"
#include "ucrprep/circuit.hpp"
#include "ucrprep/state.hpp"

namespace ucrprep {

/// Gate-count bounds for transforming one n-qubit state into another.
struct BoundReport {
  int n = 0;
  std::int64_t upper_cnot = 0;  // 2^{n+2} − 4n − 4
  std::int64_t upper_rot = 0;   // 2^{n+2} − 5
  std::int64_t lower_cnot = 0;  // ⌈(2^{n+1} − 3n − 2) / 4⌉
  std::int64_t lower_rot = 0;   // 2^{n+1} − 2
  /// Reference CNOT count of the incomplete QR route, 12.6 · 2^n.
  double qr_comparison_cnot = 0.0;
};

/// Throws std::invalid_argument for n outside [1, 30].
BoundReport bounds(int n);

struct SynthesisOptions {
  /// Rotations with |angle| ≤ prune_atol are removed when set.
  std::optional<double> prune_atol;
  /// prepare() only: run the cascade on the qubit-reversed register, so qubit 1
  /// is disentangled first and the junction merge lands on qubit n. Same counts.
  bool mirror = false;
};

struct SynthesisResult {
  Circuit circuit;
  /// φ such that simulating the circuit gives e^{iφ} times the target.
  double residual_phase = 0.0;
  GateCounts counts;
  BoundReport bounds;
};

/**
 * @brief Circuit taking x to e^{iφ}|0...0⟩.
 *
 * Levels run from the last qubit upward; each level is a z-UCR followed by a
 * y-UCR on the same target. The z ladder is lowered normally and the y ladder
 * mirrored so their facing CNOTs cancel. φ is the mean phase of x.
 */
SynthesisResult disentangle(const StateVector &x,
                            const SynthesisOptions &options = {});

/// Circuit taking x to e^{iφ}|pivot⟩: the y-angles of each level whose
/// target bit is set in @p pivot are shifted by π.
SynthesisResult disentangle_to(const StateVector &x, std::uint64_t pivot,
                               const SynthesisOptions &options = {});

/// Circuit taking a to e^{iφ} b: disentangle(a) followed by the inverse of
/// disentangle(b), simplified. Throws std::invalid_argument on width mismatch.
SynthesisResult prepare(const StateVector &a, const StateVector &b,
                        const SynthesisOptions &options = {});

/// Circuit taking |index⟩ to e^{iφ} b using only the inverse half.
SynthesisResult prepare_from_basis(std::uint64_t index, const StateVector &b,
                                   const SynthesisOptions &options = {});

/// Append the lowered cascade for @p schedule to @p out.
void append_cascade(const AngleSchedule &schedule, Circuit &out);

}  // namespace ucrprep
