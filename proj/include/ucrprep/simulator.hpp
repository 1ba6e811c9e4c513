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

#include "ucrprep/circuit.hpp"
#include "ucrprep/state.hpp"

namespace ucrprep {

inline constexpr int kUnitaryCap = 10;

// In-place kernels on raw amplitude arrays of length 2^n.
namespace kernels {
void apply_gate(Amplitudes &amps, int n, const Gate &g);
void apply_circuit(Amplitudes &amps, const Circuit &c);
void apply_ucr(Amplitudes &amps, int n, const UcrGate &g);
}  // namespace kernels

StateVector apply_gate(const StateVector &x, const Gate &g);
StateVector apply_circuit(const StateVector &x, const Circuit &c);

/// Applies the block-diagonal definition directly, without lowering.
StateVector apply_ucr(const StateVector &x, const UcrGate &g);

/// Column j is the circuit applied to basis state |j⟩. Throws
/// std::invalid_argument for more than kUnitaryCap qubits.
Eigen::MatrixXcd circuit_unitary(const Circuit &c);

}  // namespace ucrprep
