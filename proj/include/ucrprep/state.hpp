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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ucrprep {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Tolerance on |‖a‖ − 1| accepted when a state is constructed.
inline constexpr double kNormTolerance = 1e-8;

/**
 * @brief Normalized pure state of an n-qubit register.
 *
 * Amplitude index i holds the coefficient of the basis label b_1 b_2 ... b_n,
 * the big-endian n-bit binary form of i. Qubit 1 is the most significant bit.
 * Instances are immutable after construction.
 */
class StateVector {
 public:
  /**
   * @brief Validate and wrap an amplitude array.
   *
   * Throws std::invalid_argument when the length is not 2^n, the vector is
   * zero, or the norm deviates from 1 by more than kNormTolerance and
   * @p normalize is false. With @p normalize set the amplitudes are divided
   * by their norm.
   */
  StateVector(int n, Amplitudes amplitudes, bool normalize = false);

  /// Computational basis state |index⟩.
  static StateVector basis(int n, std::uint64_t index);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

  bool operator==(const StateVector &) const = default;

 private:
  int n_;
  Amplitudes amplitudes_;
};

StateVector make_state(int n, Amplitudes amplitudes, bool normalize = false);

/// |⟨y|x⟩|, clamped to [0, 1].
double fidelity(const StateVector &x, const StateVector &y);

/// Complex inner product ⟨y|x⟩.
Complex inner(const StateVector &y, const StateVector &x);

/// ω_i = arg(a_i) in (−π, π]; zero amplitudes map to 0.
std::vector<double> phases(const StateVector &x);

/// Map an angle into (−π, π].
double wrap_phase(double angle);

/// Isotropic complex Gaussian draw, normalized. Deterministic for a seed.
StateVector random_state(int n, std::uint64_t seed);

}  // namespace ucrprep
