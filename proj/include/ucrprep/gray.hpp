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
#include <span>
#include <vector>

namespace ucrprep {

/// Binary reflected Gray code g_m = m XOR (m >> 1).
constexpr std::uint64_t gray(std::uint64_t m) { return m ^ (m >> 1); }

/// Inverse of gray(): the m with gray(m) == g.
constexpr std::uint64_t gray_inverse(std::uint64_t g) {
  for (std::uint64_t shift = 1; shift < 64; shift <<= 1) g ^= g >> shift;
  return g;
}

/// Index of the single bit that differs between g_t and g_{t+1 mod 2^k}.
int gray_transition_bit(std::uint64_t t, int k);

/// Number of controls k for an angle vector of length 2^k. Throws
/// std::invalid_argument when the length is not a power of two.
int control_count(std::size_t length);

/// Sign matrix entry (−1)^{popcount(col & gray(row))} for 0-based row/col.
int gray_sign(std::uint64_t row, std::uint64_t col);

/**
 * @brief Ladder angles θ = M α with M_ij = 2^{-k} (−1)^{b_{j-1} · g_{i-1}}.
 *
 * O(k 2^k): a Walsh–Hadamard butterfly followed by the Gray output
 * permutation.
 */
std::vector<double> alpha_to_theta(std::span<const double> alpha);

/// Exact inverse of alpha_to_theta, α = 2^k Mᵀ θ.
std::vector<double> theta_to_alpha(std::span<const double> theta);

/// Dense O(4^k) evaluation of θ = M α. Reference path for tests.
std::vector<double> alpha_to_theta_dense(std::span<const double> alpha);

}  // namespace ucrprep
