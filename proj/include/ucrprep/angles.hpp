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

#include <vector>

#include "ucrprep/state.hpp"

namespace ucrprep {

/**
 * @brief Pairwise block norms of a state.
 *
 * levels[k] has 2^{n−k} entries; entry j is the 2-norm of amplitudes
 * [j·2^k, (j+1)·2^k). levels[0] holds |a_i| and levels[n] the total norm.
 */
struct NormTree {
  int n = 0;
  std::vector<std::vector<double>> levels;

  const std::vector<double> &level(int k) const { return levels.at(k); }
  double root() const { return levels.back().front(); }
};

/**
 * @brief Rotation angles for one disentangling cascade.
 *
 * z_levels[k-1] and y_levels[k-1] hold the 2^{n−k} angles of the level-k
 * uniformly controlled rotation, which targets qubit n−k+1 and is controlled
 * by qubits 1..n−k. Entry j pairs with control pattern j (big-endian).
 */
struct AngleSchedule {
  int n = 0;
  std::vector<std::vector<double>> z_levels;
  std::vector<std::vector<double>> y_levels;

  const std::vector<double> &z(int k) const { return z_levels.at(k - 1); }
  const std::vector<double> &y(int k) const { return y_levels.at(k - 1); }
};

NormTree norm_tree(const StateVector &x);

/// Phase-equalizing angles: mean phase of the upper half-block minus the mean
/// phase of the lower half-block, zero amplitudes counting as phase 0.
std::vector<std::vector<double>> z_angles(const StateVector &x);

/// Magnitude-zeroing angles 2·asin(‖upper half‖ / ‖block‖), in [0, π].
/// An all-zero block yields 0.
std::vector<std::vector<double>> y_angles(const StateVector &x);
std::vector<std::vector<double>> y_angles(const NormTree &tree);

AngleSchedule angle_schedule(const StateVector &x);

}  // namespace ucrprep
