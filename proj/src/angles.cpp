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

#include "ucrprep/angles.hpp"

#include <cmath>

namespace ucrprep {

NormTree norm_tree(const StateVector &x) {
  NormTree tree;
  tree.n = x.num_qubits();
  tree.levels.reserve(tree.n + 1);

  std::vector<double> squares(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) squares[i] = std::norm(x[i]);

  // Sums of squares are carried upward; roots are taken per level so that
  // every level is reduced from exact sums rather than rounded norms.
  auto roots = [](const std::vector<double> &sq) {
    std::vector<double> r(sq.size());
    for (std::size_t i = 0; i < sq.size(); ++i) r[i] = std::sqrt(sq[i]);
    return r;
  };
  tree.levels.push_back(roots(squares));
  for (int k = 1; k <= tree.n; ++k) {
    std::vector<double> next(squares.size() / 2);
    for (std::size_t j = 0; j < next.size(); ++j) {
      next[j] = squares[2 * j] + squares[2 * j + 1];
    }
    squares = std::move(next);
    tree.levels.push_back(roots(squares));
  }
  return tree;
}

std::vector<std::vector<double>> y_angles(const NormTree &tree) {
  std::vector<std::vector<double>> out;
  out.reserve(tree.n);
  for (int k = 1; k <= tree.n; ++k) {
    const auto &below = tree.levels[k - 1];
    std::vector<double> level(below.size() / 2);
    for (std::size_t j = 0; j < level.size(); ++j) {
      // 2·asin(upper / sqrt(lower² + upper²)) written as an atan2, which is
      // well conditioned near ratio 1 and gives 0 for an all-zero block.
      level[j] = 2.0 * std::atan2(below[2 * j + 1], below[2 * j]);
    }
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<std::vector<double>> y_angles(const StateVector &x) {
  return y_angles(norm_tree(x));
}

std::vector<std::vector<double>> z_angles(const StateVector &x) {
  const int n = x.num_qubits();
  std::vector<double> sums = phases(x);
  std::vector<std::vector<double>> out;
  out.reserve(n);
  for (int k = 1; k <= n; ++k) {
    // sums[j] is the phase sum over a block of 2^{k-1} amplitudes.
    const double block = std::ldexp(1.0, k - 1);
    std::vector<double> level(sums.size() / 2);
    std::vector<double> next(sums.size() / 2);
    for (std::size_t j = 0; j < level.size(); ++j) {
      level[j] = (sums[2 * j + 1] - sums[2 * j]) / block;
      next[j] = sums[2 * j] + sums[2 * j + 1];
    }
    out.push_back(std::move(level));
    sums = std::move(next);
  }
  return out;
}

AngleSchedule angle_schedule(const StateVector &x) {
  return AngleSchedule{x.num_qubits(), z_angles(x), y_angles(x)};
}

}  // namespace ucrprep
