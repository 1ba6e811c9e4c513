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

#include "ucrprep/gray.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ucrprep {

namespace {

// In-place unnormalized Walsh–Hadamard transform:
// out[m] = Σ_j (−1)^{popcount(j & m)} in[j].
void walsh_hadamard(std::vector<double> &v) {
  const std::size_t size = v.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) {
        const double a = v[i];
        const double b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
}

}  // namespace

int control_count(std::size_t length) {
  if (length == 0 || !std::has_single_bit(length)) {
    throw std::invalid_argument("angle vector length " +
                                std::to_string(length) +
                                " is not a power of two");
  }
  return std::countr_zero(length);
}

int gray_transition_bit(std::uint64_t t, int k) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t diff = gray(t & mask) ^ gray((t + 1) & mask);
  return std::countr_zero(diff);
}

int gray_sign(std::uint64_t row, std::uint64_t col) {
  return (std::popcount(col & gray(row)) & 1) ? -1 : 1;
}

std::vector<double> alpha_to_theta(std::span<const double> alpha) {
  const int k = control_count(alpha.size());
  std::vector<double> h(alpha.begin(), alpha.end());
  walsh_hadamard(h);
  const double scale = std::ldexp(1.0, -k);
  std::vector<double> theta(alpha.size());
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = scale * h[gray(i)];
  return theta;
}

std::vector<double> theta_to_alpha(std::span<const double> theta) {
  control_count(theta.size());
  std::vector<double> permuted(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) permuted[gray(i)] = theta[i];
  walsh_hadamard(permuted);
  return permuted;
}

std::vector<double> alpha_to_theta_dense(std::span<const double> alpha) {
  const int k = control_count(alpha.size());
  const double scale = std::ldexp(1.0, -k);
  std::vector<double> theta(alpha.size(), 0.0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) s += gray_sign(i, j) * alpha[j];
    theta[i] = scale * s;
  }
  return theta;
}

}  // namespace ucrprep
