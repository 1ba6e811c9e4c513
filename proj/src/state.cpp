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

#include "ucrprep/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace ucrprep {

namespace {

std::size_t checked_dim(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("qubit count must lie in [1, 30], got " +
                                std::to_string(n));
  }
  return std::size_t{1} << n;
}

double norm2(std::span<const Complex> a) {
  double s = 0.0;
  for (const auto &z : a) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

StateVector::StateVector(int n, Amplitudes amplitudes, bool normalize)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  const std::size_t dim = checked_dim(n);
  if (amplitudes_.size() != dim) {
    throw std::invalid_argument("expected " + std::to_string(dim) +
                                " amplitudes for n=" + std::to_string(n) +
                                ", got " + std::to_string(amplitudes_.size()));
  }
  const double norm = norm2(amplitudes_);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("state vector is zero or not finite");
  }
  if (normalize) {
    for (auto &z : amplitudes_) z /= norm;
  } else if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state vector norm " + std::to_string(norm) +
                                " differs from 1");
  }
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  const std::size_t dim = checked_dim(n);
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for n=" + std::to_string(n));
  }
  Amplitudes a(dim);
  a[index] = 1.0;
  return StateVector(n, std::move(a));
}

StateVector make_state(int n, Amplitudes amplitudes, bool normalize) {
  return StateVector(n, std::move(amplitudes), normalize);
}

Complex inner(const StateVector &y, const StateVector &x) {
  if (x.num_qubits() != y.num_qubits()) {
    throw std::invalid_argument("qubit count mismatch: " +
                                std::to_string(x.num_qubits()) + " vs " +
                                std::to_string(y.num_qubits()));
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += std::conj(y[i]) * x[i];
  return s;
}

double fidelity(const StateVector &x, const StateVector &y) {
  // |⟨y|x⟩| = |⟨x|y⟩|; computing via the same ordered sum keeps it symmetric.
  const Complex s = inner(x, y);
  return std::clamp(std::abs(s), 0.0, 1.0);
}

double wrap_phase(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(angle, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

std::vector<double> phases(const StateVector &x) {
  std::vector<double> out(x.dim(), 0.0);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (std::abs(x[i]) > 0.0) out[i] = wrap_phase(std::arg(x[i]));
  }
  return out;
}

StateVector random_state(int n, std::uint64_t seed) {
  const std::size_t dim = checked_dim(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Amplitudes a(dim);
  for (auto &z : a) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  return StateVector(n, std::move(a), /*normalize=*/true);
}

}  // namespace ucrprep
