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

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: rotations are rebuilt from the Pauli matrices, Gray codes and
// parities are recomputed bit by bit.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ucrprep/circuit.hpp"
#include "ucrprep/state.hpp"

namespace ucrprep::testing {

inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0.0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0.0;
  return m;
}

inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// exp(+i a·σ α/2) expanded as I cos(α/2) + i (a·σ) sin(α/2).
inline Eigen::Matrix2cd reference_rotation(double ay, double az, double angle) {
  const std::complex<double> i(0.0, 1.0);
  const Eigen::Matrix2cd generator = ay * pauli_y() + az * pauli_z();
  return Eigen::Matrix2cd::Identity() * std::cos(angle / 2) +
         i * generator * std::sin(angle / 2);
}

inline std::uint64_t slow_gray(std::uint64_t m) {
  std::uint64_t g = 0;
  for (int b = 0; b < 63; ++b) {
    const std::uint64_t bit = (m >> b) & 1;
    const std::uint64_t next = (m >> (b + 1)) & 1;
    g |= (bit ^ next) << b;
  }
  return g;
}

inline int slow_parity(std::uint64_t v) {
  int p = 0;
  while (v) {
    p ^= static_cast<int>(v & 1);
    v >>= 1;
  }
  return p;
}

/// Integer sign matrix S_ij = (−1)^{b_j · g_i}, built without library code.
inline std::vector<std::vector<int>> reference_sign_matrix(int k) {
  const std::size_t size = std::size_t{1} << k;
  std::vector<std::vector<int>> s(size, std::vector<int>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      s[i][j] = slow_parity(j & slow_gray(i)) ? -1 : 1;
    }
  }
  return s;
}

inline std::vector<double> reference_alpha_to_theta(const std::vector<double> &alpha, int k) {
  const auto s = reference_sign_matrix(k);
  std::vector<double> theta(alpha.size(), 0.0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) theta[i] += s[i][j] * alpha[j];
    theta[i] /= static_cast<double>(alpha.size());
  }
  return theta;
}

/// Dense 2^n × 2^n matrix of a single gate, by explicit basis enumeration.
inline Eigen::MatrixXcd reference_gate_matrix(int n, const Gate &g) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  auto bit_of = [n](std::size_t index, int qubit) { return (index >> (n - qubit)) & 1; };
  if (const auto *cx = std::get_if<Cnot>(&g)) {
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t row = col;
      if (bit_of(col, cx->control)) row ^= std::size_t{1} << (n - cx->target);
      m(row, col) = 1.0;
    }
    return m;
  }
  const Rot &r = std::get<Rot>(g);
  const Eigen::Matrix2cd u = reference_rotation(r.axis.ay(), r.axis.az(), r.angle);
  const std::size_t tmask = std::size_t{1} << (n - r.target);
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      if ((row & ~tmask) != (col & ~tmask)) continue;
      m(row, col) = u(bit_of(row, r.target), bit_of(col, r.target));
    }
  }
  return m;
}

inline Eigen::MatrixXcd reference_circuit_matrix(const Circuit &c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate &g : c.gates()) u = reference_gate_matrix(c.num_qubits(), g) * u;
  return u;
}

/// Block-diagonal UCR over all n qubits for arbitrary control placement.
inline Eigen::MatrixXcd reference_ucr_full(int n, const UcrGate &g) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  auto bit_of = [n](std::size_t index, int qubit) { return (index >> (n - qubit)) & 1; };
  const std::size_t tmask = std::size_t{1} << (n - g.target);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pattern = 0;
    for (int q : g.controls) pattern = (pattern << 1) | bit_of(col, q);
    const Eigen::Matrix2cd u =
        reference_rotation(g.axis.ay(), g.axis.az(), g.angles[pattern]);
    for (std::size_t row : {col & ~tmask, col | tmask}) {
      m(row, col) = u(bit_of(row, g.target), bit_of(col, g.target));
    }
  }
  return m;
}

inline double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const StateVector &a, const StateVector &b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline RotationAxis random_axis(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
  const double t = u(rng);
  const double ay = std::cos(t);
  const double az = std::sin(t);
  const double norm = std::sqrt(ay * ay + az * az);
  return RotationAxis(0.0, ay / norm, az / norm);
}

inline std::vector<double> random_angles(std::mt19937_64 &rng, std::size_t count) {
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  std::vector<double> a(count);
  for (double &x : a) x = u(rng);
  return a;
}

inline Circuit random_circuit(std::mt19937_64 &rng, int n, std::size_t gates) {
  Circuit c(n);
  std::uniform_int_distribution<int> qubit(1, n);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (std::size_t i = 0; i < gates; ++i) {
    const int k = n == 1 ? 1 + kind(rng) % 3 : kind(rng);
    if (k == 0) {
      const int control = qubit(rng);
      int target = qubit(rng);
      while (target == control) target = qubit(rng);
      c.cnot(control, target);
    } else if (k == 1) {
      c.rot(RotationAxis::y(), qubit(rng), angle(rng));
    } else if (k == 2) {
      c.rot(RotationAxis::z(), qubit(rng), angle(rng));
    } else {
      c.rot(random_axis(rng), qubit(rng), angle(rng));
    }
  }
  return c;
}

}  // namespace ucrprep::testing
