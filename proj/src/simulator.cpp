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

#include "ucrprep/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucrprep {

namespace {

std::size_t qubit_mask(int n, int q) {
  if (q < 1 || q > n) {
    throw std::out_of_range("qubit " + std::to_string(q) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  return std::size_t{1} << (n - q);
}

void check_width(const Amplitudes &amps, int n) {
  if (amps.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("amplitude array does not match qubit count");
  }
}

// Visits every index pair (i0, i1 = i0 | mask) with the mask bit clear in i0.
template <typename F>
void for_each_pair(std::size_t dim, std::size_t mask, F &&f) {
  for (std::size_t base = 0; base < dim; base += 2 * mask) {
    for (std::size_t i0 = base; i0 < base + mask; ++i0) f(i0, i0 | mask);
  }
}

// Multiplies by [[c + i·s·az, s·ay], [−s·ay, c − i·s·az]] with real
// arithmetic; std::complex products take the slow Annex G path.
struct RotCoeffs {
  double c, say, saz;
};

RotCoeffs rot_coeffs(const RotationAxis &axis, double angle) {
  const double s = std::sin(angle / 2.0);
  return {std::cos(angle / 2.0), s * axis.ay(), s * axis.az()};
}

inline void rotate_pair(Complex &x0, Complex &x1, const RotCoeffs &m) {
  const double r0 = x0.real(), j0 = x0.imag(), r1 = x1.real(), j1 = x1.imag();
  x0 = Complex(m.c * r0 - m.saz * j0 + m.say * r1, m.c * j0 + m.saz * r0 + m.say * j1);
  x1 = Complex(m.c * r1 + m.saz * j1 - m.say * r0, m.c * j1 - m.saz * r1 - m.say * j0);
}

}  // namespace

namespace kernels {

void apply_gate(Amplitudes &amps, int n, const Gate &g) {
  check_width(amps, n);
  if (const auto *cx = std::get_if<Cnot>(&g)) {
    const std::size_t cmask = qubit_mask(n, cx->control);
    const std::size_t tmask = qubit_mask(n, cx->target);
    if (cmask == tmask) throw std::out_of_range("CNOT control equals target");
    // Walk indices with both bits clear, then swap within the control-set half.
    const std::size_t lo = std::min(cmask, tmask), hi = std::max(cmask, tmask);
    for (std::size_t r = 0; r < amps.size() / 4; ++r) {
      std::size_t i = ((r & ~(lo - 1)) << 1) | (r & (lo - 1));
      i = ((i & ~(hi - 1)) << 1) | (i & (hi - 1));
      std::swap(amps[i | cmask], amps[i | cmask | tmask]);
    }
    return;
  }
  const Rot &r = std::get<Rot>(g);
  const RotCoeffs m = rot_coeffs(r.axis, r.angle);
  for_each_pair(amps.size(), qubit_mask(n, r.target),
                [&](std::size_t i0, std::size_t i1) { rotate_pair(amps[i0], amps[i1], m); });
}

void apply_circuit(Amplitudes &amps, const Circuit &c) {
  for (const Gate &g : c.gates()) apply_gate(amps, c.num_qubits(), g);
}

void apply_ucr(Amplitudes &amps, int n, const UcrGate &g) {
  check_width(amps, n);
  validate_ucr(g, n);
  const int k = g.k();
  std::vector<std::size_t> cmasks(k);
  for (int p = 0; p < k; ++p) cmasks[p] = qubit_mask(n, g.controls[p]);
  std::vector<RotCoeffs> blocks;
  blocks.reserve(g.angles.size());
  for (double a : g.angles) blocks.push_back(rot_coeffs(g.axis, a));

  for_each_pair(amps.size(), qubit_mask(n, g.target),
                [&](std::size_t i0, std::size_t i1) {
                  std::size_t pattern = 0;
                  for (int p = 0; p < k; ++p) {
                    pattern = (pattern << 1) | ((i0 & cmasks[p]) ? 1 : 0);
                  }
                  rotate_pair(amps[i0], amps[i1], blocks[pattern]);
                });
}

}  // namespace kernels

StateVector apply_gate(const StateVector &x, const Gate &g) {
  Amplitudes amps(x.amplitudes().begin(), x.amplitudes().end());
  kernels::apply_gate(amps, x.num_qubits(), g);
  return StateVector(x.num_qubits(), std::move(amps));
}

StateVector apply_circuit(const StateVector &x, const Circuit &c) {
  if (x.num_qubits() != c.num_qubits()) {
    throw std::invalid_argument("circuit acts on " +
                                std::to_string(c.num_qubits()) +
                                " qubits, state has " +
                                std::to_string(x.num_qubits()));
  }
  Amplitudes amps(x.amplitudes().begin(), x.amplitudes().end());
  kernels::apply_circuit(amps, c);
  return StateVector(x.num_qubits(), std::move(amps));
}

StateVector apply_ucr(const StateVector &x, const UcrGate &g) {
  Amplitudes amps(x.amplitudes().begin(), x.amplitudes().end());
  kernels::apply_ucr(amps, x.num_qubits(), g);
  return StateVector(x.num_qubits(), std::move(amps));
}

Eigen::MatrixXcd circuit_unitary(const Circuit &c) {
  const int n = c.num_qubits();
  if (n > kUnitaryCap) {
    throw std::invalid_argument("circuit_unitary is capped at " +
                                std::to_string(kUnitaryCap) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  Amplitudes column(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(column.begin(), column.end(), Complex{});
    column[j] = 1.0;
    kernels::apply_circuit(column, c);
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = column[i];
  }
  return u;
}

}  // namespace ucrprep
