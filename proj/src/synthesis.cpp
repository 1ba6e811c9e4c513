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

#include "ucrprep/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucrprep {

BoundReport bounds(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("bounds need n in [1, 30], got " +
                                std::to_string(n));
  }
  const std::int64_t pow_n1 = std::int64_t{1} << (n + 1);
  BoundReport r;
  r.n = n;
  r.upper_cnot = 2 * pow_n1 - 4 * n - 4;
  r.upper_rot = 2 * pow_n1 - 5;
  r.lower_rot = pow_n1 - 2;
  const std::int64_t numer = pow_n1 - 3 * n - 2;
  r.lower_cnot = numer <= 0 ? 0 : (numer + 3) / 4;
  r.qr_comparison_cnot = 12.6 * std::ldexp(1.0, n);
  return r;
}

void append_cascade(const AngleSchedule &schedule, Circuit &out) {
  const int n = schedule.n;
  std::vector<int> controls;
  for (int k = 1; k <= n; ++k) {
    const int target = n - k + 1;
    controls.resize(target - 1);
    std::iota(controls.begin(), controls.end(), 1);
    lower_ucr(UcrGate{controls, target, RotationAxis::z(), schedule.z(k)},
              /*mirrored=*/false, out);
    lower_ucr(UcrGate{controls, target, RotationAxis::y(), schedule.y(k)},
              /*mirrored=*/true, out);
  }
}

namespace {

SynthesisResult finish(Circuit circuit, double phase) {
  SynthesisResult r{std::move(circuit), wrap_phase(phase), {}, {}};
  r.counts = gate_counts(r.circuit);
  r.bounds = bounds(r.circuit.num_qubits());
  return r;
}

// Relabels qubit q as n+1-q in both states and circuits.
StateVector reverse_qubits(const StateVector &x) {
  const int n = x.num_qubits();
  Amplitudes out(x.dim());
  for (std::uint64_t i = 0; i < x.dim(); ++i) {
    std::uint64_t j = 0;
    for (int b = 0; b < n; ++b) j |= ((i >> b) & 1) << (n - 1 - b);
    out[j] = x[i];
  }
  return StateVector(n, std::move(out));
}

Circuit reverse_qubits(const Circuit &c) {
  const int n = c.num_qubits();
  Circuit out(n);
  out.reserve(c.size());
  for (const Gate &g : c.gates()) {
    if (const auto *cx = std::get_if<Cnot>(&g)) {
      out.cnot(n + 1 - cx->control, n + 1 - cx->target);
    } else {
      const auto &r = std::get<Rot>(g);
      out.rot(r.axis, n + 1 - r.target, r.angle);
    }
  }
  return out;
}

double mean_phase(const StateVector &x) {
  const auto w = phases(x);
  return std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
}

}  // namespace

SynthesisResult disentangle_to(const StateVector &x, std::uint64_t pivot,
                               const SynthesisOptions &options) {
  const int n = x.num_qubits();
  if (pivot >= x.dim()) {
    throw std::out_of_range("basis index " + std::to_string(pivot) +
                            " out of range for n=" + std::to_string(n));
  }
  AngleSchedule schedule = angle_schedule(x);
  // Level k targets the qubit of weight 2^{k-1}. Adding π to its y-angles
  // parks each block's weight on target value 1 at the cost of a sign.
  for (int k = 1; k <= n; ++k) {
    if ((pivot >> (k - 1)) & 1) {
      for (double &a : schedule.y_levels[k - 1]) a += std::numbers::pi;
    }
  }
  Circuit raw(n);
  raw.reserve(std::size_t{4} << n);
  append_cascade(schedule, raw);
  const double flips = std::popcount(pivot) * std::numbers::pi;
  return finish(simplify(raw, {options.prune_atol}), mean_phase(x) + flips);
}

SynthesisResult disentangle(const StateVector &x, const SynthesisOptions &options) {
  return disentangle_to(x, 0, options);
}

SynthesisResult prepare(const StateVector &a, const StateVector &b,
                        const SynthesisOptions &options) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("qubit count mismatch: " +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()));
  }
  if (options.mirror) {
    SynthesisOptions forward = options;
    forward.mirror = false;
    const SynthesisResult flipped = prepare(reverse_qubits(a), reverse_qubits(b), forward);
    return finish(reverse_qubits(flipped.circuit), flipped.residual_phase);
  }
  const SynthesisResult from_a = disentangle(a, options);
  const SynthesisResult from_b = disentangle(b, options);
  Circuit joined = from_a.circuit;
  joined.append(dagger(from_b.circuit));
  return finish(simplify(joined, {options.prune_atol}),
                from_a.residual_phase - from_b.residual_phase);
}

SynthesisResult prepare_from_basis(std::uint64_t index, const StateVector &b,
                                   const SynthesisOptions &options) {
  const SynthesisResult to_pivot = disentangle_to(b, index, options);
  return finish(dagger(to_pivot.circuit), -to_pivot.residual_phase);
}

}  // namespace ucrprep
