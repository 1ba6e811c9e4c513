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

#include "ucrprep/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ucrprep/gray.hpp"

namespace ucrprep {

RotationAxis::RotationAxis(double ax, double ay, double az) : ay_(ay), az_(az) {
  if (ax != 0.0) {
    throw std::invalid_argument("rotation axis must lie in the y-z plane");
  }
  if (std::abs(ay * ay + az * az - 1.0) > 1e-12) {
    throw std::invalid_argument("rotation axis must be a unit vector");
  }
}

Eigen::Matrix2cd rotation_matrix(const RotationAxis &axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd r;
  r << c + i * s * axis.az(), s * axis.ay(),  //
      -s * axis.ay(), c - i * s * axis.az();
  return r;
}

Circuit::Circuit(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

void Circuit::add(const Gate &g) {
  auto check = [this](int q) {
    if (q < 1 || q > n_) {
      throw std::out_of_range("qubit " + std::to_string(q) +
                              " outside [1, " + std::to_string(n_) + "]");
    }
  };
  if (const auto *cx = std::get_if<Cnot>(&g)) {
    check(cx->control);
    check(cx->target);
    if (cx->control == cx->target) {
      throw std::out_of_range("CNOT control equals target");
    }
  } else {
    check(std::get<Rot>(g).target);
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit &other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("cannot append circuits of different width");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void validate_ucr(const UcrGate &g, int n) {
  auto check = [n](int q) {
    if (q < 1 || q > n) {
      throw std::out_of_range("qubit " + std::to_string(q) +
                              " outside [1, " + std::to_string(n) + "]");
    }
  };
  check(g.target);
  std::vector<int> seen = g.controls;
  for (int q : seen) {
    check(q);
    if (q == g.target) throw std::invalid_argument("UCR target is a control");
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("UCR controls repeat a qubit");
  }
  if (g.angles.size() != (std::size_t{1} << g.k())) {
    throw std::invalid_argument("UCR with " + std::to_string(g.k()) +
                                " controls needs " +
                                std::to_string(std::size_t{1} << g.k()) +
                                " angles, got " +
                                std::to_string(g.angles.size()));
  }
}

void lower_ucr(const UcrGate &g, bool mirrored, Circuit &out) {
  validate_ucr(g, out.num_qubits());
  const int k = g.k();
  if (k == 0) {
    out.rot(g.axis, g.target, g.angles[0]);
    return;
  }
  const std::vector<double> theta = alpha_to_theta(g.angles);
  // Transition bit b has weight 2^b, i.e. control position k − b (1-based).
  auto control_after = [&](std::size_t t) {
    return g.controls[k - 1 - gray_transition_bit(t, k)];
  };
  const std::size_t count = theta.size();
  if (!mirrored) {
    for (std::size_t t = 0; t < count; ++t) {
      out.rot(g.axis, g.target, theta[t]);
      out.cnot(control_after(t), g.target);
    }
  } else {
    for (std::size_t t = count; t-- > 0;) {
      out.cnot(control_after(t), g.target);
      out.rot(g.axis, g.target, theta[t]);
    }
  }
}

Circuit lower_ucr(const UcrGate &g, int n, bool mirrored) {
  Circuit c(n);
  c.reserve(2 * g.angles.size());
  lower_ucr(g, mirrored, c);
  return c;
}

Eigen::MatrixXcd ucr_matrix(const UcrGate &g, int cap) {
  if (g.k() > cap) {
    throw std::invalid_argument("UCR with " + std::to_string(g.k()) +
                                " controls exceeds matrix cap " +
                                std::to_string(cap));
  }
  if (g.angles.size() != (std::size_t{1} << g.k())) {
    throw std::invalid_argument("UCR angle count does not match controls");
  }
  const Eigen::Index blocks = static_cast<Eigen::Index>(g.angles.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * blocks, 2 * blocks);
  for (Eigen::Index i = 0; i < blocks; ++i) {
    m.block<2, 2>(2 * i, 2 * i) = rotation_matrix(g.axis, g.angles[i]);
  }
  return m;
}

Circuit dagger(const Circuit &c) {
  Circuit out(c.num_qubits());
  out.reserve(c.size());
  const auto gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (const auto *r = std::get_if<Rot>(&*it)) {
      out.add(Rot{r->axis, r->target, -r->angle});
    } else {
      out.add(*it);
    }
  }
  return out;
}

Circuit simplify(const Circuit &c, const SimplifyOptions &options) {
  // A single stack pass reaches the fixpoint: each rule only involves the
  // incoming gate and the current top.
  std::vector<Gate> stack;
  stack.reserve(c.size());
  auto prunable = [&](const Rot &r) {
    return options.prune_atol && std::abs(r.angle) <= *options.prune_atol;
  };
  for (const Gate &g : c.gates()) {
    if (const auto *cx = std::get_if<Cnot>(&g)) {
      if (!stack.empty()) {
        if (const auto *top = std::get_if<Cnot>(&stack.back()); top && *top == *cx) {
          stack.pop_back();
          continue;
        }
      }
      stack.push_back(g);
      continue;
    }
    Rot r = std::get<Rot>(g);
    if (!stack.empty()) {
      if (const auto *top = std::get_if<Rot>(&stack.back());
          top && top->target == r.target && top->axis == r.axis) {
        r.angle += top->angle;
        stack.pop_back();
      }
    }
    if (!prunable(r)) stack.push_back(r);
  }
  Circuit out(c.num_qubits());
  out.reserve(stack.size());
  for (const Gate &g : stack) out.add(g);
  return out;
}

GateCounts gate_counts(const Circuit &c) {
  GateCounts counts;
  for (const Gate &g : c.gates()) {
    if (std::holds_alternative<Cnot>(g)) {
      ++counts.cnot;
    } else {
      ++counts.rot;
    }
  }
  return counts;
}

}  // namespace ucrprep
