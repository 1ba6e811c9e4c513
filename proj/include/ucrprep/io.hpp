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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ucrprep/circuit.hpp"
#include "ucrprep/state.hpp"
#include "ucrprep/synthesis.hpp"

namespace ucrprep::io {

/// Malformed input document. line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string &what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Export refused, e.g. a rotation axis that is neither y nor z.
class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * State document:
 *   {"n": 2, "amplitudes": [[re, im], ...], "normalize": false}
 * @p force_normalize overrides a false "normalize" field.
 */
StateVector parse_state(std::string_view text, bool force_normalize = false);
std::string serialize_state(const StateVector &x);

struct CircuitDocument {
  Circuit circuit;
  std::optional<double> residual_phase;
};

/**
 * Circuit document:
 *   {"n": 3,
 *    "gates": [{"type": "cnot", "control": 1, "target": 2},
 *              {"type": "rot", "axis": "y" | "z" | [0, ay, az],
 *               "target": 1, "angle": 0.4}, ...],
 *    "metadata": {"residual_phase": ..., "counts": {...}, "bounds": {...}}}
 * Angles are written in shortest round-trip form, so parsing restores every
 * double exactly.
 */
std::string serialize_circuit(const Circuit &c);
std::string serialize_circuit(const SynthesisResult &result);
CircuitDocument parse_circuit(std::string_view text);

/**
 * OpenQASM 2.0 text. Qubit j maps to wire q[n−j]; Rot_y(α) becomes ry(−α)
 * and Rot_z(α) becomes rz(−α), since qelib1 rotations are exp(−iθσ/2).
 */
std::string to_qasm(const Circuit &c);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace ucrprep::io
