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
#include <optional>
#include <ostream>
#include <string>

namespace ucrprep::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kDimensionMismatch = 3,
  kExportError = 4,
};

inline constexpr double kDefaultTolerance = 1e-9;

struct SynthArgs {
  std::string input_a;  // ignored when from_basis is set
  std::string input_b;
  std::optional<std::uint64_t> from_basis;
  bool normalize = false;
  std::optional<double> prune_epsilon;
  bool mirror = false;
  std::optional<std::string> json_path;
  std::optional<std::string> qasm_path;
  double tolerance = kDefaultTolerance;
};

struct VerifyArgs {
  std::string circuit;
  std::string input_a;
  std::string input_b;
  bool normalize = false;
  double tolerance = kDefaultTolerance;
};

struct ExportArgs {
  std::string circuit;
  std::optional<std::string> output;
};

struct BenchArgs {
  int n_max = 10;
  std::uint64_t seed = 1;
  /// Rows above this width skip the simulator check.
  int verify_max = 14;
};

/**
 * Synthesize a circuit taking state A (or a basis state) to state B, check it
 * with the simulator and print counts against the bounds. The circuit goes to
 * --json when given, otherwise to @p out with the report on @p err.
 */
int cmd_synth(const SynthArgs &args, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err);
int cmd_export_qasm(const ExportArgs &args, std::ostream &out, std::ostream &err);
int cmd_bench(const BenchArgs &args, std::ostream &out, std::ostream &err);

}  // namespace ucrprep::cli
