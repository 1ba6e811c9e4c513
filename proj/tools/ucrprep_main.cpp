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

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "ucrprep/cli.hpp"

int main(int argc, char **argv) {
  using namespace ucrprep::cli;

  CLI::App app{"ucrprep: exact state-to-state circuits from uniformly controlled rotations"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto *synth_cmd = app.add_subcommand("synth", "synthesize a circuit taking state A to state B");
  std::vector<std::string> synth_files;
  synth_cmd->add_option("states", synth_files, "state files A B (only B with --from-basis)")
      ->required();
  synth_cmd->add_option("--from-basis", synth.from_basis,
                        "start from basis state |i> instead of a state file");
  synth_cmd->add_flag("--normalize", synth.normalize, "normalize input amplitudes");
  synth_cmd->add_option("--prune-epsilon", synth.prune_epsilon,
                        "drop rotations with |angle| <= epsilon");
  synth_cmd->add_flag("--mirror", synth.mirror, "disentangle qubit 1 first instead of qubit n");
  synth_cmd->add_option("--json", synth.json_path, "write the circuit document here");
  synth_cmd->add_option("--qasm", synth.qasm_path, "also write OpenQASM 2.0 here");
  synth_cmd->add_option("--tolerance", synth.tolerance, "fidelity tolerance");

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "check |<b|C|a>| >= 1 - tolerance");
  verify_cmd->add_option("circuit", verify.circuit, "circuit document")->required();
  verify_cmd->add_option("input_a", verify.input_a, "state file A")->required();
  verify_cmd->add_option("input_b", verify.input_b, "state file B")->required();
  verify_cmd->add_flag("--normalize", verify.normalize, "normalize input amplitudes");
  verify_cmd->add_option("--tolerance", verify.tolerance, "fidelity tolerance");

  ExportArgs exp;
  auto *export_cmd = app.add_subcommand("export-qasm", "print a circuit as OpenQASM 2.0");
  export_cmd->add_option("circuit", exp.circuit, "circuit document")->required();
  export_cmd->add_option("-o,--output", exp.output, "output path (default stdout)");

  BenchArgs bench;
  auto *bench_cmd = app.add_subcommand("bench", "gate counts and timings for random pairs");
  bench_cmd->add_option("--n-max", bench.n_max, "largest register width (<= 20)");
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--verify-max", bench.verify_max,
                        "largest width checked with the simulator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  if (synth_cmd->parsed()) {
    const std::size_t expected = synth.from_basis ? 1 : 2;
    if (synth_files.size() != expected) {
      std::cerr << "error: synth expects " << expected << " state file(s)\n";
      return kParseError;
    }
    synth.input_b = synth_files.back();
    if (!synth.from_basis) synth.input_a = synth_files.front();
    return cmd_synth(synth, std::cout, std::cerr);
  }
  if (verify_cmd->parsed()) return cmd_verify(verify, std::cout, std::cerr);
  if (export_cmd->parsed()) return cmd_export_qasm(exp, std::cout, std::cerr);
  return cmd_bench(bench, std::cout, std::cerr);
}
