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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "ucrprep/cli.hpp"
#include "ucrprep/io.hpp"
#include "ucrprep/simulator.hpp"

namespace ucrprep {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ucrprep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &contents) {
    const fs::path p = dir_ / name;
    io::write_file(p.string(), contents);
    return p.string();
  }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SynthReportsUpperCounts) {
  const std::string a = write("a.json", io::serialize_state(random_state(3, 1)));
  const std::string b = write("b.json", io::serialize_state(random_state(3, 2)));
  cli::SynthArgs args;
  args.input_a = a;
  args.input_b = b;
  args.json_path = path("c.json");
  args.qasm_path = path("c.qasm");
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_synth(args, out, err), cli::kOk) << err.str();
  EXPECT_NE(out.str().find("CNOT 16/16 (upper), ROT 27/27 (upper)"), std::string::npos) << out.str();
  EXPECT_TRUE(fs::exists(path("c.json")));
  EXPECT_EQ(io::read_file(path("c.qasm")).rfind("OPENQASM 2.0;", 0), 0u);

  cli::VerifyArgs verify{path("c.json"), a, b};
  std::ostringstream vout;
  EXPECT_EQ(cli::cmd_verify(verify, vout, err), cli::kOk);
  EXPECT_NE(vout.str().find("PASS"), std::string::npos);
}

TEST_F(CliTest, SynthBasisStatesPrintsUnitFidelity) {
  const std::string e = write("e.json", io::serialize_state(StateVector::basis(2, 0)));
  cli::SynthArgs args;
  args.input_a = e;
  args.input_b = e;
  args.json_path = path("c.json");
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_synth(args, out, err), cli::kOk);
  EXPECT_NE(out.str().find("fidelity 1.000000000000"), std::string::npos) << out.str();
}

TEST_F(CliTest, SynthWithoutJsonWritesCircuitToStdout) {
  const std::string b = write("b.json", io::serialize_state(random_state(2, 2)));
  cli::SynthArgs args;
  args.input_b = b;
  args.from_basis = 0;
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_synth(args, out, err), cli::kOk);
  const io::CircuitDocument doc = io::parse_circuit(out.str());
  EXPECT_EQ(gate_counts(doc.circuit), (GateCounts{2, 6}));
  EXPECT_NE(err.str().find("CNOT 2/4"), std::string::npos) << err.str();
}

TEST_F(CliTest, SynthParseErrorIsLineAnchored) {
  const std::string a = write("a.json", "{\n  \"n\": 1,\n  \"amplitudes\": [\n    [1, 0],\n    \"oops\"\n  ]\n}\n");
  const std::string b = write("b.json", io::serialize_state(random_state(1, 2)));
  cli::SynthArgs args;
  args.input_a = a;
  args.input_b = b;
  args.json_path = path("c.json");
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_synth(args, out, err), cli::kParseError);
  EXPECT_NE(err.str().find("line 5"), std::string::npos) << err.str();
}

TEST_F(CliTest, SynthDimensionMismatch) {
  const std::string a = write("a.json", io::serialize_state(random_state(2, 1)));
  const std::string b = write("b.json", io::serialize_state(random_state(3, 2)));
  cli::SynthArgs args;
  args.input_a = a;
  args.input_b = b;
  args.json_path = path("c.json");
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_synth(args, out, err), cli::kDimensionMismatch);
}

TEST_F(CliTest, VerifyDetectsPerturbation) {
  const StateVector sa = random_state(3, 4);
  const StateVector sb = random_state(3, 5);
  const std::string a = write("a.json", io::serialize_state(sa));
  const std::string b = write("b.json", io::serialize_state(sb));
  SynthesisResult r = prepare(sa, sb);
  Circuit perturbed(3);
  bool done = false;
  for (const Gate &g : r.circuit.gates()) {
    if (const auto *rot = std::get_if<Rot>(&g); rot && !done) {
      perturbed.add(Rot{rot->axis, rot->target, rot->angle + 0.1});
      done = true;
    } else {
      perturbed.add(g);
    }
  }
  const std::string c = write("c.json", io::serialize_circuit(perturbed));
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_verify({c, a, b}, out, err), cli::kVerifyFailed);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);

  const std::string small = write("small.json", io::serialize_state(random_state(2, 1)));
  EXPECT_EQ(cli::cmd_verify({c, small, b}, out, err), cli::kDimensionMismatch);
  const std::string broken = write("broken.json", "{\"n\": 3, \"gates\": [");
  EXPECT_EQ(cli::cmd_verify({broken, a, b}, out, err), cli::kParseError);
}

TEST_F(CliTest, ExportQasm) {
  Circuit c(2);
  c.rot(RotationAxis::y(), 1, 0.4);
  c.cnot(1, 2);
  const std::string file = write("c.json", io::serialize_circuit(c));
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_export_qasm({file, std::nullopt}, out, err), cli::kOk);
  EXPECT_NE(out.str().find("ry(-0.4) q[1];\ncx q[1],q[0];\n"), std::string::npos);

  std::ostringstream again;
  cli::cmd_export_qasm({file, std::nullopt}, again, err);
  EXPECT_EQ(again.str(), out.str());

  Circuit general(1);
  general.rot(RotationAxis(0, 0.6, 0.8), 1, 0.4);
  const std::string gfile = write("g.json", io::serialize_circuit(general));
  EXPECT_EQ(cli::cmd_export_qasm({gfile, std::nullopt}, out, err), cli::kExportError);
}

TEST_F(CliTest, BenchRows) {
  std::ostringstream out, err;
  cli::BenchArgs args;
  args.n_max = 4;
  args.seed = 3;
  EXPECT_EQ(cli::cmd_bench(args, out, err), cli::kOk);
  const std::string text = out.str();
  // n, CNOT, ROT, up.CNOT, up.ROT, lo.CNOT, lo.ROT, QR
  EXPECT_TRUE(std::regex_search(text, std::regex(R"(\n\s+1\s+0\s+3\s+0\s+3\s+0\s+2\s+25\s)")))
      << text;
  EXPECT_TRUE(std::regex_search(text, std::regex(R"(\n\s+4\s+44\s+59\s+44\s+59\s+5\s+30\s+201\s)")))
      << text;
  args.n_max = 21;
  EXPECT_EQ(cli::cmd_bench(args, out, err), cli::kParseError);
}

int run_binary(const std::string &arguments) {
  const std::string command = std::string(UCRPREP_CLI_PATH) + " " + arguments + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string a = write("a.json", io::serialize_state(random_state(3, 8)));
  const std::string b = write("b.json", io::serialize_state(random_state(3, 9)));
  const std::string c = path("c.json");
  EXPECT_EQ(run_binary("synth " + a + " " + b + " --json " + c), 0);
  EXPECT_EQ(run_binary("verify " + c + " " + a + " " + b), 0);
  EXPECT_EQ(run_binary("export-qasm " + c + " -o " + path("c.qasm")), 0);
  EXPECT_EQ(run_binary("synth --mirror --prune-epsilon 1e-14 " + a + " " + b + " --json " + c), 0);
  EXPECT_EQ(run_binary("verify " + c + " " + a + " " + b), 0);
  EXPECT_EQ(run_binary("synth --from-basis 3 " + b + " --json " + c), 0);

  const std::string bad = write("bad.json", "{\"n\": 1, \"amplitudes\": [[1, 0], [1]]}");
  EXPECT_EQ(run_binary("synth " + bad + " " + b), 2);
  const std::string small = write("small.json", io::serialize_state(random_state(2, 1)));
  EXPECT_EQ(run_binary("synth " + small + " " + b), 3);
  EXPECT_EQ(run_binary("bench --n-max 3"), 0);
  EXPECT_EQ(run_binary("no-such-command"), 2);
}

}  // namespace
}  // namespace ucrprep
