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

#include "ucrprep/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ucrprep/io.hpp"
#include "ucrprep/simulator.hpp"
#include "ucrprep/synthesis.hpp"

namespace ucrprep::cli {

namespace {

struct CommandError {
  int code;
  std::string message;
};

StateVector load_state(const std::string &path, bool normalize) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::exception &e) {
    throw CommandError{kParseError, e.what()};
  }
  try {
    return io::parse_state(text, normalize);
  } catch (const io::ParseError &e) {
    throw CommandError{kParseError, path + ": " + e.what()};
  }
}

io::CircuitDocument load_circuit(const std::string &path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::exception &e) {
    throw CommandError{kParseError, e.what()};
  }
  try {
    return io::parse_circuit(text);
  } catch (const io::ParseError &e) {
    throw CommandError{kParseError, path + ": " + e.what()};
  }
}

void require_same_width(int expected, int actual, const std::string &what) {
  if (expected != actual) {
    throw CommandError{kDimensionMismatch, what + " has " + std::to_string(actual) +
                                               " qubits, expected " +
                                               std::to_string(expected)};
  }
}

const char *relation(std::int64_t actual, std::int64_t lower, std::int64_t upper) {
  if (actual == upper) return "upper";
  if (actual < lower) return "below lower bound";
  if (actual > upper) return "above upper bound";
  return "within bounds";
}

void print_report(std::ostream &os, const SynthesisResult &r, double fid) {
  const auto &b = r.bounds;
  const auto cnot = static_cast<std::int64_t>(r.counts.cnot);
  const auto rot = static_cast<std::int64_t>(r.counts.rot);
  os << "n = " << b.n << "\n"
     << "CNOT " << cnot << "/" << b.upper_cnot << " ("
     << relation(cnot, b.lower_cnot, b.upper_cnot) << "), ROT " << rot << "/"
     << b.upper_rot << " (" << relation(rot, b.lower_rot, b.upper_rot) << ")\n"
     << "lower bounds: CNOT >= " << b.lower_cnot << ", ROT >= " << b.lower_rot << "\n"
     << "QR reference: ~" << static_cast<std::int64_t>(std::floor(b.qr_comparison_cnot))
     << " CNOT\n"
     << std::fixed << std::setprecision(12) << "fidelity " << fid << "\n"
     << "residual phase " << r.residual_phase << "\n"
     << std::defaultfloat;
}

int run(std::ostream &err, auto &&body) {
  try {
    return body();
  } catch (const CommandError &e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const io::ExportError &e) {
    err << "error: " << e.what() << "\n";
    return kExportError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace

int cmd_synth(const SynthArgs &args, std::ostream &out, std::ostream &err) {
  return run(err, [&] {
    const StateVector b = load_state(args.input_b, args.normalize);
    SynthesisOptions options{args.prune_epsilon, args.mirror};

    std::optional<StateVector> a;
    SynthesisResult result = [&] {
      if (args.from_basis) {
        if (*args.from_basis >= b.dim()) {
          throw CommandError{kDimensionMismatch,
                             "basis index " + std::to_string(*args.from_basis) +
                                 " out of range for n=" + std::to_string(b.num_qubits())};
        }
        a = StateVector::basis(b.num_qubits(), *args.from_basis);
        return prepare_from_basis(*args.from_basis, b, options);
      }
      a = load_state(args.input_a, args.normalize);
      require_same_width(a->num_qubits(), b.num_qubits(), args.input_b);
      return prepare(*a, b, options);
    }();

    const double fid = fidelity(apply_circuit(*a, result.circuit), b);
    const std::string doc = io::serialize_circuit(result);
    std::ostream &report = args.json_path ? out : err;
    if (args.json_path) {
      io::write_file(*args.json_path, doc);
    } else {
      out << doc;
    }
    if (args.qasm_path) io::write_file(*args.qasm_path, io::to_qasm(result.circuit));
    print_report(report, result, fid);
    if (fid < 1.0 - args.tolerance) {
      report << "FAIL: fidelity below 1 - " << args.tolerance << "\n";
      return static_cast<int>(kVerifyFailed);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
  return run(err, [&] {
    const io::CircuitDocument doc = load_circuit(args.circuit);
    const StateVector a = load_state(args.input_a, args.normalize);
    const StateVector b = load_state(args.input_b, args.normalize);
    const int n = doc.circuit.num_qubits();
    require_same_width(n, a.num_qubits(), args.input_a);
    require_same_width(n, b.num_qubits(), args.input_b);

    const Complex overlap = inner(b, apply_circuit(a, doc.circuit));
    const double fid = std::min(1.0, std::abs(overlap));
    const bool pass = fid >= 1.0 - args.tolerance;
    out << std::setprecision(15) << "fidelity " << fid << "\n"
        << "residual phase " << (std::abs(overlap) > 0 ? std::arg(overlap) : 0.0) << "\n"
        << "threshold " << 1.0 - args.tolerance << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
    return static_cast<int>(pass ? kOk : kVerifyFailed);
  });
}

int cmd_export_qasm(const ExportArgs &args, std::ostream &out, std::ostream &err) {
  return run(err, [&] {
    const io::CircuitDocument doc = load_circuit(args.circuit);
    const std::string qasm = io::to_qasm(doc.circuit);
    if (args.output) {
      io::write_file(*args.output, qasm);
    } else {
      out << qasm;
    }
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const BenchArgs &args, std::ostream &out, std::ostream &err) {
  return run(err, [&] {
    if (args.n_max < 1 || args.n_max > 20) {
      throw CommandError{kParseError, "--n-max must lie in [1, 20]"};
    }
    out << std::setw(3) << "n" << std::setw(10) << "CNOT" << std::setw(10) << "ROT"
        << std::setw(10) << "up.CNOT" << std::setw(10) << "up.ROT" << std::setw(10)
        << "lo.CNOT" << std::setw(10) << "lo.ROT" << std::setw(12) << "QR~12.6*2^n"
        << std::setw(14) << "fidelity" << std::setw(12) << "time[ms]" << "\n";
    for (int n = 1; n <= args.n_max; ++n) {
      const StateVector a = random_state(n, args.seed + 2 * static_cast<std::uint64_t>(n));
      const StateVector b = random_state(n, args.seed + 2 * static_cast<std::uint64_t>(n) + 1);
      const auto start = std::chrono::steady_clock::now();
      const SynthesisResult r = prepare(a, b);
      const auto stop = std::chrono::steady_clock::now();
      std::string fid = "-";
      if (n <= args.verify_max) {
        std::ostringstream f;
        f << std::fixed << std::setprecision(10) << fidelity(apply_circuit(a, r.circuit), b);
        fid = f.str();
      }
      const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      out << std::setw(3) << n << std::setw(10) << r.counts.cnot << std::setw(10)
          << r.counts.rot << std::setw(10) << r.bounds.upper_cnot << std::setw(10)
          << r.bounds.upper_rot << std::setw(10) << r.bounds.lower_cnot << std::setw(10)
          << r.bounds.lower_rot << std::setw(12)
          << static_cast<std::int64_t>(std::floor(r.bounds.qr_comparison_cnot))
          << std::setw(14) << fid << std::setw(12) << std::fixed << std::setprecision(2)
          << ms << std::defaultfloat << "\n";
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace ucrprep::cli
