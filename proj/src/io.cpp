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

#include "ucrprep/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ucrprep::io {

namespace {

using Json = nlohmann::ordered_json;

int line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::size_t find_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  return text.find(quoted);
}

int line_of_key(std::string_view text, std::string_view key) {
  const std::size_t pos = find_key(text, key);
  return pos == std::string_view::npos ? 0 : line_at(text, pos);
}

// Line of element @p index in the array value of the first @p key.
int line_of_element(std::string_view text, std::string_view key, std::size_t index) {
  std::size_t pos = find_key(text, key);
  if (pos == std::string_view::npos) return 0;
  pos = text.find('[', pos);
  if (pos == std::string_view::npos) return 0;
  int depth = 0;
  bool in_string = false;
  std::size_t element = 0;
  bool awaiting_start = true;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      if (ch == '\\') {
        ++i;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (depth == 1 && awaiting_start && ch != ' ' && ch != '\n' && ch != '\t' &&
        ch != '\r' && ch != ']') {
      if (element == index) return line_at(text, i);
      awaiting_start = false;
    }
    switch (ch) {
      case '"':
        in_string = true;
        break;
      case '[':
      case '{':
        ++depth;
        break;
      case ']':
      case '}':
        if (--depth == 0) return line_of_key(text, key);
        break;
      case ',':
        if (depth == 1) {
          ++element;
          awaiting_start = true;
        }
        break;
      default:
        break;
    }
  }
  return line_of_key(text, key);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(line_at(text, byte), "malformed JSON: " + std::string(e.what()));
  }
}

const Json &require(const Json &doc, const char *key) {
  if (!doc.is_object()) throw ParseError(1, "document must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(0, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int require_int(const Json &doc, std::string_view text, const char *key) {
  const Json &v = require(doc, key);
  if (!v.is_number_integer()) {
    throw ParseError(line_of_key(text, key),
                     std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

Json axis_to_json(const RotationAxis &axis) {
  if (axis.is_y()) return "y";
  if (axis.is_z()) return "z";
  return Json::array({0.0, axis.ay(), axis.az()});
}

Json bounds_to_json(const BoundReport &b) {
  return Json{{"upper_cnot", b.upper_cnot},
              {"upper_rot", b.upper_rot},
              {"lower_cnot", b.lower_cnot},
              {"lower_rot", b.lower_rot},
              {"qr_comparison_cnot", b.qr_comparison_cnot}};
}

Json circuit_to_json(const Circuit &c) {
  Json gates = Json::array();
  for (const Gate &g : c.gates()) {
    if (const auto *cx = std::get_if<Cnot>(&g)) {
      gates.push_back(Json{{"type", "cnot"}, {"control", cx->control}, {"target", cx->target}});
    } else {
      const Rot &r = std::get<Rot>(g);
      gates.push_back(Json{{"type", "rot"},
                           {"axis", axis_to_json(r.axis)},
                           {"target", r.target},
                           {"angle", r.angle}});
    }
  }
  return Json{{"n", c.num_qubits()}, {"gates", std::move(gates)}};
}

std::string dump(const Json &doc) {
  // One gate per line keeps large circuits diffable and line numbers useful.
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (const auto &[key, value] : doc.items()) {
    if (!first) os << ",\n";
    first = false;
    os << "  " << Json(key).dump() << ": ";
    if (value.is_array() && key == "gates") {
      if (value.empty()) {
        os << "[]";
      } else {
        os << "[\n";
        for (std::size_t i = 0; i < value.size(); ++i) {
          os << "    " << value[i].dump() << (i + 1 < value.size() ? ",\n" : "\n");
        }
        os << "  ]";
      }
    } else {
      os << value.dump();
    }
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

StateVector parse_state(std::string_view text, bool force_normalize) {
  const Json doc = parse_json(text);
  const int n = require_int(doc, text, "n");
  if (n < 1 || n > 30) {
    throw ParseError(line_of_key(text, "n"), "\"n\" must lie in [1, 30]");
  }
  bool normalize = force_normalize;
  if (auto it = doc.find("normalize"); it != doc.end()) {
    if (!it->is_boolean()) {
      throw ParseError(line_of_key(text, "normalize"), "\"normalize\" must be a boolean");
    }
    normalize = normalize || it->get<bool>();
  }
  const Json &amps = require(doc, "amplitudes");
  if (!amps.is_array()) {
    throw ParseError(line_of_key(text, "amplitudes"), "\"amplitudes\" must be an array");
  }
  Amplitudes values;
  values.reserve(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Json &e = amps[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError(line_of_element(text, "amplitudes", i),
                       "amplitudes[" + std::to_string(i) + "] must be a [re, im] number pair");
    }
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  try {
    return StateVector(n, std::move(values), normalize);
  } catch (const std::invalid_argument &e) {
    throw ParseError(line_of_key(text, "amplitudes"), e.what());
  }
}

std::string serialize_state(const StateVector &x) {
  std::ostringstream os;
  os << "{\n  \"n\": " << x.num_qubits() << ",\n  \"amplitudes\": [\n";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    os << "    [" << format_double(x[i].real()) << ", " << format_double(x[i].imag())
       << "]" << (i + 1 < x.dim() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string serialize_circuit(const Circuit &c) { return dump(circuit_to_json(c)); }

std::string serialize_circuit(const SynthesisResult &result) {
  Json doc = circuit_to_json(result.circuit);
  doc["metadata"] = Json{{"residual_phase", result.residual_phase},
                         {"counts", {{"cnot", result.counts.cnot}, {"rot", result.counts.rot}}},
                         {"bounds", bounds_to_json(result.bounds)}};
  return dump(doc);
}

CircuitDocument parse_circuit(std::string_view text) {
  const Json doc = parse_json(text);
  const int n = require_int(doc, text, "n");
  if (n < 1 || n > 30) {
    throw ParseError(line_of_key(text, "n"), "\"n\" must lie in [1, 30]");
  }
  const Json &gates = require(doc, "gates");
  if (!gates.is_array()) {
    throw ParseError(line_of_key(text, "gates"), "\"gates\" must be an array");
  }
  Circuit circuit(n);
  circuit.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Json &g = gates[i];
    auto fail = [&](const std::string &what) {
      return ParseError(line_of_element(text, "gates", i),
                        "gates[" + std::to_string(i) + "]: " + what);
    };
    if (!g.is_object() || !g.contains("type") || !g["type"].is_string()) {
      throw fail("gate must be an object with a string \"type\"");
    }
    auto qubit = [&](const char *key) {
      if (!g.contains(key) || !g[key].is_number_integer()) {
        throw fail(std::string("\"") + key + "\" must be an integer");
      }
      return g[key].get<int>();
    };
    const std::string type = g["type"];
    try {
      if (type == "cnot") {
        circuit.cnot(qubit("control"), qubit("target"));
      } else if (type == "rot") {
        if (!g.contains("angle") || !g["angle"].is_number()) {
          throw fail("\"angle\" must be a number");
        }
        const Json &ax = g.value("axis", Json());
        std::optional<RotationAxis> axis;
        if (ax == "y") {
          axis = RotationAxis::y();
        } else if (ax == "z") {
          axis = RotationAxis::z();
        } else if (ax.is_array() && ax.size() == 3 &&
                   std::all_of(ax.begin(), ax.end(), [](const Json &v) { return v.is_number(); })) {
          axis = RotationAxis(ax[0].get<double>(), ax[1].get<double>(), ax[2].get<double>());
        } else {
          throw fail("\"axis\" must be \"y\", \"z\" or [0, ay, az]");
        }
        circuit.rot(*axis, qubit("target"), g["angle"].get<double>());
      } else {
        throw fail("unknown gate type \"" + type + "\"");
      }
    } catch (const std::invalid_argument &e) {
      throw fail(e.what());
    } catch (const std::out_of_range &e) {
      throw fail(e.what());
    }
  }
  CircuitDocument out{std::move(circuit), std::nullopt};
  if (auto meta = doc.find("metadata"); meta != doc.end() && meta->is_object()) {
    if (auto ph = meta->find("residual_phase"); ph != meta->end() && ph->is_number()) {
      out.residual_phase = ph->get<double>();
    }
  }
  return out;
}

std::string to_qasm(const Circuit &c) {
  const int n = c.num_qubits();
  std::ostringstream os;
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "// qubit j (1 = most significant) is wire q[" << n << "-j]\n"
     << "qreg q[" << n << "];\n";
  for (const Gate &g : c.gates()) {
    if (const auto *cx = std::get_if<Cnot>(&g)) {
      os << "cx q[" << n - cx->control << "],q[" << n - cx->target << "];\n";
      continue;
    }
    const Rot &r = std::get<Rot>(g);
    const char *name = r.axis.is_y() ? "ry" : r.axis.is_z() ? "rz" : nullptr;
    if (name == nullptr) {
      throw ExportError("rotation axis (0, " + format_double(r.axis.ay()) + ", " +
                        format_double(r.axis.az()) + ") has no QASM equivalent");
    }
    const double angle = r.angle == 0.0 ? 0.0 : -r.angle;
    os << name << "(" << format_double(angle) << ") q[" << n - r.target << "];\n";
  }
  return os.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace ucrprep::io
