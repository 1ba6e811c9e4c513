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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <bit>
#include <optional>

#include "ucrprep/gray.hpp"
#include "ucrprep/io.hpp"
#include "ucrprep/simulator.hpp"
#include "ucrprep/synthesis.hpp"

namespace py = pybind11;
using namespace ucrprep;

namespace {

StateVector state_from_array(py::array_t<Complex, py::array::c_style | py::array::forcecast> a,
                             bool normalize) {
  if (a.ndim() != 1) throw py::value_error("amplitudes must be one-dimensional");
  const auto size = static_cast<std::size_t>(a.size());
  if (size < 2 || (size & (size - 1)) != 0) {
    throw py::value_error("amplitude count must be a power of two >= 2");
  }
  Amplitudes amps(a.data(), a.data() + size);
  return StateVector(std::countr_zero(size), std::move(amps), normalize);
}

py::array_t<Complex> state_to_array(const StateVector &x) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(x.dim()));
  std::copy(x.amplitudes().begin(), x.amplitudes().end(), out.mutable_data());
  return out;
}

py::object gate_to_py(const Gate &g) {
  if (const auto *cx = std::get_if<Cnot>(&g)) {
    return py::make_tuple("cnot", cx->control, cx->target);
  }
  const auto &r = std::get<Rot>(g);
  std::string axis = r.axis.is_y() ? "y" : r.axis.is_z() ? "z" : "general";
  return py::make_tuple("rot", axis, r.target, r.angle);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Uniformly controlled rotation state preparation";

  py::class_<StateVector>(m, "StateVector")
      .def(py::init(&state_from_array), py::arg("amplitudes"), py::arg("normalize") = false)
      .def_static("basis", &StateVector::basis, py::arg("n"), py::arg("index"))
      .def_property_readonly("num_qubits", &StateVector::num_qubits)
      .def_property_readonly("dim", &StateVector::dim)
      .def("amplitudes", &state_to_array)
      .def("__len__", &StateVector::dim)
      .def("__repr__", [](const StateVector &x) {
        return "<StateVector n=" + std::to_string(x.num_qubits()) + ">";
      });

  py::class_<RotationAxis>(m, "RotationAxis")
      .def(py::init<double, double, double>(), py::arg("ax"), py::arg("ay"), py::arg("az"))
      .def_static("y", &RotationAxis::y)
      .def_static("z", &RotationAxis::z)
      .def_property_readonly("ay", &RotationAxis::ay)
      .def_property_readonly("az", &RotationAxis::az);

  py::class_<GateCounts>(m, "GateCounts")
      .def_readonly("cnot", &GateCounts::cnot)
      .def_readonly("rot", &GateCounts::rot)
      .def("__repr__", [](const GateCounts &c) {
        return "GateCounts(cnot=" + std::to_string(c.cnot) + ", rot=" + std::to_string(c.rot) + ")";
      });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def("cnot", &Circuit::cnot, py::arg("control"), py::arg("target"))
      .def("rot", &Circuit::rot, py::arg("axis"), py::arg("target"), py::arg("angle"))
      .def("gates", [](const Circuit &c) {
        py::list out;
        for (const Gate &g : c.gates()) out.append(gate_to_py(g));
        return out;
      })
      .def("counts", &gate_counts)
      .def("__len__", &Circuit::size)
      .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; })
      .def("to_json", [](const Circuit &c) { return io::serialize_circuit(c); })
      .def_static("from_json", [](const std::string &text) { return io::parse_circuit(text).circuit; })
      .def("to_qasm", &io::to_qasm);

  py::class_<UcrGate>(m, "UcrGate")
      .def(py::init<std::vector<int>, int, RotationAxis, std::vector<double>>(), py::arg("controls"),
           py::arg("target"), py::arg("axis"), py::arg("angles"))
      .def_readonly("controls", &UcrGate::controls)
      .def_readonly("target", &UcrGate::target)
      .def_readonly("angles", &UcrGate::angles);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("n", &BoundReport::n)
      .def_readonly("upper_cnot", &BoundReport::upper_cnot)
      .def_readonly("upper_rot", &BoundReport::upper_rot)
      .def_readonly("lower_cnot", &BoundReport::lower_cnot)
      .def_readonly("lower_rot", &BoundReport::lower_rot)
      .def_readonly("qr_comparison_cnot", &BoundReport::qr_comparison_cnot);

  py::class_<SynthesisResult>(m, "SynthesisResult")
      .def_readonly("circuit", &SynthesisResult::circuit)
      .def_readonly("residual_phase", &SynthesisResult::residual_phase)
      .def_readonly("counts", &SynthesisResult::counts)
      .def_readonly("bounds", &SynthesisResult::bounds)
      .def("to_json", [](const SynthesisResult &r) { return io::serialize_circuit(r); });

  m.def("random_state", &random_state, py::arg("n"), py::arg("seed"));
  m.def("fidelity", &fidelity, py::arg("x"), py::arg("y"));
  m.def("inner", &inner, py::arg("y"), py::arg("x"));

  m.def("gray", [](std::uint64_t v) { return gray(v); }, py::arg("m"));
  m.def("alpha_to_theta", [](const std::vector<double> &a) { return alpha_to_theta(a); },
        py::arg("alpha"));
  m.def("theta_to_alpha", [](const std::vector<double> &t) { return theta_to_alpha(t); },
        py::arg("theta"));

  m.def("lower_ucr", py::overload_cast<const UcrGate &, int, bool>(&lower_ucr), py::arg("gate"),
        py::arg("n"), py::arg("mirrored") = false);
  m.def("simplify", [](const Circuit &c) { return simplify(c); }, py::arg("circuit"));
  m.def("dagger", &dagger, py::arg("circuit"));

  m.def("apply_circuit", py::overload_cast<const StateVector &, const Circuit &>(&apply_circuit),
        py::arg("x"), py::arg("circuit"));
  m.def("apply_ucr", py::overload_cast<const StateVector &, const UcrGate &>(&apply_ucr),
        py::arg("x"), py::arg("gate"));

  m.def("bounds", &bounds, py::arg("n"));
  m.def(
      "disentangle",
      [](const StateVector &x, std::optional<double> prune) { return disentangle(x, {prune, false}); },
      py::arg("x"), py::arg("prune_atol") = py::none());
  m.def(
      "prepare",
      [](const StateVector &a, const StateVector &b, std::optional<double> prune, bool mirror) {
        return prepare(a, b, {prune, mirror});
      },
      py::arg("a"), py::arg("b"), py::arg("prune_atol") = py::none(), py::arg("mirror") = false);
  m.def(
      "prepare_from_basis",
      [](std::uint64_t index, const StateVector &b, std::optional<double> prune) {
        return prepare_from_basis(index, b, {prune, false});
      },
      py::arg("index"), py::arg("b"), py::arg("prune_atol") = py::none());

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<io::ExportError>(m, "ExportError", PyExc_ValueError);
}
