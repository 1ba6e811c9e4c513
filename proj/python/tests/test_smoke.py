import math

import numpy as np
import pytest

import ucrprep


def test_prepare_counts_and_fidelity():
    for n in range(1, 7):
        a = ucrprep.random_state(n, 10 + n)
        b = ucrprep.random_state(n, 20 + n)
        r = ucrprep.prepare(a, b)
        assert r.counts.cnot == 2 ** (n + 2) - 4 * n - 4
        assert r.counts.rot == 2 ** (n + 2) - 5
        out = ucrprep.apply_circuit(a, r.circuit)
        assert ucrprep.fidelity(out, b) >= 1 - 1e-9
        assert abs(ucrprep.inner(b, out) - complex(math.cos(r.residual_phase), math.sin(r.residual_phase))) < 1e-9


def test_mirror_variant():
    a = ucrprep.random_state(4, 1)
    b = ucrprep.random_state(4, 2)
    plain = ucrprep.prepare(a, b)
    mirrored = ucrprep.prepare(a, b, mirror=True)
    assert mirrored.circuit != plain.circuit
    assert ucrprep.fidelity(ucrprep.apply_circuit(a, mirrored.circuit), b) >= 1 - 1e-9


def test_state_from_numpy():
    x = ucrprep.StateVector(np.array([1, 0, 0, 1], dtype=complex), normalize=True)
    assert x.num_qubits == 2
    np.testing.assert_allclose(x.amplitudes(), np.array([1, 0, 0, 1]) / math.sqrt(2))
    with pytest.raises(ValueError):
        ucrprep.StateVector(np.array([1, 1], dtype=complex))
    with pytest.raises(ValueError):
        ucrprep.StateVector(np.ones(3, dtype=complex), normalize=True)


def test_bell_from_basis():
    bell = ucrprep.StateVector(np.array([1, 0, 0, 1], dtype=complex), normalize=True)
    r = ucrprep.prepare_from_basis(0, bell)
    assert (r.counts.cnot, r.counts.rot) == (2, 6)
    out = ucrprep.apply_circuit(ucrprep.StateVector.basis(2, 0), r.circuit)
    assert ucrprep.fidelity(out, bell) == pytest.approx(1.0, abs=1e-12)


def test_bounds():
    b = ucrprep.bounds(5)
    assert (b.upper_cnot, b.upper_rot, b.lower_cnot, b.lower_rot) == (104, 123, 12, 62)


def test_angle_transform_round_trip():
    alpha = [0.3, -1.2, 2.0, 0.7]
    theta = ucrprep.alpha_to_theta(alpha)
    np.testing.assert_allclose(ucrprep.theta_to_alpha(theta), alpha, atol=1e-12)
    assert [ucrprep.gray(i) for i in range(4)] == [0, 1, 3, 2]


def test_lower_ucr_matches_direct_application():
    g = ucrprep.UcrGate([1, 2], 3, ucrprep.RotationAxis.y(), [0.1, 0.2, 0.3, 0.4])
    x = ucrprep.random_state(3, 7)
    for mirrored in (False, True):
        c = ucrprep.lower_ucr(g, 3, mirrored)
        assert len(c) == 8
        direct = ucrprep.apply_ucr(x, g).amplitudes()
        lowered = ucrprep.apply_circuit(x, c).amplitudes()
        np.testing.assert_allclose(lowered, direct, atol=1e-12)


def test_json_and_qasm():
    r = ucrprep.prepare(ucrprep.random_state(3, 1), ucrprep.random_state(3, 2))
    assert ucrprep.Circuit.from_json(r.to_json()) == r.circuit
    qasm = r.circuit.to_qasm()
    assert qasm.startswith("OPENQASM 2.0;")
    assert "qreg q[3];" in qasm
    with pytest.raises(ucrprep.ParseError):
        ucrprep.Circuit.from_json('{"n": 2, "gates": [')
    general = ucrprep.Circuit(1)
    general.rot(ucrprep.RotationAxis(0, 0.6, 0.8), 1, 0.2)
    with pytest.raises(ucrprep.ExportError):
        general.to_qasm()
