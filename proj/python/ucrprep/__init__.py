"""State-to-state circuit synthesis with uniformly controlled rotations."""

from ._core import (
    BoundReport,
    Circuit,
    ExportError,
    GateCounts,
    ParseError,
    RotationAxis,
    StateVector,
    SynthesisResult,
    UcrGate,
    alpha_to_theta,
    apply_circuit,
    apply_ucr,
    bounds,
    dagger,
    disentangle,
    fidelity,
    gray,
    inner,
    lower_ucr,
    prepare,
    prepare_from_basis,
    random_state,
    simplify,
    theta_to_alpha,
)

__all__ = [name for name in dir() if not name.startswith("_")]
