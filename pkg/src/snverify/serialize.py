"""JSON schemas for matrices, states, projectors, and subspaces.

Complex entries serialize as [re, im] pairs at full double precision;
matrices are row-major.
"""

from __future__ import annotations

import numpy as np

from .entangled import StateVector, Subspace
from .errors import InvalidArgumentError
from .symgroup import Partition
from .wfs import KrausElement, Projector


def _complex_list(values: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values).reshape(-1)]


def matrix_to_json(matrix: np.ndarray) -> dict:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise InvalidArgumentError(f"expected a matrix, got ndim {matrix.ndim}")
    rows, cols = matrix.shape
    return {"rows": rows, "cols": cols, "data": _complex_list(matrix)}


def matrix_from_json(doc: dict) -> np.ndarray:
    try:
        rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    except (KeyError, TypeError):
        raise InvalidArgumentError("matrix JSON needs rows, cols, data") from None
    if len(data) != rows * cols:
        raise InvalidArgumentError(f"matrix data length {len(data)} != {rows}*{cols}")
    flat = np.array([complex(re, im) for re, im in data])
    return flat.reshape(rows, cols)


def state_to_json(state: StateVector) -> dict:
    return {
        "registers": list(state.registers),
        "amplitudes": _complex_list(state.amplitudes),
    }


def state_from_json(doc: dict) -> StateVector:
    try:
        registers, amplitudes = doc["registers"], doc["amplitudes"]
    except (KeyError, TypeError):
        raise InvalidArgumentError("state JSON needs registers, amplitudes") from None
    amps = np.array([complex(re, im) for re, im in amplitudes])
    return StateVector(registers=tuple(registers), amplitudes=amps)


def projector_to_json(proj: Projector, label: Partition) -> dict:
    doc = matrix_to_json(proj.matrix)
    doc["lambda"] = str(label)
    doc["rank"] = proj.rank
    return doc


def kraus_to_json(kraus: KrausElement) -> dict:
    doc = matrix_to_json(kraus.matrix)
    doc["lambda"] = str(kraus.shape_label)
    return doc


def subspace_to_json(space: Subspace) -> dict:
    return {
        "ambient_dim": space.ambient_dim,
        "dim": space.dim,
        "basis": [_complex_list(space.basis[:, k]) for k in range(space.dim)],
    }
