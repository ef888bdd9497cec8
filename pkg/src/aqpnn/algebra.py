"""Fixed-size real primitives for qubits (length-2 vectors) and 2x2 operators.

Qubits and operators are plain float64 numpy arrays of shape ``(2,)`` and
``(2, 2)``. Constructors return read-only arrays so values can be shared
between models and reports without defensive copies.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import LengthMismatch

EPS_NORM = 1e-9

Qubit = np.ndarray
Mat2 = np.ndarray


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def qubit(alpha: float | Sequence[float], beta: float | None = None) -> Qubit:
    """Build a read-only qubit from two amplitudes or a length-2 sequence."""
    if beta is None:
        arr = np.array(alpha, dtype=np.float64).reshape(-1)
    else:
        arr = np.array([alpha, beta], dtype=np.float64)
    if arr.shape != (2,):
        raise LengthMismatch(f"a qubit has 2 amplitudes, got shape {arr.shape}")
    return _frozen(arr)


def mat2(entries: Iterable) -> Mat2:
    arr = np.array(entries, dtype=np.float64)
    if arr.shape == (4,):
        arr = arr.reshape(2, 2)
    if arr.shape != (2, 2):
        raise LengthMismatch(f"expected a 2x2 matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return _frozen(arr)


IDENTITY = mat2([[1.0, 0.0], [0.0, 1.0]])
KET0 = qubit(1.0, 0.0)
KET1 = qubit(0.0, 1.0)


def is_normalized(q: Qubit, eps: float = EPS_NORM) -> bool:
    return abs(float(q[0] * q[0] + q[1] * q[1]) - 1.0) <= eps


def norm(q: Qubit) -> float:
    return float(np.hypot(q[0], q[1]))


def mat_apply(m: Mat2, q: Qubit) -> Qubit:
    return _frozen(np.asarray(m, dtype=np.float64) @ np.asarray(q, dtype=np.float64))


def outer_product(u: Qubit, v: Qubit) -> Mat2:
    """Return ``|u><v|``, i.e. ``result[i][j] = u[i] * v[j]``."""
    return _frozen(np.outer(u, v).astype(np.float64))


def hadamard_product(a, b) -> np.ndarray:
    """Elementwise product of two equally shaped arrays."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise LengthMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    return a * b


def approx_eq(a, b, eps: float) -> bool:
    """True iff the largest absolute entry difference is at most ``eps``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        return False
    return bool(np.max(np.abs(a - b)) <= eps)
