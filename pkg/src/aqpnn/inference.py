"""Network response for a new input.

Every activation operator is applied to the weighted sum; the operator whose
output is closest to a normalized qubit (smallest ``| ||F y||^2 - 1 |``) wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import algebra
from .algebra import Qubit
from .errors import EmptyModel, LengthMismatch
from .training import Model, compute_weighted_sum

MODES = ("classify", "transform")


@dataclass(frozen=True, eq=False)
class ResponseReport:
    weighted_sum: Qubit
    scores: tuple[tuple[int, float], ...]
    selected_index: int
    response: Qubit
    mode: str


def _weighted_sum(model: Model, inputs: Sequence) -> Qubit:
    if len(inputs) != model.n:
        raise LengthMismatch(f"model expects {model.n} input qubit(s), got {len(inputs)}")
    return compute_weighted_sum(model.weights, [algebra.qubit(x) for x in inputs])


def superposition_output(model: Model, inputs: Sequence) -> list[Qubit]:
    y = _weighted_sum(model, inputs)
    return [op.apply(y) for op in model.operators]


def normalization_scores(outputs: Sequence[Qubit]) -> np.ndarray:
    if not len(outputs):
        return np.zeros(0)
    stacked = np.asarray(outputs, dtype=np.float64)
    squared_norms = algebra.hadamard_product(stacked, stacked).sum(axis=1)
    good = np.ones(len(outputs))
    return np.abs(squared_norms - good)


def select_response(model: Model, inputs: Sequence, mode: str = "classify") -> ResponseReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not model.operators:
        raise EmptyModel("model has no activation operators")
    y = _weighted_sum(model, inputs)
    outputs = [op.apply(y) for op in model.operators]
    scores = normalization_scores(outputs)
    # one-hot selector; argmin already breaks ties towards the lowest index
    selector = np.zeros(len(scores))
    selector[int(np.argmin(scores))] = 1.0
    best = int(np.flatnonzero(selector)[0])

    if mode == "classify":
        response = model.operators[best].target
    else:
        response = outputs[best]
    return ResponseReport(
        weighted_sum=y,
        scores=tuple((j, float(s)) for j, s in enumerate(scores)),
        selected_index=best,
        response=algebra.qubit(response),
        mode=mode,
    )
