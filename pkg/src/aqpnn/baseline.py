"""Classical one-neuron Rosenblatt perceptron, used as the linear baseline."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class ClassicalPerceptron:
    weights: np.ndarray
    bias: float
    learning_rate: float
    # number of weight updates performed in each epoch
    updates_per_epoch: tuple[int, ...] = ()

    def predict(self, x) -> int:
        return step(float(np.dot(self.weights, x)) + self.bias)


def step(z: float) -> int:
    return 1 if z >= 0.0 else 0


def classical_train(
    samples: Sequence[tuple[Sequence[float], int]],
    rate: float = 1.0,
    max_epochs: int = 1000,
    seed: int | None = None,
) -> tuple[ClassicalPerceptron, bool, int]:
    """Train with ``w += rate * (label - prediction) * x`` until an epoch makes no update.

    Weights start at zero, or uniform in [-1, 1) when ``seed`` is given.
    Returns the perceptron, whether it converged, and the number of epochs run.
    """
    if rate <= 0:
        raise ValueError("rate must be positive")
    xs = [np.asarray(x, dtype=np.float64) for x, _ in samples]
    labels = [int(label) for _, label in samples]
    if not xs:
        raise ValueError("no samples")
    dim = xs[0].shape[0]
    if any(x.shape != (dim,) for x in xs):
        raise ValueError("samples have inconsistent dimensions")

    if seed is None:
        w = np.zeros(dim)
        b = 0.0
    else:
        rng = np.random.default_rng(seed)
        w = rng.uniform(-1.0, 1.0, size=dim)
        b = float(rng.uniform(-1.0, 1.0))

    history: list[int] = []
    converged = False
    for _ in range(max_epochs):
        updates = 0
        for x, label in zip(xs, labels):
            delta = label - step(float(w @ x) + b)
            if delta:
                w = w + rate * delta * x
                b += rate * delta
                updates += 1
        history.append(updates)
        if updates == 0:
            converged = True
            break

    model = ClassicalPerceptron(w, b, rate, tuple(history))
    return model, converged, len(history)
