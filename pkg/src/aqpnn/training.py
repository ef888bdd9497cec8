"""Single-neuron training loop: weighted sums, conflict detection, weight
updates and construction of the unique activation-operator set."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import algebra
from .activation import (
    EPS_DEDUP,
    ActivationOperator,
    SolveResult,
    best_effort_output,
    select_operator,
    solve_activation,
)
from .algebra import Mat2, Qubit
from .errors import (
    ConfigError,
    InvalidPattern,
    LengthMismatch,
    NonConvergence,
    NoRealSolution,
    ZeroWeightedSum,
)

log = logging.getLogger(__name__)

INIT_MODES = ("identity", "uniform", "explicit")

# a sum accepted at this relative shortfall still has | ||F y||^2 - 1 | <= 1e-9
EPS_TRAIN_SOLVE = 4e-10


@dataclass(frozen=True, eq=False)
class TrainingPattern:
    inputs: tuple[Qubit, ...]
    target: Qubit

    def __init__(self, inputs, target):
        object.__setattr__(self, "inputs", tuple(algebra.qubit(x) for x in inputs))
        object.__setattr__(self, "target", algebra.qubit(target))

    @property
    def n(self) -> int:
        return len(self.inputs)


@dataclass(frozen=True)
class TrainConfig:
    gamma: float = 0.1
    max_epochs: int = 1000
    eps_collide: float = 1e-6
    eps_zero: float = 1e-9
    seed: int = 0
    init: str = "identity"
    init_low: float = -1.0
    init_high: float = 1.0
    init_weights: tuple[tuple[tuple[float, float], tuple[float, float]], ...] | None = None

    def __post_init__(self):
        if not 0.0 < self.gamma < 1.0:
            raise ConfigError(f"learning rate must satisfy 0 < gamma < 1, got {self.gamma}")
        if self.max_epochs < 1:
            raise ConfigError("max_epochs must be a positive integer")
        if self.eps_collide <= 0 or self.eps_zero <= 0:
            raise ConfigError("tolerances must be positive")
        if self.seed < 0:
            raise ConfigError("seed must be a non-negative integer")
        if self.init not in INIT_MODES:
            raise ConfigError(f"init must be one of {INIT_MODES}, got {self.init!r}")
        if self.init == "uniform" and not self.init_low < self.init_high:
            raise ConfigError("uniform init needs init_low < init_high")
        if self.init == "explicit" and not self.init_weights:
            raise ConfigError("explicit init needs init_weights")

    @classmethod
    def with_weights(cls, weights: Sequence, **kwargs) -> "TrainConfig":
        frozen = tuple(tuple(tuple(float(v) for v in row) for row in algebra.mat2(w)) for w in weights)
        return cls(init="explicit", init_weights=frozen, **kwargs)

    def to_dict(self) -> dict:
        out = {
            "gamma": self.gamma,
            "max_epochs": self.max_epochs,
            "eps_collide": self.eps_collide,
            "eps_zero": self.eps_zero,
            "seed": self.seed,
            "init": self.init,
        }
        if self.init == "uniform":
            out["init_low"] = self.init_low
            out["init_high"] = self.init_high
        if self.init == "explicit":
            out["init_weights"] = [[list(r) for r in w] for w in self.init_weights]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "TrainConfig":
        data = dict(data)
        if data.get("init_weights") is not None:
            data["init_weights"] = tuple(
                tuple(tuple(float(v) for v in row) for row in w) for w in data["init_weights"]
            )
        return cls(**data)


@dataclass(frozen=True, eq=False)
class Model:
    weights: tuple[Mat2, ...]
    operators: tuple[ActivationOperator, ...]
    pattern_ops: tuple[int, ...]
    epochs_used: int
    config: TrainConfig
    # (target qubit, class label) pairs; empty when labels are unknown
    labels: tuple[tuple[tuple[float, float], str], ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.weights)

    def label_for(self, q: Qubit, eps: float = EPS_DEDUP) -> str | None:
        for target, label in self.labels:
            if algebra.approx_eq(q, target, eps):
                return label
        return None


def compute_weighted_sum(weights: Sequence[Mat2], inputs: Sequence[Qubit]) -> Qubit:
    """Return ``sum_i w_i |x_i>``; the result is not normalized."""
    if len(weights) != len(inputs):
        raise LengthMismatch(f"{len(weights)} weight operators for {len(inputs)} inputs")
    if not weights:
        raise LengthMismatch("at least one input is required")
    total = np.zeros(2)
    for w, x in zip(weights, inputs):
        total = total + algebra.mat_apply(w, x)
    return algebra.qubit(total)


def update_weights(
    weights: Sequence[Mat2], pattern: TrainingPattern, weighted_sum: Qubit, gamma: float
) -> list[Mat2]:
    """One error-correction step ``w_i += gamma |d - y><x_i|`` for every input slot."""
    error = np.asarray(pattern.target) - np.asarray(weighted_sum)
    return [
        algebra.mat2(np.asarray(w) + gamma * algebra.outer_product(error, x))
        for w, x in zip(weights, pattern.inputs)
    ]


def detect_conflicts(
    sums: Sequence[Qubit],
    targets: Sequence[Qubit],
    eps_collide: float,
    eps_zero: float,
) -> list[int]:
    """Indices whose weighted sum is (near) zero or collides with a sum of another class.

    Equal sums inside one class are allowed.
    """
    if len(sums) != len(targets):
        raise LengthMismatch("sums and targets differ in length")
    bad = []
    for j, (y, d) in enumerate(zip(sums, targets)):
        if algebra.norm(y) <= eps_zero:
            bad.append(j)
            continue
        for k, (other, other_d) in enumerate(zip(sums, targets)):
            if k == j or algebra.approx_eq(d, other_d, eps_collide):
                continue
            if algebra.approx_eq(y, other, eps_collide):
                bad.append(j)
                break
    return bad


def validate_patterns(patterns: Sequence[TrainingPattern]) -> int:
    if not patterns:
        raise InvalidPattern("at least one training pattern is required")
    n = patterns[0].n
    for j, p in enumerate(patterns):
        if p.n != n or n < 1:
            raise InvalidPattern(f"pattern {j} has {p.n} inputs, expected {n}")
        for i, x in enumerate(p.inputs):
            if not algebra.is_normalized(x):
                raise InvalidPattern(f"pattern {j} input {i} is not a normalized qubit: {x.tolist()}")
        if not algebra.is_normalized(p.target):
            raise InvalidPattern(f"pattern {j} target is not a normalized qubit: {p.target.tolist()}")
    return n


def initial_weights(config: TrainConfig, n: int) -> list[Mat2]:
    if config.init == "identity":
        return [algebra.IDENTITY] * n
    if config.init == "explicit":
        if len(config.init_weights) != n:
            raise ConfigError(f"{len(config.init_weights)} initial weights for {n} inputs")
        return [algebra.mat2(w) for w in config.init_weights]
    rng = np.random.default_rng(config.seed)
    return [algebra.mat2(rng.uniform(config.init_low, config.init_high, size=(2, 2))) for _ in range(n)]


def train(patterns: Sequence[TrainingPattern], config: TrainConfig | None = None) -> Model:
    """Fit the weight operators and build the activation-operator set.

    Each epoch computes every weighted sum, then either updates the weights for
    all offending patterns (in index order) or, if there are none, solves one
    activation operator per pattern and returns. A pattern offends when its sum
    is zero, collides with a sum of another class, or is too short for any real
    activation operator to reach its target.

    For colliding or zero sums the error is taken against the weighted sum
    itself. For a sum that is merely too short, the error is taken against the
    best-effort activated output, which grows the sum along the target
    direction instead of pulling every class towards a common midpoint.
    """
    config = config or TrainConfig()
    patterns = list(patterns)
    n = validate_patterns(patterns)
    targets = [p.target for p in patterns]
    weights = initial_weights(config, n)

    offenders: list[int] = []
    for epoch in range(1, config.max_epochs + 1):
        sums = [compute_weighted_sum(weights, p.inputs) for p in patterns]
        conflicts = set(detect_conflicts(sums, targets, config.eps_collide, config.eps_zero))
        results: dict[int, SolveResult] = {}
        short: set[int] = set()
        for j, (y, d) in enumerate(zip(sums, targets)):
            if j in conflicts:
                continue
            try:
                results[j] = solve_activation(y, d, eps_solve=EPS_TRAIN_SOLVE, eps_zero=config.eps_zero)
            except NoRealSolution:
                short.add(j)
            except ZeroWeightedSum:
                conflicts.add(j)

        offenders = sorted(conflicts | short)
        if not offenders:
            model = _build_model(weights, patterns, results, epoch, config)
            log.debug("converged after %d epoch(s) with %d operator(s)", epoch, len(model.operators))
            return model

        log.debug("epoch %d: %d conflicting, %d unsolvable", epoch, len(conflicts), len(short))
        for j in offenders:
            signal = sums[j] if j in conflicts else best_effort_output(sums[j], targets[j])
            weights = update_weights(weights, patterns[j], signal, config.gamma)

    raise NonConvergence(config.max_epochs, tuple(offenders))


def _build_model(weights, patterns, results, epoch, config) -> Model:
    operators: list[ActivationOperator] = []
    pattern_ops: list[int] = []
    order = list(range(len(patterns)))
    for j in order:
        upcoming = [results[k] for k in order[j + 1:]]
        chosen = select_operator(results[j], operators, upcoming)
        for idx, op in enumerate(operators):
            if op is chosen:
                break
        else:
            operators.append(chosen)
            idx = len(operators) - 1
        pattern_ops.append(idx)
    return Model(
        weights=tuple(weights),
        operators=tuple(operators),
        pattern_ops=tuple(pattern_ops),
        epochs_used=epoch,
        config=config,
    )
