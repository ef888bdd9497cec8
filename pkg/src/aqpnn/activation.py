"""Activation operators: solving for the two angles of

    F = [[cos(theta), -sin(theta)],
         [sin(phi),    cos(phi)  ]]

such that ``F @ y == d`` for a weighted-sum qubit ``y`` and a target ``d``.

The two rows decouple. Writing ``y = R [cos(psi), sin(psi)]``::

    row 1:  R cos(theta + psi) = d[0]
    row 2:  R sin(phi + psi)   = d[1]

so each angle has (at most) two branches and the solution set is their cross
product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import algebra
from .algebra import Mat2, Qubit
from .errors import NoRealSolution, ZeroWeightedSum

EPS_SOLVE = 1e-9
EPS_DEDUP = 1e-6
EPS_ZERO = 1e-9
_EPS_MERGE = 1e-9


def wrap_angle(x: float) -> float:
    """Map an angle to the half-open interval (-pi, pi]."""
    w = math.fmod(x + math.pi, 2.0 * math.pi)
    if w <= 0.0:
        w += 2.0 * math.pi
    return w - math.pi


def operator_matrix(theta: float, phi: float) -> Mat2:
    return algebra.mat2(
        [[math.cos(theta), -math.sin(theta)], [math.sin(phi), math.cos(phi)]]
    )


@dataclass(frozen=True, eq=False)
class ActivationOperator:
    theta: float
    phi: float
    matrix: Mat2
    target: Qubit

    @classmethod
    def from_angles(cls, theta: float, phi: float, target) -> "ActivationOperator":
        theta, phi = wrap_angle(theta), wrap_angle(phi)
        return cls(theta, phi, operator_matrix(theta, phi), algebra.qubit(target))

    def apply(self, q: Qubit) -> Qubit:
        return algebra.mat_apply(self.matrix, q)

    def same_matrix(self, other: "ActivationOperator", eps: float = EPS_DEDUP) -> bool:
        return algebra.approx_eq(self.matrix, other.matrix, eps)


@dataclass(frozen=True, eq=False)
class SolveResult:
    candidates: tuple[ActivationOperator, ...]
    source: Qubit

    def contains(self, op: ActivationOperator, eps: float = EPS_DEDUP) -> bool:
        return any(c.same_matrix(op, eps) for c in self.candidates)


def _distinct(angles: Sequence[float]) -> list[float]:
    out: list[float] = []
    for a in angles:
        a = wrap_angle(a)
        # angular distance, so -pi+tiny and pi merge
        if all(abs(wrap_angle(a - b)) > _EPS_MERGE for b in out):
            out.append(a)
    return out


def _ratio(amplitude: float, radius: float, eps: float, row: str) -> float:
    r = amplitude / radius
    if abs(r) > 1.0 + eps:
        raise NoRealSolution(
            f"|{row}| = {abs(amplitude):.6g} exceeds weighted-sum norm {radius:.6g}"
        )
    return min(1.0, max(-1.0, r))


def solve_activation(
    weighted_sum,
    target,
    *,
    eps_solve: float = EPS_SOLVE,
    eps_zero: float = EPS_ZERO,
) -> SolveResult:
    """Enumerate every activation operator mapping ``weighted_sum`` to ``target``.

    Candidates are ordered theta-branch first (``+acos`` before ``-acos``), then
    phi-branch (``asin`` before ``pi - asin``). Branches that coincide within
    1e-9 rad are merged, so between one and four candidates are returned.

    Raises
    ------
    ZeroWeightedSum
        If the weighted sum has norm ``<= eps_zero``.
    NoRealSolution
        If either target amplitude exceeds the weighted-sum norm by more than
        a relative ``eps_solve``.
    """
    y = algebra.qubit(weighted_sum)
    d = algebra.qubit(target)
    alpha, beta = float(y[0]), float(y[1])
    radius = math.hypot(alpha, beta)
    if radius <= eps_zero:
        raise ZeroWeightedSum(f"weighted sum {y.tolist()} is (numerically) zero")

    c = _ratio(float(d[0]), radius, eps_solve, "alpha_d")
    s = _ratio(float(d[1]), radius, eps_solve, "beta_d")

    theta0 = math.atan2(-beta, alpha)
    psi = math.atan2(beta, alpha)
    thetas = _distinct([theta0 + math.acos(c), theta0 - math.acos(c)])
    phis = _distinct([math.asin(s) - psi, math.pi - math.asin(s) - psi])

    candidates = tuple(
        ActivationOperator.from_angles(t, p, d) for t in thetas for p in phis
    )
    return SolveResult(candidates=candidates, source=y)


def best_effort_output(weighted_sum, target) -> Qubit:
    """Output of the closest activation operator when no exact one exists.

    Each row is rotated as far towards the target amplitude as the weighted-sum
    norm allows (the ``acos``/``asin`` arguments are clipped to [-1, 1]). When an
    exact solution exists this is just ``target``.
    """
    y = algebra.qubit(weighted_sum)
    d = algebra.qubit(target)
    radius = algebra.norm(y)
    if radius == 0.0:
        return algebra.qubit(0.0, 0.0)
    c = min(1.0, max(-1.0, float(d[0]) / radius))
    s = min(1.0, max(-1.0, float(d[1]) / radius))
    return algebra.qubit(radius * c, radius * s)


def select_operator(
    result: SolveResult,
    existing: Sequence[ActivationOperator],
    upcoming: Sequence[SolveResult] = (),
    *,
    eps_dedup: float = EPS_DEDUP,
) -> ActivationOperator:
    """Pick one candidate from ``result``, preferring reuse.

    1. A candidate equal (within ``eps_dedup``) to an already chosen operator
       returns that operator; one bound to the same target wins, then the
       lowest index.
    2. Otherwise the candidate that also solves the most ``upcoming`` patterns
       is chosen, so a later pattern can reuse it.
    3. Remaining ties fall back to enumeration order.
    """
    if not result.candidates:
        raise ValueError("solve result has no candidates")

    d = result.candidates[0].target
    matches = [
        op
        for op in existing
        if any(c.same_matrix(op, eps_dedup) for c in result.candidates)
    ]
    if matches:
        same_target = [op for op in matches if algebra.approx_eq(op.target, d, eps_dedup)]
        return (same_target or matches)[0]

    def shared(c: ActivationOperator) -> int:
        return sum(r.contains(c, eps_dedup) for r in upcoming)

    best = result.candidates[0]
    best_count = shared(best)
    for c in result.candidates[1:]:
        count = shared(c)
        if count > best_count:
            best, best_count = c, count
    return best


def unitarity_defect(op: ActivationOperator) -> Mat2:
    """Return ``F @ F.T``; equals ``[[1, s], [s, 1]]`` with ``s = sin(phi - theta)``."""
    m = np.asarray(op.matrix)
    return algebra.mat2(m @ m.T)
