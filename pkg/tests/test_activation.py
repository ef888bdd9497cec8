import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aqpnn.activation import (
    ActivationOperator,
    best_effort_output,
    select_operator,
    solve_activation,
    unitarity_defect,
    wrap_angle,
)
from aqpnn.algebra import approx_eq, mat_apply, qubit
from aqpnn.errors import NoRealSolution, ZeroWeightedSum

R2 = 1 / math.sqrt(2)
NOT = [[0, 1], [1, 0]]
HADAMARD = [[R2, R2], [R2, -R2]]

# (weighted sum, target, matrix printed in the worked examples, tolerance)
WORKED_CASES = [
    ([1, 0], [0, 1], NOT, 1e-9),
    ([1, 0], [R2, R2], HADAMARD, 1e-9),
    ([2.2, 0], [1, 0], [[0.4545, -0.8907], [0, 1]], 1e-3),
    ([2.4, 0], [1, 0], [[0.4167, -0.9091], [0, 1]], 1e-3),
    ([2.3, 0], [0, 1], [[0, -1], [0.4348, 0.9005]], 1e-3),
]


def contains(result, matrix, tol):
    return any(approx_eq(c.matrix, matrix, tol) for c in result.candidates)


@pytest.mark.parametrize("y, d, matrix, tol", WORKED_CASES)
def test_worked_example_matrix_in_candidate_set(y, d, matrix, tol):
    result = solve_activation(qubit(y), qubit(d))
    assert contains(result, matrix, tol)
    for c in result.candidates:
        assert approx_eq(c.apply(qubit(y)), d, 1e-9)


def test_not_gate_angles():
    result = solve_activation(qubit(1, 0), qubit(0, 1))
    op = next(c for c in result.candidates if approx_eq(c.matrix, NOT, 1e-9))
    assert op.theta == pytest.approx(-math.pi / 2)
    assert op.phi == pytest.approx(math.pi / 2)


def test_hadamard_angles():
    result = solve_activation(qubit(1, 0), qubit(R2, R2))
    op = next(c for c in result.candidates if approx_eq(c.matrix, HADAMARD, 1e-9))
    assert math.degrees(op.theta) == pytest.approx(-45)
    assert math.degrees(op.phi) == pytest.approx(135)


def test_fixed_point_contains_identity():
    result = solve_activation(qubit(1, 0), qubit(1, 0))
    assert contains(result, np.eye(2), 1e-12)


def test_degenerate_branches_are_merged():
    # R equals |alpha_d| and |beta_d| is 0: theta has one branch, phi two
    result = solve_activation(qubit(1, 0), qubit(1, 0))
    assert len(result.candidates) == 2
    # generic case: four candidates
    assert len(solve_activation(qubit(2, 1), qubit(0.6, 0.8)).candidates) == 4


def test_candidate_order_is_deterministic():
    result = solve_activation(qubit(2.2, 0), qubit(1, 0))
    first = result.candidates[0]
    # "+acos" theta branch and "asin" phi branch come first
    assert first.theta == pytest.approx(math.acos(1 / 2.2))
    assert first.phi == pytest.approx(0.0)


def test_errors():
    with pytest.raises(ZeroWeightedSum):
        solve_activation(qubit(0, 0), qubit(1, 0))
    with pytest.raises(NoRealSolution):
        solve_activation(qubit(0.5, 0), qubit(1, 0))
    with pytest.raises(NoRealSolution):
        solve_activation(qubit(0.3, 0.4), qubit(0.6, 0.8))


def test_boundary_radius_is_solvable():
    result = solve_activation(qubit(0.6, 0.8), qubit(0, 1))
    for c in result.candidates:
        assert approx_eq(c.apply(qubit(0.6, 0.8)), [0, 1], 1e-9)


angles = st.floats(min_value=-10, max_value=10, allow_nan=False)


@given(angles)
def test_wrap_angle_range(x):
    w = wrap_angle(x)
    assert -math.pi < w <= math.pi
    assert math.isclose(math.cos(w), math.cos(x), abs_tol=1e-9)
    assert math.isclose(math.sin(w), math.sin(x), abs_tol=1e-9)


@given(
    st.floats(min_value=1, max_value=5),
    st.floats(min_value=-math.pi, max_value=math.pi),
    st.floats(min_value=-math.pi, max_value=math.pi),
)
def test_candidates_structure_and_contract(r, psi, chi):
    y = qubit(r * math.cos(psi), r * math.sin(psi))
    d = qubit(math.cos(chi), math.sin(chi))
    result = solve_activation(y, d)
    assert 1 <= len(result.candidates) <= 4
    for c in result.candidates:
        assert -math.pi < c.theta <= math.pi and -math.pi < c.phi <= math.pi
        expected = [[math.cos(c.theta), -math.sin(c.theta)], [math.sin(c.phi), math.cos(c.phi)]]
        assert approx_eq(c.matrix, expected, 1e-12)
        assert approx_eq(mat_apply(c.matrix, y), d, 1e-9)


def _brute_ffT(theta, phi):
    f = [[math.cos(theta), -math.sin(theta)], [math.sin(phi), math.cos(phi)]]
    return [[sum(f[i][k] * f[j][k] for k in range(2)) for j in range(2)] for i in range(2)]


@pytest.mark.parametrize(
    "theta, phi, expected",
    [
        (0.0, 0.0, [[1, 0], [0, 1]]),
        (-math.pi / 2, math.pi / 2, [[1, 0], [0, 1]]),
        (0.0, math.pi / 2, [[1, 1], [1, 1]]),
    ],
)
def test_unitarity_defect_examples(theta, phi, expected):
    op = ActivationOperator.from_angles(theta, phi, qubit(1, 0))
    assert approx_eq(unitarity_defect(op), expected, 1e-12)
    assert approx_eq(_brute_ffT(theta, phi), expected, 1e-12)


@given(angles, angles)
def test_unitarity_defect_closed_form(theta, phi):
    op = ActivationOperator.from_angles(theta, phi, qubit(1, 0))
    s = math.sin(phi - theta)
    assert approx_eq(unitarity_defect(op), [[1, s], [s, 1]], 1e-12)


def test_select_reuses_existing_not_operator():
    first = solve_activation(qubit(1, 0), qubit(0, 1))
    second = solve_activation(qubit(0, 1), qubit(1, 0))
    f_not = next(c for c in first.candidates if approx_eq(c.matrix, NOT, 1e-9))
    assert select_operator(second, [f_not]) is f_not


def test_select_single_candidate():
    result = solve_activation(qubit(1, 0), qubit(0, 1))
    single = type(result)(candidates=result.candidates[:1], source=result.source)
    assert select_operator(single, []) is single.candidates[0]


def test_select_xor_pattern_four_reuses_f3():
    p3 = solve_activation(qubit(2.3, 0), qubit(0, 1))
    f3 = select_operator(p3, [])
    p4 = solve_activation(qubit(2.3, 0), qubit(0, 1))
    assert select_operator(p4, [f3]) is f3


def test_select_lookahead_prefers_shared_candidate():
    p1 = solve_activation(qubit(1, 0), qubit(0, 1))
    p2 = solve_activation(qubit(0, 1), qubit(1, 0))
    # without lookahead the first enumerated branch is taken
    assert approx_eq(select_operator(p1, []).matrix, [[0, -1], [1, 0]], 1e-12)
    assert approx_eq(select_operator(p1, [], [p2]).matrix, NOT, 1e-12)


def test_select_prefers_same_target_on_duplicate_matrices():
    y = qubit(1, 0)
    result = solve_activation(y, qubit(1, 0))
    ident = next(c for c in result.candidates if approx_eq(c.matrix, np.eye(2), 1e-12))
    foreign = ActivationOperator(ident.theta, ident.phi, ident.matrix, qubit(0, 1))
    assert select_operator(result, [foreign, ident]) is ident


def test_best_effort_output():
    assert approx_eq(best_effort_output(qubit(0.8, 0), qubit(1, 0)), [0.8, 0], 1e-12)
    assert approx_eq(best_effort_output(qubit(0.3, 0.4), qubit(0, 1)), [0, 0.5], 1e-12)
    # solvable case returns the target itself
    assert approx_eq(best_effort_output(qubit(2, 1), qubit(0.6, 0.8)), [0.6, 0.8], 1e-12)
