import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aqpnn.algebra import (
    IDENTITY,
    approx_eq,
    hadamard_product,
    is_normalized,
    mat2,
    mat_apply,
    outer_product,
    qubit,
)
from aqpnn.errors import LengthMismatch

reals = st.floats(min_value=-10, max_value=10, allow_nan=False)
vec2 = st.tuples(reals, reals).map(np.array)


def test_mat_apply_not_matrix():
    assert mat_apply(mat2([[0, 1], [1, 0]]), qubit(1, 0)).tolist() == [0, 1]


def test_mat_apply_identity():
    assert mat_apply(IDENTITY, qubit(0.6, 0.8)).tolist() == [0.6, 0.8]


def test_mat_apply_xor_weight():
    out = mat_apply(mat2([[1.1, 1.2], [0, 0]]), qubit(1, 0))
    assert approx_eq(out, [1.1, 0.0], 1e-15)


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ([1, 0], [1, 0], [[1, 0], [0, 0]]),
        ([0, 1], [1, 0], [[0, 0], [1, 0]]),
        ([0.5, -0.5], [0.2, 0.8], [[0.1, 0.4], [-0.1, -0.4]]),
    ],
)
def test_outer_product(u, v, expected):
    assert approx_eq(outer_product(qubit(u), qubit(v)), expected, 1e-15)


def test_hadamard_product_matrix_example():
    out = hadamard_product([[1, 2], [3, 4]], [[5, 6], [7, 8]])
    assert out.tolist() == [[5, 12], [21, 32]]


def test_hadamard_product_ones_and_square():
    v = np.array([0.3, -2.0, 7.5])
    assert np.array_equal(hadamard_product(v, np.ones(3)), v)
    assert hadamard_product([2, -3], [2, -3]).tolist() == [4, 9]


def test_hadamard_product_length_mismatch():
    with pytest.raises(LengthMismatch):
        hadamard_product([1, 2], [1, 2, 3])


def test_approx_eq_examples():
    assert approx_eq(qubit(2.3, 0), qubit(2.3, 0), 1e-9)
    assert not approx_eq(qubit(2.2, 0), qubit(2.4, 0), 1e-9)
    assert approx_eq(qubit(1, 0), qubit(1 + 5e-10, 0), 1e-9)
    with pytest.raises(ValueError):
        approx_eq(qubit(1, 0), qubit(1, 0), 0.0)


def test_values_are_read_only():
    q = qubit(1, 0)
    with pytest.raises(ValueError):
        q[0] = 2.0
    assert is_normalized(q)
    assert not is_normalized(qubit(2.2, 0))


def test_mat2_rejects_non_finite():
    with pytest.raises(ValueError):
        mat2([[np.inf, 0], [0, 1]])


@given(vec2, vec2, vec2)
def test_outer_product_rank_one_identity(u, v, w):
    lhs = mat_apply(outer_product(u, v), w)
    assert np.allclose(lhs, u * np.dot(v, w), atol=1e-12 * (1 + np.abs(u).max() * np.abs(v).max() * np.abs(w).max()))


@given(st.lists(st.tuples(reals, reals, reals), min_size=1, max_size=6))
def test_hadamard_commutative_associative(rows):
    a, b, c = (np.array(col) for col in zip(*rows))
    assert np.array_equal(hadamard_product(a, b), hadamard_product(b, a))
    lhs = hadamard_product(hadamard_product(a, b), c)
    rhs = hadamard_product(a, hadamard_product(b, c))
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12)


@settings(max_examples=200)
@given(st.tuples(reals, reals, reals, reals), vec2, vec2)
def test_mat_apply_distributes(entries, p, q):
    m = mat2(entries)
    lhs = mat_apply(m, p + q)
    rhs = mat_apply(m, p) + mat_apply(m, q)
    assert np.allclose(lhs, rhs, atol=1e-12 * 400)
