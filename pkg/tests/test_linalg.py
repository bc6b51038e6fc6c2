"""Sparse exact elimination against sympy's rational matrices."""

from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from hopfmod import linalg
from hopfmod.cyclo import field

F = field(1)


def rows_strategy(max_rows=6, max_cols=6):
    entry = st.integers(-3, 3)
    return st.integers(1, max_cols).flatmap(
        lambda m: st.lists(st.lists(entry, min_size=m, max_size=m), min_size=1, max_size=max_rows))


def dense(M):
    return [[F.from_int(x) for x in r] for r in M]


def sparse(M):
    return [{j: F.from_int(x) for j, x in enumerate(r) if x} for r in M]


@settings(max_examples=60, deadline=None)
@given(rows_strategy())
def test_rank_matches_sympy(M):
    assert linalg.rank(sparse(M), len(M[0]), F) == sympy.Matrix(M).rank()


@settings(max_examples=60, deadline=None)
@given(rows_strategy())
def test_nullspace_vectors_are_killed(M):
    n = len(M[0])
    ns = linalg.nullspace(sparse(M), n, F)
    assert len(ns) == n - sympy.Matrix(M).rank()
    for v in ns:
        for r in M:
            assert sum((v.get(j, F.zero) * x for j, x in enumerate(r)), F.zero) == F.zero


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_matches_sympy(M):
    S = sympy.Matrix(M)
    if S.det() == 0:
        return
    inv = linalg.inverse(dense(M), F)
    Sinv = S.inv()
    for i in range(3):
        for j in range(3):
            q = Sinv[i, j]
            assert inv[i][j] == F.from_fraction(Fraction(int(q.p), int(q.q)))


def test_coordinates_and_span():
    basis = [{0: F.one, 1: F.one}, {1: F.one}]
    v = {0: F.from_int(2), 1: F.from_int(5)}
    assert linalg.coordinates(v, basis, F) == [F.from_int(2), F.from_int(3)]
    assert linalg.in_span(v, basis, 2, F)
    assert not linalg.in_span({2: F.one}, basis, 3, F)


def test_kron_and_block_diag_shapes():
    A = dense([[1, 2], [3, 4]])
    K = linalg.kron(A, linalg.identity(3, F), F)
    assert len(K) == 6 and K[3][3] == F.from_int(4)
    B = linalg.block_diag([A, dense([[7]])], F)
    assert B[2][2] == F.from_int(7) and B[0][2] == F.zero


def test_scalar_multiple_detection():
    A = dense([[1, 2], [0, 1]])
    assert linalg.is_scalar_multiple(linalg.matscale(A, F.from_int(-3)), A) == F.from_int(-3)
    assert linalg.is_scalar_multiple(dense([[1, 0], [0, 2]]), A) is None


def test_matpow_agrees_with_repeated_product():
    A = dense([[1, 1], [0, 1]])
    assert linalg.mat_equal(linalg.matpow(A, 5, F), dense([[1, 5], [0, 1]]))
