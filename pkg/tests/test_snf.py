import random

from hypothesis import given, settings, strategies as st

from cvstab.snf import (
    identity,
    integer_solve,
    invariant_factors,
    mat_inverse_unimodular,
    mat_mul,
    mat_vec,
    nullspace_integer,
    smith_normal_form,
)


def check_snf(A):
    U, D, V = smith_normal_form(A)
    assert mat_mul(mat_mul(U, A), V) == D
    m, n = len(A), len(A[0])
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a:
            assert b % a == 0
        else:
            assert b == 0
    # transforms are unimodular
    assert mat_mul(U, mat_inverse_unimodular(U)) == identity(m)
    assert mat_mul(V, mat_inverse_unimodular(V)) == identity(n)
    return diag


def test_known_cases():
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert check_snf([[2, 4], [6, 8]]) == [2, 4]
    assert check_snf([[1, 0], [0, 1]]) == [1, 1]
    assert check_snf([[0, 0], [0, 0]]) == [0, 0]
    assert check_snf([[6]]) == [6]
    assert check_snf([[2, 3]]) == [1]
    assert check_snf([[4, 0], [0, 6]]) == [2, 12]


def test_rectangular():
    assert check_snf([[2, 0, 0], [0, 3, 0]]) == [1, 6]
    assert check_snf([[1], [2], [3]]) == [1]


def test_invariant_factors():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[12, 0], [0, 18]]) == [6, 36]


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_random_snf(A):
    check_snf(A)


def test_integer_solve():
    A = [[2, 0], [0, 3]]
    assert integer_solve(A, [4, 9]) == [2, 3]
    assert integer_solve(A, [1, 0]) is None
    A = [[2, 4], [1, 2]]
    x = integer_solve(A, [6, 3])
    assert x is not None and mat_vec(A, x) == [6, 3]
    assert integer_solve(A, [6, 4]) is None
    assert integer_solve([[0, 0]], [1]) is None
    assert integer_solve([[0, 0]], [0]) == [0, 0]


@settings(max_examples=60)
@given(
    st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=2, max_size=3),
    st.lists(st.integers(-5, 5), min_size=2, max_size=2),
)
def test_solve_round_trip(A, x):
    b = mat_vec(A, x)
    sol = integer_solve(A, b)
    assert sol is not None
    assert mat_vec(A, sol) == b


def test_nullspace():
    ns = nullspace_integer([[1, 2, 3]])
    assert len(ns) == 2
    for v in ns:
        assert mat_vec([[1, 2, 3]], v) == [0]
    assert nullspace_integer([[1, 0], [0, 1]]) == []


def test_stress_unimodularity():
    rng = random.Random(7)
    for _ in range(40):
        A = [[rng.randint(-20, 20) for _ in range(rng.randint(1, 4))] for _ in range(rng.randint(1, 4))]
        A = [row[: len(A[0])] for row in A] if len({len(r) for r in A}) > 1 else A
        n = min(len(r) for r in A)
        A = [r[:n] for r in A]
        check_snf(A)
