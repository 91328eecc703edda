"""Integer matrix normal forms: Smith decomposition and exact linear solving.

All matrices are lists of lists of Python ints. ``smith_normal_form`` returns
unimodular transforms, which downstream code uses both to present quotient
groups (invariant factors) and to solve linear systems over the integers.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(A, v):
    return [sum(A[i][t] * v[t] for t in range(len(v))) for i in range(len(A))]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_inverse_unimodular(U: list[list[int]]) -> list[list[int]]:
    """Invert an integer matrix with determinant +-1; result is integral."""
    n = len(U)
    M = [[Fraction(U[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    out = [[M[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in out for x in row), "matrix is not unimodular"
    return [[int(x) for x in row] for row in out]


def smith_normal_form(A: list[list[int]]):
    """Return (U, D, V) with D = U*A*V diagonal, d_i | d_{i+1}, U, V unimodular."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)

    def row_add(dst, src, k):
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def col_add(dst, src, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # locate a pivot of minimal absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    row_add(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t] != 0:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    col_add(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        if D[t][t] < 0:
            row_neg(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for t in range(min(m, n) - 1):
            a, b = D[t][t], D[t + 1][t + 1]
            if a and b % a != 0:
                # fold d_{t+1} into row t and re-reduce the 2x2 corner
                col_add(t, t + 1, 1)
                sub = smith_normal_form_block(D, U, V, t)
                assert sub
                changed = True
            elif a == 0 and b != 0:
                row_swap(t, t + 1)
                col_swap(t, t + 1)
                changed = True
    return U, D, V


def smith_normal_form_block(D, U, V, t):
    """Re-diagonalise from corner t after a mixing column op (helper)."""
    m, n = len(D), len(D[0])

    def row_add(dst, src, k):
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def col_add(dst, src, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    tt = t
    while tt < min(m, n):
        best = None
        for i in range(tt, m):
            for j in range(tt, n):
                if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(tt, best[0])
        col_swap(tt, best[1])
        while True:
            dirty = False
            for i in range(tt + 1, m):
                if D[i][tt] != 0:
                    row_add(i, tt, -(D[i][tt] // D[tt][tt]))
                    if D[i][tt] != 0:
                        row_swap(tt, i)
                        dirty = True
            for j in range(tt + 1, n):
                if D[tt][j] != 0:
                    col_add(j, tt, -(D[tt][j] // D[tt][tt]))
                    if D[tt][j] != 0:
                        col_swap(tt, j)
                        dirty = True
            if not dirty:
                break
        if D[tt][tt] < 0:
            D[tt] = [-a for a in D[tt]]
            U[tt] = [-a for a in U[tt]]
        tt += 1
    return True


def invariant_factors(A: list[list[int]]) -> list[int]:
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_solve(A: list[list[int]], b: list[int]):
    """One integer solution x of A x = b, or None if none exists."""
    return integer_solve_factored(smith_normal_form(A), b)


def integer_solve_factored(factorisation, b: list[int]):
    """Solve A x = b given a precomputed (U, D, V) factorisation of A."""
    U, D, V = factorisation
    m = len(D)
    n = len(D[0]) if m else len(V)
    c = mat_vec(U, b)
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return mat_vec(V, y)


def nullspace_integer(A: list[list[int]]) -> list[list[int]]:
    """Basis (as columns) of the integer nullspace of A."""
    m = len(A)
    n = len(A[0]) if m else 0
    _, D, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    return [[V[i][j] for i in range(n)] for j in range(rank, n)]
