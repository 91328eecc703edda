"""Exact linear algebra over the quadratic field, plus congruence solving.

Two solvers drive the lattice-model checks:

- ``congruence_solve``: given linear forms in real parameters that must be
  exactly zero or exactly integer, return the solution subgroup of R^k as a
  continuous span plus discrete generators.
- ``solve_mixed``: decide whether a target vector is an exact combination of
  continuous-parameter columns (real coefficients) and integer-parameter
  columns (integer coefficients).

Integer parts reduce to Smith-form computations; field parts are Gaussian
elimination over Q(sqrt(d)).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .scalars import QuadFieldScalar
from .snf import integer_solve, integer_solve_factored, nullspace_integer, smith_normal_form

Scalar = QuadFieldScalar
Vector = tuple[Scalar, ...]


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Rational):
        return Scalar(Fraction(value))
    raise TypeError(f"cannot coerce {value!r} to a field scalar")


_ZERO = Scalar(0)
_ONE = Scalar(1)


def _clone(M):
    return [[as_scalar(x) for x in row] for row in M]


def rref(M) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form over the field; returns (R, pivot_columns)."""
    R = _clone(M)
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = R[r][c]
        R[r] = [x / inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                factor = R[i][c]
                R[i] = [x - factor * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def nullspace(M, width: int | None = None) -> list[Vector]:
    """Basis of the right nullspace over the field."""
    if not M:
        if width is None:
            raise ValueError("nullspace of an empty system needs an explicit width")
        return [tuple(_ONE if i == j else _ZERO for i in range(width)) for j in range(width)]
    cols = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [_ZERO] * cols
        vec[f] = _ONE
        for r, p in enumerate(pivots):
            vec[p] = -R[r][f]
        basis.append(tuple(vec))
    return basis


def left_nullspace(M) -> list[Vector]:
    if not M:
        return []
    return nullspace([list(col) for col in zip(*M)], width=len(M))


def solve(M, b) -> list[Scalar] | None:
    """One exact solution of M x = b, or None if inconsistent."""
    if not M:
        return [] if all(as_scalar(x) == 0 for x in b) else None
    cols = len(M[0])
    aug = [[as_scalar(x) for x in row] + [as_scalar(bi)] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [_ZERO] * cols
    for r, p in enumerate(pivots):
        x[p] = R[r][cols]
    return x


def _surd_discriminant(values) -> int:
    ds = {v.d for v in values if v.b != 0}
    if len(ds) > 1:
        raise ValueError(f"mixed irrational discriminants in one system: {sorted(ds)}")
    return ds.pop() if ds else 0


def _split_integer_rows(rows_k, rhs_k=None):
    """Split K-valued equations with integer unknowns into integer equations.

    Each K-row (a_j + b_j sqrt(d)) x_j = r splits into rational and surd parts,
    then denominators are cleared.  Returns (A, c) integer matrices/vectors;
    rhs defaults to zero.
    """
    if rhs_k is None:
        rhs_k = [_ZERO] * len(rows_k)
    flat = [x for row in rows_k for x in row] + list(rhs_k)
    _surd_discriminant(flat)
    A, c = [], []
    for row, r in zip(rows_k, rhs_k):
        for part in ("a", "b"):
            coeffs = [getattr(x, part) for x in row]
            rhs = getattr(r, part)
            if all(q == 0 for q in coeffs) and rhs == 0:
                continue
            denom = 1
            for q in coeffs + [rhs]:
                denom = denom * q.denominator // _gcd(denom, q.denominator)
            A.append([int(q * denom) for q in coeffs])
            c.append(int(rhs * denom))
    return A, c


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _canonical_row(row: Vector) -> Vector | None:
    lead = next((x for x in row if x != 0), None)
    if lead is None:
        return None
    return tuple(x / lead for x in row)


def congruence_solve(rows, width: int) -> tuple[list[Vector], list[Vector]]:
    """Solve a system of exact-zero and integer-valued linear congruences.

    ``rows`` is an iterable of (coefficients, kind) with kind "zero" or
    "integer".  The solution set {x in R^width : zero rows vanish, integer
    rows take integer values} is a closed subgroup; returns (continuous
    basis, discrete generators), both exact, with the discrete generators
    taken modulo the continuous span.
    """
    zero_rows, int_rows = [], []
    seen = set()
    for coeffs, kind in rows:
        row = tuple(as_scalar(x) for x in coeffs)
        if len(row) != width:
            raise ValueError("row width mismatch")
        canon = _canonical_row(row)
        if canon is None:
            continue
        key = (kind, canon if kind == "zero" else row)
        if key in seen:
            continue
        seen.add(key)
        if kind == "zero":
            zero_rows.append(canon)
        elif kind == "integer":
            int_rows.append(row)
        else:
            raise ValueError(f"unknown congruence kind {kind!r}")

    N = nullspace([list(r) for r in zero_rows], width=width)
    if not N:
        return [], []
    # forms in the reduced coordinates y, columns indexed by N
    Lp = [[sum((c * n[t] for t, c in enumerate(row)), _ZERO) for n in N] for row in int_rows]
    Lp = [row for row in Lp if any(x != 0 for x in row)]

    def to_x(yvec) -> Vector:
        out = [_ZERO] * width
        for coeff, basis_vec in zip(yvec, N):
            for t in range(width):
                out[t] = out[t] + coeff * basis_vec[t]
        return tuple(out)

    r = len(N)
    continuous = [to_x(y) for y in nullspace(Lp, width=r)]
    if not Lp:
        return continuous, []

    _, pivots = rref(Lp)
    Lpp = [[row[p] for p in pivots] for row in Lp]
    m, s = len(Lpp), len(pivots)

    # integer lattice inside the column space of Lpp
    C = left_nullspace(Lpp)
    if C:
        A, _ = _split_integer_rows([list(c) for c in C])
        lattice = nullspace_integer(A) if A else [
            [1 if i == j else 0 for i in range(m)] for j in range(m)
        ]
    else:
        lattice = [[1 if i == j else 0 for i in range(m)] for j in range(m)]

    discrete = []
    for z in lattice:
        ybar = solve(Lpp, [Scalar(int(zi)) for zi in z])
        assert ybar is not None, "lattice vector escaped the column space"
        y = [_ZERO] * r
        for value, p in zip(ybar, pivots):
            y[p] = value
        discrete.append(to_x(y))
    return continuous, discrete


class MixedSolver:
    """Reusable exact solver for target = P_c x_c (real) + P_d x_d (integer).

    The left-nullspace projection and the Smith factorisation of the integer
    part depend only on the columns, so they are computed once; solve() then
    costs one projection plus back-substitution per target.
    """

    def __init__(self, cont_cols, int_cols):
        cont_cols = [list(col) for col in cont_cols]
        int_cols = [list(col) for col in int_cols]
        if cont_cols:
            dim = len(cont_cols[0])
        elif int_cols:
            dim = len(int_cols[0])
        else:
            dim = 0
        self.dim = dim
        self.n_cont = len(cont_cols)
        self.n_int = len(int_cols)
        self.Pc = [[as_scalar(col[t]) for col in cont_cols] for t in range(dim)]
        self.Pd = [[as_scalar(col[t]) for col in int_cols] for t in range(dim)]
        if cont_cols:
            self.C = left_nullspace(self.Pc)
        else:
            self.C = [tuple(_ONE if i == j else _ZERO for i in range(dim))
                      for j in range(dim)]
        # projected integer system, split into rational and surd parts with
        # row-local denominators cleared (rhs-independent, so the SNF caches)
        self._zero_checks = []
        self._int_row_meta = []
        A = []
        for i, c in enumerate(self.C):
            w = [sum((ci * self.Pd[t][j] for t, ci in enumerate(c)), _ZERO)
                 for j in range(self.n_int)]
            _surd_discriminant(w)
            for part in ("a", "b"):
                coeffs = [getattr(x, part) for x in w]
                if all(q == 0 for q in coeffs):
                    self._zero_checks.append((i, part))
                    continue
                denom = 1
                for q in coeffs:
                    denom = denom * q.denominator // _gcd(denom, q.denominator)
                A.append([int(q * denom) for q in coeffs])
                self._int_row_meta.append((i, part, denom))
        self._snf = smith_normal_form(A) if A else None

    def _project(self, target):
        return [sum((ci * target[t] for t, ci in enumerate(c)), _ZERO)
                for c in self.C]

    def solve(self, target) -> tuple[list[Scalar], list[int]] | None:
        target = [as_scalar(x) for x in target]
        if len(target) != self.dim:
            raise ValueError("target dimension mismatch")
        projected = self._project(target)
        for i, part in self._zero_checks:
            if getattr(projected[i], part) != 0:
                return None
        if self._snf is not None:
            rhs = []
            for i, part, denom in self._int_row_meta:
                value = getattr(projected[i], part) * denom
                if value.denominator != 1:
                    return None
                rhs.append(int(value))
            x_d = integer_solve_factored(self._snf, rhs)
            if x_d is None:
                return None
        else:
            x_d = [0] * self.n_int

        residual = list(target)
        for j, k in enumerate(x_d):
            for t in range(self.dim):
                residual[t] = residual[t] - self.Pd[t][j] * k
        if self.n_cont:
            x_c = solve(self.Pc, residual)
            assert x_c is not None, "residual escaped the continuous span"
        else:
            x_c = []
            assert all(x == 0 for x in residual)
        return x_c, [int(k) for k in x_d]


def solve_mixed(cont_cols, int_cols, target) -> tuple[list[Scalar], list[int]] | None:
    """Write target = sum real_i * cont_i + sum integer_j * int_j, exactly.

    Columns and target are K-vectors of equal length.  Returns (real
    coefficients as field scalars, integer coefficients) or None.
    """
    return MixedSolver(cont_cols, int_cols).solve(target)
