"""Diagnostics on finite abelian anyon theories.

Anyon enumeration with quadratically-extended spins, exhaustive Lagrangian
subgroup search (the gapped-boundary witness), and the chiral central charge
modulo 8 via the Gauss sum (1/sqrt|A|) * sum_a exp(2*pi*i*spin(a)).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from cvstab.condense import FiniteAnyonTheory
from cvstab.scalars import PhaseFraction

MAX_ENUMERATION_ORDER = 64


class NondegenerateCheckFailed(Exception):
    """Gauss-sum modulus is neither ~0 nor ~sqrt|A|: inconsistent anyon data."""


@dataclass(frozen=True)
class AnyonLabel:
    exponents: tuple[int, ...]

    def __str__(self):
        return "(" + ", ".join(str(k) for k in self.exponents) + ")"


def reduce_label(T: FiniteAnyonTheory, exponents) -> AnyonLabel:
    return AnyonLabel(tuple(k % d for k, d in zip(exponents, T.cyclic_orders)))


def fuse(T: FiniteAnyonTheory, a: AnyonLabel, b: AnyonLabel) -> AnyonLabel:
    return reduce_label(T, (x + y for x, y in zip(a.exponents, b.exponents)))


def anyon_spin(T: FiniteAnyonTheory, a: AnyonLabel) -> PhaseFraction:
    """Quadratic extension: s(sum k_i g_i) = sum k_i^2 s_i + sum_{i<j} k_i k_j b_ij."""
    k = a.exponents
    total = PhaseFraction(0)
    for i, s in enumerate(T.generator_spins):
        total = total + (k[i] * k[i]) * s
    for i in range(len(k)):
        for j in range(i + 1, len(k)):
            total = total + (k[i] * k[j]) * T.braiding_matrix[i][j]
    return total


def anyon_braiding(T: FiniteAnyonTheory, a: AnyonLabel, b: AnyonLabel) -> PhaseFraction:
    total = PhaseFraction(0)
    for i, ki in enumerate(a.exponents):
        for j, kj in enumerate(b.exponents):
            total = total + (ki * kj) * T.braiding_matrix[i][j]
    return total


def enumerate_anyons(T: FiniteAnyonTheory) -> list[tuple[AnyonLabel, PhaseFraction]]:
    """All prod(d_i) labels with their spins."""
    labels = itertools.product(*(range(d) for d in T.cyclic_orders))
    return [(AnyonLabel(k), anyon_spin(T, AnyonLabel(k))) for k in labels]


def _closure(T: FiniteAnyonTheory, seed: frozenset[AnyonLabel]) -> frozenset[AnyonLabel]:
    out = set(seed)
    frontier = list(seed)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            z = fuse(T, x, y)
            if z not in out:
                out.add(z)
                frontier.append(z)
    return frozenset(out)


def all_subgroups(T: FiniteAnyonTheory) -> list[frozenset[AnyonLabel]]:
    """Every fusion subgroup, by closing generator sets breadth-first."""
    if T.order > MAX_ENUMERATION_ORDER:
        raise ValueError(f"group order {T.order} exceeds the enumeration bound")
    elements = [a for a, _ in enumerate_anyons(T)]
    identity = AnyonLabel(tuple(0 for _ in T.cyclic_orders))
    found = {frozenset([identity])}
    queue = [frozenset([identity])]
    while queue:
        S = queue.pop()
        for g in elements:
            if g not in S:
                bigger = _closure(T, S | {g})
                if bigger not in found:
                    found.add(bigger)
                    queue.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(a.exponents for a in s)))


def is_lagrangian(T: FiniteAnyonTheory, L: frozenset[AnyonLabel]) -> bool:
    """Independent verifier of the three defining conditions."""
    if len(L) * len(L) != T.order:
        return False
    for a in L:
        if not anyon_spin(T, a).is_trivial:
            return False
    for a in L:
        for b in L:
            if not anyon_braiding(T, a, b).is_trivial:
                return False
    return True


def lagrangian_subgroups(T: FiniteAnyonTheory) -> list[frozenset[AnyonLabel]]:
    """All subgroups L with |L|^2 = |A|, trivial spins, trivial mutual braiding."""
    root = math.isqrt(T.order)
    if root * root != T.order:
        return []
    return [L for L in all_subgroups(T) if len(L) == root and is_lagrangian(T, L)]


def stack(T1: FiniteAnyonTheory, T2: FiniteAnyonTheory) -> FiniteAnyonTheory:
    """Direct product theory: independent layers, no cross braiding."""
    k1, k2 = len(T1.cyclic_orders), len(T2.cyclic_orders)
    zero = PhaseFraction(0)
    braid = []
    for i in range(k1 + k2):
        row = []
        for j in range(k1 + k2):
            if i < k1 and j < k1:
                row.append(T1.braiding_matrix[i][j])
            elif i >= k1 and j >= k1:
                row.append(T2.braiding_matrix[i - k1][j - k1])
            else:
                row.append(zero)
        braid.append(tuple(row))
    return FiniteAnyonTheory(
        T1.cyclic_orders + T2.cyclic_orders,
        T1.generator_spins + T2.generator_spins,
        tuple(braid),
    )


# -- Gauss sum ----------------------------------------------------------------


def _poly_mul_mod_xn(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % n] += ai * bj
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; exact division over Z
    num = list(num)
    q = [0] * (max(len(num) - len(den) + 1, 0))
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1]
        if coef:
            q[i] = coef
            for j, dj in enumerate(den):
                num[i + j] -= coef * dj
    while num and num[-1] == 0:
        num.pop()
    return q, num


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n, via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not r
            poly = q
    return poly


def _exact_modulus_squared(counts: list[int], n: int) -> int | None:
    """|sum_k counts[k] * zeta_n^k|^2 if it is an exact integer, else None."""
    conj = [counts[(-k) % n] for k in range(n)]
    prod = _poly_mul_mod_xn(counts, conj, n)
    _, rem = _poly_divmod(prod, cyclotomic_polynomial(n))
    rem = rem + [0] * (n - len(rem))
    if any(rem[1:]):
        return None
    return rem[0] if rem else 0


def gauss_sum_central_charge(T: FiniteAnyonTheory, tol: float = 1e-9) -> int | None:
    """Chiral central charge mod 8, or None when the braiding is degenerate.

    The modulus condition |sum theta(a)| = sqrt|A| is checked exactly in the
    cyclotomic ring when every spin is rational with denominator lcm <= 24
    (true for all condensation outputs), and in floats otherwise. The phase,
    an exact multiple of 2*pi/8, is safely rounded from a float.
    """
    anyons = enumerate_anyons(T)
    spins = [s.value for _, s in anyons]
    exact_mod2 = None
    if all(v.is_rational for v in spins):
        denom = 1
        for v in spins:
            denom = denom * v.a.denominator // math.gcd(denom, v.a.denominator)
        if denom <= 24:
            counts = [0] * denom
            for v in spins:
                counts[int(v.a * denom) % denom] += 1
            exact_mod2 = _exact_modulus_squared(counts, denom)
    total = sum(cmath.exp(2j * cmath.pi * float(s)) for _, s in anyons)
    mod2 = abs(total) ** 2
    if exact_mod2 is not None:
        if exact_mod2 == 0:
            return None
        if exact_mod2 != T.order:
            raise NondegenerateCheckFailed(
                f"|gauss sum|^2 = {exact_mod2}, expected {T.order} or 0"
            )
    else:
        if mod2 < tol:
            return None
        if abs(mod2 - T.order) > tol * T.order:
            raise NondegenerateCheckFailed(
                f"|gauss sum|^2 = {mod2}, expected {T.order} or 0"
            )
    c = cmath.phase(total) / (2 * math.pi) * 8
    rounded = round(c)
    if abs(c - rounded) > 1e-6:
        raise NondegenerateCheckFailed(f"phase {c} is not a multiple of 2*pi/8")
    return rounded % 8


def check_modulus_unit(T: FiniteAnyonTheory, tol: float = 1e-9) -> bool:
    """True iff |gauss sum| / sqrt|A| is within tol of 1."""
    anyons = enumerate_anyons(T)
    total = sum(cmath.exp(2j * cmath.pi * float(s)) for _, s in anyons)
    return abs(abs(total) / math.sqrt(T.order) - 1.0) <= tol
