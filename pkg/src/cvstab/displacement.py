"""Generalized Pauli (displacement) operators on the torus modes.

An operator is a product over edges of X_e^(2*pi*a_e) Z_e^(b_e) recorded by
its exponent pair (a_e, b_e): a_e is the X exponent in units of 2*pi, b_e the
Z exponent in radian units.  Exponents are exact field scalars.

Two operators commute up to the phase exp(2*pi*i f(u, w)) with

    f(u, w) = sum_e  b_e(u) a_e(w) - a_e(u) b_e(w),

so a single-edge pair Z^t, X^(2*pi*s) gives f = t*s.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .geometry import Edge, Torus
from .scalars import PhaseFraction, QuadFieldScalar


def _coerce(value) -> QuadFieldScalar:
    if isinstance(value, QuadFieldScalar):
        return value
    if isinstance(value, Rational):
        return QuadFieldScalar(Fraction(value))
    raise TypeError(f"cannot use {value!r} as an exponent")


_ZERO = QuadFieldScalar(0)


class DisplacementVector:
    """Sparse edge -> (x_hat, z) exponent map over a fixed torus."""

    __slots__ = ("geometry", "data")

    def __init__(self, geometry: Torus, data=None):
        self.geometry = geometry
        self.data: dict[Edge, tuple[QuadFieldScalar, QuadFieldScalar]] = {}
        if data:
            for edge, (a, b) in data.items():
                self._accumulate(edge, _coerce(a), _coerce(b))

    def _accumulate(self, edge: Edge, a: QuadFieldScalar, b: QuadFieldScalar):
        old_a, old_b = self.data.get(edge, (_ZERO, _ZERO))
        new_a, new_b = old_a + a, old_b + b
        if new_a == 0 and new_b == 0:
            self.data.pop(edge, None)
        else:
            self.data[edge] = (new_a, new_b)

    @classmethod
    def x_op(cls, geometry: Torus, edge: Edge, amount) -> "DisplacementVector":
        """X_edge^(2*pi*amount)."""
        return cls(geometry, {edge: (amount, 0)})

    @classmethod
    def z_op(cls, geometry: Torus, edge: Edge, amount) -> "DisplacementVector":
        """Z_edge^amount."""
        return cls(geometry, {edge: (0, amount)})

    def x_at(self, edge: Edge) -> QuadFieldScalar:
        return self.data.get(edge, (_ZERO, _ZERO))[0]

    def z_at(self, edge: Edge) -> QuadFieldScalar:
        return self.data.get(edge, (_ZERO, _ZERO))[1]

    @property
    def support(self) -> set[Edge]:
        return set(self.data)

    def is_identity(self) -> bool:
        return not self.data

    def __add__(self, other: "DisplacementVector") -> "DisplacementVector":
        if other.geometry is not self.geometry and other.geometry.L != self.geometry.L:
            raise ValueError("displacement vectors live on different tori")
        out = DisplacementVector(self.geometry)
        out.data = dict(self.data)
        for edge, (a, b) in other.data.items():
            out._accumulate(edge, a, b)
        return out

    def __neg__(self) -> "DisplacementVector":
        out = DisplacementVector(self.geometry)
        out.data = {e: (-a, -b) for e, (a, b) in self.data.items()}
        return out

    def __sub__(self, other: "DisplacementVector") -> "DisplacementVector":
        return self + (-other)

    def scale(self, factor) -> "DisplacementVector":
        factor = _coerce(factor)
        out = DisplacementVector(self.geometry)
        if factor != 0:
            out.data = {e: (a * factor, b * factor) for e, (a, b) in self.data.items()}
        return out

    def translate(self, di: int, dj: int) -> "DisplacementVector":
        g = self.geometry
        out = DisplacementVector(g)
        out.data = {g.translate_edge(e, di, dj): ab for e, ab in self.data.items()}
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, DisplacementVector):
            return NotImplemented
        return self.geometry.L == other.geometry.L and self.data == other.data

    def __repr__(self):
        parts = [
            f"{e}:(x={a}, z={b})"
            for e, (a, b) in sorted(self.data.items(), key=lambda kv: kv[0])
        ]
        return "Displacement{" + ", ".join(parts) + "}"


def symplectic_value(u: DisplacementVector, w: DisplacementVector) -> QuadFieldScalar:
    """Exact f(u, w); the commutation phase is exp(2*pi*i f)."""
    total = _ZERO
    small, large = (u, w) if len(u.data) <= len(w.data) else (w, u)
    sign = 1 if small is u else -1
    for edge, (a_s, b_s) in small.data.items():
        pair = large.data.get(edge)
        if pair is None:
            continue
        a_l, b_l = pair
        total = total + (b_s * a_l - a_s * b_l) * sign
    return total


def symplectic_phase(u: DisplacementVector, w: DisplacementVector) -> PhaseFraction:
    return PhaseFraction(symplectic_value(u, w))
