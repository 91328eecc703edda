"""Exact scalars in a real quadratic field and phases stored as fractions of a turn.

All topological data in this package (fluxes in units of 2*pi, charges, spins,
braiding phases) lives in a single field Q(sqrt(d)) per computation context.
``QuadFieldScalar`` implements that field exactly on top of ``fractions.Fraction``;
``PhaseFraction`` is a scalar reduced modulo 1, representing the phase
exp(2*pi*i*value) without ever touching floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering


class DiscriminantMismatch(ValueError):
    """Two scalars with different (nonzero) surd parts cannot be combined."""


def square_free_split(n: int) -> tuple[int, int]:
    """Return (s, r) with n = s*s*r and r square-free. Requires n >= 0."""
    if n < 0:
        raise ValueError("square_free_split needs a non-negative integer")
    if n in (0, 1):
        return 1, n
    s, r = 1, 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            s *= p ** (k // 2)
            if k % 2:
                r *= p
        p += 1 if p == 2 else 2
    r *= m
    return s, r


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@total_ordering
class QuadFieldScalar:
    """Exact element a + b*sqrt(d) with a, b rational and d square-free.

    d in {0, 1} degenerates to the rationals (the surd part is folded away),
    so plain rational inputs never carry a spurious discriminant. Arithmetic
    between two scalars with different nonzero discriminants raises
    ``DiscriminantMismatch``; a scalar whose surd part is zero adapts to the
    other operand's field.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, rational, surd=0, d: int = 0):
        a = _as_fraction(rational)
        b = _as_fraction(surd)
        if not isinstance(d, int) or d < 0:
            raise ValueError("discriminant must be a non-negative integer")
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        elif d == 0:
            b = Fraction(0)
        elif b != 0:
            s, r = square_free_split(d)
            if s != 1:
                b, d = b * s, r
                if d == 1:
                    a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        self.a = a
        self.b = b
        self.d = d

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, x) -> "QuadFieldScalar":
        return cls(_as_fraction(x))

    @classmethod
    def sqrt_int(cls, n: int) -> "QuadFieldScalar":
        """Exact square root of a non-negative integer."""
        s, r = square_free_split(n)
        if r in (0, 1):
            return cls(Fraction(s * r if r else 0))
        return cls(0, Fraction(s), r)

    # -- field helpers -----------------------------------------------------

    def _coerce(self, other) -> "QuadFieldScalar":
        if isinstance(other, QuadFieldScalar):
            return other
        return QuadFieldScalar(_as_fraction(other))

    def _join_d(self, other: "QuadFieldScalar") -> int:
        if self.d == other.d:
            return self.d
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        raise DiscriminantMismatch(f"sqrt({self.d}) vs sqrt({other.d})")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def conjugate(self) -> "QuadFieldScalar":
        return QuadFieldScalar(self.a, -self.b, self.d)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        d = self._join_d(o)
        return QuadFieldScalar(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldScalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._join_d(o)
        a = self.a * o.a + self.b * o.b * d
        b = self.a * o.b + self.b * o.a
        return QuadFieldScalar(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.a == 0 and o.b == 0:
            raise ZeroDivisionError("division by zero scalar")
        d = self._join_d(o)
        norm = o.a * o.a - o.b * o.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        num = self * o.conjugate()
        return QuadFieldScalar(num.a / norm, num.b / norm, d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    # -- comparison --------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real value a + b*sqrt(d)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return self.a == o.a
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __lt__(self, other):
        o = self._coerce(other)
        try:
            diff = self - o
        except DiscriminantMismatch:
            # distinct surds: fall back to comparing (self-o) exactly is not
            # possible inside one field; compare via floats with a guard
            return float(self) < float(o)
        return diff.sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- conversion / formatting -------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QuadFieldScalar({self.a!r}, {self.b!r}, d={self.d})"


ZERO = QuadFieldScalar(0)
ONE = QuadFieldScalar(1)


def format_scalar(x: QuadFieldScalar) -> str:
    """Canonical textual form, round-tripped exactly by :func:`parse_scalar`.

    Examples: ``"3"``, ``"-1/2"``, ``"0 + 1/2*sqrt(2)"``, ``"1 - 3*sqrt(5)"``.
    """
    if x.b == 0:
        return str(x.a)
    sign = "-" if x.b < 0 else "+"
    mag = -x.b if x.b < 0 else x.b
    return f"{x.a} {sign} {mag}*sqrt({x.d})"


_SCALAR_RE = re.compile(
    r"""^\s*
    (?P<rat>[+-]?\d+(?:/\d+)?)
    (?:\s*(?P<sign>[+-])\s*
       (?P<coef>\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)
    )?\s*$""",
    re.VERBOSE,
)

_SURD_ONLY_RE = re.compile(
    r"""^\s*(?P<sign>[+-])?\s*
    (?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?
    sqrt\(\s*(?P<d>\d+)\s*\)\s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> QuadFieldScalar:
    """Parse the textual scalar form ``p/q [+-] r/s*sqrt(d)``."""
    m = _SURD_ONLY_RE.match(text)
    if m:
        coef = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        return QuadFieldScalar(0, coef, int(m.group("d")))
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse scalar: {text!r}")
    a = Fraction(m.group("rat"))
    if m.group("coef") is None:
        return QuadFieldScalar(a)
    b = Fraction(m.group("coef"))
    if m.group("sign") == "-":
        b = -b
    return QuadFieldScalar(a, b, int(m.group("d")))


class PhaseFraction:
    """A phase exp(2*pi*i*value) tracked exactly as a scalar modulo 1.

    The rational part of the underlying scalar is reduced into [0, 1); the
    surd part is kept as-is, which is canonical because two values of
    a + b*sqrt(d) differ by an integer iff their surd parts agree and their
    rational parts differ by an integer. ``is_trivial`` is therefore an exact
    predicate (value == 0 after reduction).
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, PhaseFraction):
            value = value.value
        if not isinstance(value, QuadFieldScalar):
            value = QuadFieldScalar(_as_fraction(value))
        a = value.a - math.floor(value.a)
        self.value = QuadFieldScalar(a, value.b, value.d)

    @property
    def is_trivial(self) -> bool:
        return self.value.a == 0 and self.value.b == 0

    def __add__(self, other):
        o = other if isinstance(other, PhaseFraction) else PhaseFraction(other)
        return PhaseFraction(self.value + o.value)

    def __neg__(self):
        return PhaseFraction(-self.value)

    def __sub__(self, other):
        o = other if isinstance(other, PhaseFraction) else PhaseFraction(other)
        return PhaseFraction(self.value - o.value)

    def __mul__(self, k):
        if not isinstance(k, int):
            raise TypeError("phases scale by integers only")
        return PhaseFraction(self.value * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadFieldScalar)):
            other = PhaseFraction(
                other if isinstance(other, QuadFieldScalar) else QuadFieldScalar(_as_fraction(other))
            )
        if not isinstance(other, PhaseFraction):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("PhaseFraction", self.value))

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return format_scalar(self.value)

    def __repr__(self):
        return f"PhaseFraction({format_scalar(self.value)!r})"


def phase_reduce(x) -> PhaseFraction:
    """Reduce a scalar modulo 1 to its canonical phase fraction."""
    return PhaseFraction(x)
