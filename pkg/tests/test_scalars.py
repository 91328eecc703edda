import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cvstab.scalars import (
    DiscriminantMismatch,
    PhaseFraction,
    QuadFieldScalar,
    format_scalar,
    parse_scalar,
    square_free_split,
)


def q(a, b=0, d=0):
    return QuadFieldScalar(Fraction(a), Fraction(b), d)


def test_square_free_split():
    assert square_free_split(1) == (1, 1)
    assert square_free_split(4) == (2, 1)
    assert square_free_split(8) == (2, 2)
    assert square_free_split(12) == (2, 3)
    assert square_free_split(360) == (6, 10)
    assert square_free_split(0) == (1, 0)


def test_degenerate_discriminants():
    assert q(3, 5, 1) == q(8)
    assert q(3, 5, 0) == q(3)
    assert q(3, 0, 7) == q(3)
    # non square-free d is normalised
    assert q(0, 1, 8) == q(0, 2, 2)


def test_sqrt_int():
    assert QuadFieldScalar.sqrt_int(9) == q(3)
    assert QuadFieldScalar.sqrt_int(2) == q(0, 1, 2)
    assert QuadFieldScalar.sqrt_int(18) == q(0, 3, 2)
    assert QuadFieldScalar.sqrt_int(0) == q(0)
    x = QuadFieldScalar.sqrt_int(45)
    assert x * x == q(45)


def test_arithmetic_exact():
    x = q(1, 1, 2)          # 1 + sqrt(2)
    y = q(0, Fraction(1, 2), 2)
    assert x + y == q(1, Fraction(3, 2), 2)
    assert x - x == q(0)
    assert x * x == q(3, 2, 2)
    assert (x * x - 2 * x) == q(1)          # minimal polynomial x^2 - 2x - 1
    inv = 1 / x
    assert inv == q(-1, 1, 2)
    assert x * inv == q(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        q(1) / q(0)


def test_mixed_discriminants():
    with pytest.raises(DiscriminantMismatch):
        q(0, 1, 2) + q(0, 1, 3)
    # rational operand adapts to the other field
    assert q(2) + q(0, 1, 3) == q(2, 1, 3)
    assert q(0, 1, 5) * q(4) == q(0, 4, 5)


def test_exact_ordering():
    # sqrt(2) vs 1.41421356... style traps: compare exactly
    assert q(0, 1, 2) > q(Fraction(141421356, 100000000))
    assert q(0, 1, 2) < q(Fraction(141421357, 100000000))
    assert q(-1, 1, 2).sign() == 1
    assert q(1, -1, 2).sign() == -1
    assert q(2, -1, 2).sign() == 1
    assert q(0).sign() == 0


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.sampled_from([0, 2, 3, 5]),
)
def test_float_agrees_with_exact_sign(a, b, d):
    x = QuadFieldScalar(a, b, d)
    f = float(x)
    if abs(f) > 1e-9:
        assert (f > 0) == (x.sign() > 0)


@given(
    st.fractions(max_denominator=20),
    st.fractions(max_denominator=20),
    st.fractions(max_denominator=20),
    st.fractions(max_denominator=20),
    st.sampled_from([2, 3, 5]),
)
def test_field_axioms(a1, b1, a2, b2, d):
    x = QuadFieldScalar(a1, b1, d)
    y = QuadFieldScalar(a2, b2, d)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + y) == x * y + x * y
    if y != QuadFieldScalar(0) and (y.a * y.a != y.b * y.b * y.d):
        assert (x / y) * y == x


def test_format_parse_round_trip():
    cases = [
        q(3),
        q(Fraction(-1, 2)),
        q(0, 1, 2),
        q(0, Fraction(-1, 2), 2),
        q(1, -3, 5),
        q(Fraction(7, 3), Fraction(2, 9), 6),
    ]
    for x in cases:
        assert parse_scalar(format_scalar(x)) == x


def test_parse_forms():
    assert parse_scalar("3/4") == q(Fraction(3, 4))
    assert parse_scalar("-2") == q(-2)
    assert parse_scalar("sqrt(2)") == q(0, 1, 2)
    assert parse_scalar("-sqrt(3)") == q(0, -1, 3)
    assert parse_scalar("1/2*sqrt(5)") == q(0, Fraction(1, 2), 5)
    assert parse_scalar("1 + 1/2*sqrt(2)") == q(1, Fraction(1, 2), 2)
    assert parse_scalar("0 - 3*sqrt(7)") == q(0, -3, 7)
    with pytest.raises(ValueError):
        parse_scalar("sqrt(2) + 1")


def test_phase_reduction():
    assert PhaseFraction(Fraction(5, 4)) == PhaseFraction(Fraction(1, 4))
    assert PhaseFraction(Fraction(-1, 4)) == PhaseFraction(Fraction(3, 4))
    assert PhaseFraction(3).is_trivial
    assert not PhaseFraction(Fraction(1, 2)).is_trivial
    # surd parts never reduce away
    p = PhaseFraction(q(2, Fraction(1, 2), 2))
    assert p == PhaseFraction(q(0, Fraction(1, 2), 2))
    assert not p.is_trivial


def test_phase_arithmetic():
    half = PhaseFraction(Fraction(1, 2))
    assert (half + half).is_trivial
    assert (2 * half).is_trivial
    assert (-half) == half
    third = PhaseFraction(Fraction(1, 3))
    assert 3 * third == PhaseFraction(0)
    assert float(third) == pytest.approx(1 / 3)


def test_hash_consistency():
    assert hash(q(1, 2, 8)) == hash(q(1, 4, 2))
    s = {q(1), q(1, 0, 5), PhaseFraction(1), PhaseFraction(0)}
    assert len(s) == 2


def test_float_value():
    assert float(q(1, 1, 2)) == pytest.approx(1 + math.sqrt(2))
