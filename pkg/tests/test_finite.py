from fractions import Fraction

import pytest

from cvstab.condense import (
    FiniteAnyonTheory,
    condense,
    double_condensate,
    flux_charge_condensate,
)
from cvstab.finite import (
    AnyonLabel,
    NondegenerateCheckFailed,
    all_subgroups,
    anyon_braiding,
    anyon_spin,
    cyclotomic_polynomial,
    enumerate_anyons,
    fuse,
    gauss_sum_central_charge,
    is_lagrangian,
    lagrangian_subgroups,
    stack,
)
from cvstab.scalars import PhaseFraction


def theory(orders, spins, braid):
    ph = lambda x: PhaseFraction(Fraction(x))
    return FiniteAnyonTheory(
        tuple(orders),
        tuple(ph(s) for s in spins),
        tuple(tuple(ph(b) for b in row) for row in braid),
    )


def semion():
    return theory([2], ["1/4"], [["1/2"]])


def toric(n=2):
    # Z_n x Z_n: charge and flux generators, cross braiding 1/n
    return theory([n, n], [0, 0], [[0, Fraction(1, n)], [Fraction(1, n), 0]])


def u1_4_pair():
    # Z_4 x Z_4 with spins k^2/8 and -k^2/8
    return theory([4, 4], [Fraction(1, 8), Fraction(-1, 8)],
                  [[Fraction(1, 4), 0], [0, Fraction(-1, 4)]])


def test_enumerate_semion():
    out = enumerate_anyons(semion())
    assert out == [
        (AnyonLabel((0,)), PhaseFraction(0)),
        (AnyonLabel((1,)), PhaseFraction(Fraction(1, 4))),
    ]


def test_enumerate_k2_m4():
    T = condense(double_condensate(1, 2)).finite_theory
    out = enumerate_anyons(T)
    assert len(out) == 8
    spins = {a.exponents: s for a, s in out}
    assert spins[(1, 0)] == PhaseFraction(Fraction(1, 4))
    assert spins[(0, 1)] == PhaseFraction(Fraction(7, 8))
    assert spins[(0, 2)] == PhaseFraction(Fraction(1, 2))
    assert spins[(0, 0)].is_trivial


def test_enumerate_trivial():
    T = FiniteAnyonTheory.trivial()
    assert enumerate_anyons(T) == [(AnyonLabel(()), PhaseFraction(0))]


def test_fusion_and_spin_extension():
    T = toric(3)
    a = AnyonLabel((1, 2))
    b = AnyonLabel((2, 2))
    assert fuse(T, a, b) == AnyonLabel((0, 1))
    # quadratic refinement: s(a+b) = s(a) + s(b) + braiding(a,b)
    assert anyon_spin(T, fuse(T, a, b)) == \
        anyon_spin(T, a) + anyon_spin(T, b) + anyon_braiding(T, a, b)


def test_subgroup_enumeration_counts():
    # Z_2 x Z_2 has 5 subgroups: 1, three Z_2, full
    assert len(all_subgroups(toric(2))) == 5


def test_lagrangian_toric():
    for n in (2, 3, 4):
        subs = lagrangian_subgroups(toric(n))
        assert len(subs) >= 1
        charges = frozenset(AnyonLabel((k, 0)) for k in range(n))
        assert charges in subs
        for L in subs:
            assert is_lagrangian(toric(n), L)


def test_lagrangian_k2_m4_empty():
    T = condense(double_condensate(1, 2)).finite_theory
    assert lagrangian_subgroups(T) == []


def test_lagrangian_u1_4_pair_diagonal():
    subs = lagrangian_subgroups(u1_4_pair())
    diagonal = frozenset(AnyonLabel((k, k)) for k in range(4))
    assert diagonal in subs


def test_cyclotomic():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_gauss_sum_examples():
    assert gauss_sum_central_charge(semion()) == 1
    assert gauss_sum_central_charge(toric(2)) == 0
    T = condense(double_condensate(1, 2)).finite_theory
    assert gauss_sum_central_charge(T) == 0


def test_gauss_sum_degenerate():
    fermion = theory([2], ["1/2"], [[0]])
    assert gauss_sum_central_charge(fermion) is None


def test_gauss_sum_inconsistent():
    transparent_boson = theory([2], [0], [[0]])
    with pytest.raises(NondegenerateCheckFailed):
        gauss_sum_central_charge(transparent_boson)


def test_gauss_sum_condensed_outputs_unit_modulus():
    for gens in (flux_charge_condensate(3), double_condensate(2, 3)):
        T = condense(gens).finite_theory
        assert gauss_sum_central_charge(T) == 0


def test_stack_additivity():
    cases = [semion(), toric(2), condense(double_condensate(1, 2)).finite_theory]
    for T1 in cases:
        for T2 in cases:
            c1 = gauss_sum_central_charge(T1)
            c2 = gauss_sum_central_charge(T2)
            c12 = gauss_sum_central_charge(stack(T1, T2))
            assert c12 == (c1 + c2) % 8
