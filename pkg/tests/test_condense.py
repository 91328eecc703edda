import random
from fractions import Fraction

import pytest

from cvstab.anyons import FluxCharge, braiding_phase, braiding_value, spin
from cvstab.condense import (
    BNotContained,
    Confined,
    CosetLabel,
    DependentGenerators,
    FiniteAnyonTheory,
    NonBoson,
    NonIntegerRelationMatrix,
    NontrivialMutualBraiding,
    OddCrossBraiding,
    classify,
    composite_condensate,
    condense,
    coset_normal_form,
    deconfined_set,
    double_condensate,
    even_k_condensate,
    flux_charge_condensate,
    flux_condensate,
    quotient,
    validate_subgroup,
)
from cvstab.scalars import PhaseFraction, QuadFieldScalar


def fc(f, c, d=0):
    fv = f if isinstance(f, QuadFieldScalar) else QuadFieldScalar(Fraction(f))
    cv = c if isinstance(c, QuadFieldScalar) else QuadFieldScalar(Fraction(c))
    return FluxCharge(fv, cv)


def sqrt(n):
    return QuadFieldScalar.sqrt_int(n)


# -- validation --------------------------------------------------------------


def test_validate_single_composite():
    B = validate_subgroup([fc(1, 2)])
    assert B.subgroup_class == "Z"
    assert B.lattice_realizable


def test_validate_double():
    B = validate_subgroup([fc(1, 1), FluxCharge(-sqrt(2), sqrt(2))])
    assert B.subgroup_class == "ZxZ"
    assert B.cross_braiding == QuadFieldScalar(0)
    assert B.lattice_realizable


def test_validate_non_boson():
    with pytest.raises(NonBoson):
        validate_subgroup([fc(Fraction(1, 2), 1)])


def test_validate_mutual_braiding():
    # (sqrt2, sqrt2) is a boson (spin 2) but braids irrationally with (1,0)
    with pytest.raises(NontrivialMutualBraiding):
        validate_subgroup([fc(1, 0), FluxCharge(sqrt(2), sqrt(2))])


def test_validate_odd_cross_with_composite():
    # (1,1) composite and (0,1) pure charge: cross = 1, odd
    with pytest.raises(OddCrossBraiding):
        validate_subgroup([fc(1, 1), fc(0, 1)])


def test_validate_odd_cross_pure_pairs_allowed():
    # flux + charge with odd n: plain single-edge patterns exist, no evenness
    B = validate_subgroup(flux_charge_condensate(3))
    assert B.lattice_realizable
    assert B.cross_braiding == QuadFieldScalar(3)
    assert not B.evenness_required


def test_validate_dependent():
    with pytest.raises(DependentGenerators):
        validate_subgroup([fc(1, 1), fc(2, 2)])
    with pytest.raises(DependentGenerators):
        validate_subgroup([fc(0, 0)])


# -- deconfined sets ----------------------------------------------------------


def test_deconfined_flux():
    A = deconfined_set(validate_subgroup(flux_condensate()))
    assert A.discrete_generators == (fc(0, 1),)
    assert A.continuous_direction == fc(1, 0)


def test_deconfined_composite():
    A = deconfined_set(validate_subgroup(composite_condensate(2)))
    assert A.discrete_generators == (fc(0, 1),)
    assert A.continuous_direction == fc(1, -2)
    assert A.is_deconfined(fc(Fraction(1, 2), 2))
    assert not A.is_deconfined(fc(Fraction(1, 3), 0))


def test_deconfined_double_basis():
    A = deconfined_set(validate_subgroup(double_condensate(1, 2)))
    e0, e1 = A.discrete_generators
    assert e0 == fc(Fraction(1, 2), Fraction(1, 2))
    assert e1 == FluxCharge(1 / (2 * sqrt(2)), -1 / (2 * sqrt(2)))
    assert spin(e1) == PhaseFraction(Fraction(-1, 8))


# -- quotients ----------------------------------------------------------------


def test_quotient_flux_rotor():
    out = condense(flux_condensate())
    assert out.group_description == "U(1) x Z"
    assert out.finite_theory.order == 1
    assert out.integer_factor_generator == fc(0, 1)
    assert out.continuous_factor.kind == "U1"
    # rotor pairing: integer index against circle coordinate
    assert braiding_value(out.integer_factor_generator, out.continuous_factor.direction) \
        == QuadFieldScalar(1)
    assert out.gsd_torus is None


@pytest.mark.parametrize("n", [2, 3, 5])
def test_quotient_flux_charge(n):
    out = condense(flux_charge_condensate(n))
    assert out.finite_theory.cyclic_orders == (n, n)
    assert out.continuous_factor is None
    assert out.gsd_torus == n * n
    # charges n and fluxes 2*pi/n generate; all spins are multiples of 1/n
    for s in out.finite_theory.generator_spins:
        assert (n * n * s).is_trivial


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quotient_composite(n):
    out = condense(composite_condensate(n))
    assert out.finite_theory.cyclic_orders == (2 * n,)
    assert out.continuous_factor is not None and out.continuous_factor.kind == "R"
    u_star = out.finite_generators[0]
    assert u_star == fc(Fraction(1, 2 * n), Fraction(1, 2))
    assert spin(u_star) == PhaseFraction(Fraction(1, 4 * n))
    # the continuous factor is exactly decoupled from the discrete generator
    assert braiding_value(u_star, out.continuous_factor.direction) == QuadFieldScalar(0)
    assert out.group_description == f"Z_{2*n} x R"


@pytest.mark.parametrize("n,m", [(1, 2), (2, 3), (1, 1)])
def test_quotient_double(n, m):
    out = condense(double_condensate(n, m))
    assert out.finite_theory.cyclic_orders == (2 * n, 2 * m)
    assert out.gsd_torus == 4 * n * m
    s0, s1 = out.finite_theory.generator_spins
    assert s0 == PhaseFraction(Fraction(1, 4 * n))
    assert s1 == PhaseFraction(Fraction(-1, 4 * m))
    assert out.finite_theory.braiding_matrix[0][1].is_trivial


def test_k2_m4_instance():
    out = condense(double_condensate(1, 2))
    assert out.finite_theory.cyclic_orders == (2, 4)
    assert out.finite_theory.generator_spins[0] == PhaseFraction(Fraction(1, 4))
    assert out.finite_theory.generator_spins[1] == PhaseFraction(Fraction(7, 8))
    assert out.gsd_torus == 8


@pytest.mark.parametrize(
    "params,expected",
    [((1, 1, 2), (2, 6)), ((1, 2, 2), (2, 4)), ((2, 2, 3), (2, 10))],
)
def test_quotient_even_k(params, expected):
    out = condense(even_k_condensate(*params))
    assert out.finite_theory.cyclic_orders == expected
    n1, n2, npr = params
    assert out.gsd_torus == 4 * (npr * npr - n1 * n2)


def test_even_k_relation_matrix():
    B = validate_subgroup(even_k_condensate(1, 1, 2))
    assert B.relation_matrix() == [[2, 4], [4, 2]]


def test_trivial_continuous_condensate():
    out = condense([], [fc(1, 0)])
    assert out.group_description == "trivial"
    assert any("trivial-condensate" in w for w in out.warnings)
    assert classify(out).gsd_torus == 1


def test_quotient_rejects_bad_subgroup():
    # bypass validation: a "subgroup" with non-integer self braiding
    from cvstab.condense import BosonSubgroup, DeconfinedSet

    bad = BosonSubgroup((fc(Fraction(1, 2), Fraction(1, 2)),), "Z", None, False, True)
    with pytest.raises(NonIntegerRelationMatrix):
        quotient(deconfined_set(bad), bad)


# -- coset normal form ---------------------------------------------------------


def test_coset_normal_form_rank1():
    out = condense(composite_condensate(1))
    lab = coset_normal_form(fc(3, -1), out)
    assert lab.discrete == (0,)
    assert lab.continuous == QuadFieldScalar(2)
    assert coset_normal_form(fc(0, 0), out) == CosetLabel((0,), QuadFieldScalar(0))
    assert coset_normal_form(fc(1, 1), out) == CosetLabel((0,), QuadFieldScalar(0))


def test_coset_normal_form_confined():
    out = condense(composite_condensate(1))
    with pytest.raises(Confined):
        coset_normal_form(fc(Fraction(1, 3), 0), out)


def test_coset_normal_form_rank2():
    out = condense(double_condensate(1, 2))
    e0, e1 = out.deconfined.discrete_generators
    assert coset_normal_form(e0, out).discrete == (1, 0)
    assert coset_normal_form(e0 + e1, out).discrete == (1, 1)
    for g in out.subgroup.generators:
        assert coset_normal_form(g, out).discrete == (0, 0)
    assert coset_normal_form(5 * e1, out).discrete == (0, 1)


def test_coset_normal_form_rotor():
    out = condense(flux_condensate())
    lab = coset_normal_form(fc(Fraction(7, 3), 2), out)
    assert lab.winding == 2
    assert lab.continuous == QuadFieldScalar(Fraction(1, 3))


def test_coset_idempotent_random():
    rng = random.Random(11)
    out = condense(double_condensate(2, 3))
    e0, e1 = out.deconfined.discrete_generators
    g0, g1 = out.subgroup.generators
    for _ in range(50):
        x = rng.randrange(-9, 10) * e0 + rng.randrange(-9, 10) * e1
        lab = coset_normal_form(x, out)
        rep = out.representative(lab)
        assert coset_normal_form(rep, out) == lab
        assert out.subgroup.contains(x - rep)
        shifted = x + rng.randrange(-3, 4) * g0 + rng.randrange(-3, 4) * g1
        assert coset_normal_form(shifted, out) == lab


def test_descended_braiding_well_defined():
    out = condense(double_condensate(1, 2))
    e0, e1 = out.deconfined.discrete_generators
    for b in out.subgroup.generators:
        assert braiding_phase(e0 + b, e1) == braiding_phase(e0, e1)
        assert braiding_phase(e1 + b, e1) == braiding_phase(e1, e1)


# -- classification -------------------------------------------------------------


def test_classify_tags():
    assert classify(condense(flux_condensate())).tag.startswith("homological-rotor")
    c = classify(condense(composite_condensate(2)))
    assert c.tag == "U(1)_4"
    assert c.encoded_factors == ("qudit(4)", "CV")
    c = classify(condense(flux_charge_condensate(3)))
    assert c.tag == "Z_3 gauge theory (toric-GKP)"
    assert c.gsd_torus == 9
    c = classify(condense(double_condensate(1, 2)))
    assert c.tag == "U(1)_2 x U(1)_-4"
    assert c.gsd_torus == 8
    c = classify(condense(even_k_condensate(1, 1, 2)))
    assert c.tag == "even-K U(1)xU(1) Chern-Simons"
    assert c.gsd_torus == 12


def test_finite_theory_validation():
    with pytest.raises(ValueError):
        FiniteAnyonTheory((2,), (PhaseFraction(Fraction(1, 3)),),
                          ((PhaseFraction(Fraction(2, 3)),),))
    t = FiniteAnyonTheory((2,), (PhaseFraction(Fraction(1, 4)),),
                          ((PhaseFraction(Fraction(1, 2)),),))
    assert t.order == 2
