"""Stabilizer models on the torus: parent code, condensed codes, checks.

A stabilizer family is a translation-covariant set of operators built from a
local template: vertex stars (X type), plaquette loops (Z type), dressed
vertex loops, and the edge hopping terms themselves.  Each family carries a
parameter domain (continuous directions plus a discrete lattice of values);
``centralizer`` restricts the free parent domains to whatever commutes with
the condensate hoppings.  On top of that sit exact commutation verification,
logical string extraction, syndrome maps and stabilizer-group membership.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterable, Mapping

from .anyons import FluxCharge, braiding_value, scale
from .condense import BosonSubgroup, CondensationOutcome, condense, validate_subgroup
from .displacement import DisplacementVector, symplectic_phase, symplectic_value
from .geometry import Edge, HomologyBasis, Torus
from .hopping import HoppingPattern, synthesize_hopping
from .linalg import MixedSolver, congruence_solve
from .linalg import solve as field_solve
from .scalars import ONE, ZERO, PhaseFraction, QuadFieldScalar, format_scalar
from .snf import integer_solve


class NonMaximal(Exception):
    """The local commutant contains operators outside the stabilizer group."""


def _unit_params(dim: int, index: int) -> tuple[QuadFieldScalar, ...]:
    return tuple(ONE if t == index else ZERO for t in range(dim))


@dataclass(frozen=True)
class ParamDomain:
    """Allowed parameter values of a family: continuous span + discrete lattice."""

    continuous: tuple[tuple[QuadFieldScalar, ...], ...]
    discrete: tuple[tuple[QuadFieldScalar, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return not self.continuous and not self.discrete


def _free_domain(dim: int) -> ParamDomain:
    return ParamDomain(tuple(_unit_params(dim, t) for t in range(dim)), ())


@dataclass(frozen=True)
class StabilizerFamily:
    """Anchored operator template with a restricted parameter domain."""

    name: str
    anchor_kind: str  # "vertex" | "plaquette" | "edge"
    dim: int
    anchors: tuple
    builder: Callable
    domain: ParamDomain

    def operator(self, anchor, params) -> DisplacementVector:
        return self.builder(anchor, tuple(params))

    def basis_operator(self, anchor, index: int) -> DisplacementVector:
        return self.builder(anchor, _unit_params(self.dim, index))

    def instances(self):
        """Labelled generators: one per anchor per domain generator."""
        for anchor in self.anchors:
            for t, gen in enumerate(self.domain.discrete):
                yield (f"{self.name}[{anchor}]#d{t}", self.builder(anchor, gen),
                       "discrete")
            for t, direction in enumerate(self.domain.continuous):
                yield (f"{self.name}[{anchor}]#c{t}",
                       self.builder(anchor, direction), "continuous")


def vertex_star_family(geom: Torus) -> StabilizerFamily:
    def build(v, params):
        op = DisplacementVector(geom)
        for e, sign in geom.star(v):
            op = op + DisplacementVector.x_op(geom, e, params[0] * sign)
        return op

    return StabilizerFamily("vertex-star", "vertex", 1, tuple(geom.vertices),
                            build, _free_domain(1))


def plaquette_flux_family(geom: Torus) -> StabilizerFamily:
    def build(p, params):
        op = DisplacementVector(geom)
        for e, sign in geom.boundary(p):
            op = op + DisplacementVector.z_op(geom, e, params[0] * sign)
        return op

    return StabilizerFamily("plaquette-flux", "plaquette", 1,
                            tuple(geom.plaquettes), build, _free_domain(1))


def hopping_family(geom: Torus, pattern: HoppingPattern,
                   subgroup: BosonSubgroup) -> StabilizerFamily:
    """Edge terms C_e(u) for u in the condensate, one parameter per generator."""
    gens = tuple(subgroup.generators)
    dirs = tuple(subgroup.continuous_directions)
    dim = len(gens) + len(dirs)

    def build(e, params):
        u = FluxCharge(ZERO, ZERO)
        for g, t in zip(gens + dirs, params):
            u = u + scale(g, t)
        return pattern.operator(geom, e, u)

    domain = ParamDomain(
        tuple(_unit_params(dim, len(gens) + t) for t in range(len(dirs))),
        tuple(_unit_params(dim, t) for t in range(len(gens))),
    )
    return StabilizerFamily("edge-hopping", "edge", dim, tuple(geom.edges),
                            build, domain)


def vertex_loop_family(geom: Torus, pattern: HoppingPattern) -> StabilizerFamily:
    """Two-parameter dressed vertex terms: the coboundary of one vertex.

    The combination C_h(i,j) + C_v(i,j) - C_h(i-1,j) - C_v(i,j-1) at parameter
    (p0, p1) equals the bare star at X-power p0 plus p1 times the plaquette
    loop northwest of the vertex; for dressed patterns these combinations are
    the only vertex-local stabilizers.
    """

    def build(v, params):
        u = FluxCharge(params[0], params[1])
        op = pattern.operator(geom, geom.edge("h", v.i, v.j), u)
        op = op + pattern.operator(geom, geom.edge("v", v.i, v.j), u)
        op = op + pattern.operator(geom, geom.edge("h", v.i - 1, v.j), -u)
        op = op + pattern.operator(geom, geom.edge("v", v.i, v.j - 1), -u)
        return op

    return StabilizerFamily("vertex-loop", "vertex", 2, tuple(geom.vertices),
                            build, _free_domain(2))


def centralizer(families: Iterable[StabilizerFamily],
                hoppings: Iterable[tuple[DisplacementVector, str]]
                ) -> list[StabilizerFamily]:
    """Restrict each family's domain to parameters commuting with the hoppings.

    ``hoppings`` carries (operator, kind): against a "discrete" hopping the
    symplectic form must be an integer, against a "continuous" one exactly
    zero (a full real line of powers must commute).
    """
    hoppings = list(hoppings)
    out = []
    for fam in families:
        rows = []
        for anchor in fam.anchors:
            basis = [fam.basis_operator(anchor, t) for t in range(fam.dim)]
            for op, kind in hoppings:
                coeffs = [symplectic_value(b, op) for b in basis]
                rows.append((coeffs, "zero" if kind == "continuous" else "integer"))
        cont, disc = congruence_solve(rows, fam.dim)
        domain = ParamDomain(tuple(tuple(v) for v in cont),
                             tuple(tuple(v) for v in disc))
        out.append(replace(fam, domain=domain))
    return out


@dataclass
class LatticeModel:
    """A torus, its stabilizer families, and (if condensed) the hopping data."""

    geometry: Torus
    families: tuple[StabilizerFamily, ...]
    pattern: HoppingPattern | None = None
    subgroup: BosonSubgroup | None = None
    outcome: CondensationOutcome | None = None

    def __post_init__(self):
        self._solver = None
        self._labels = None
        self._columns = None

    def sampled_generators(self) -> list[tuple[str, DisplacementVector, str]]:
        items = []
        for fam in self.families:
            items.extend(fam.instances())
        return items

    def flatten(self, op: DisplacementVector) -> list[QuadFieldScalar]:
        vec = []
        for e in self.geometry.edges:
            vec.append(op.x_at(e))
            vec.append(op.z_at(e))
        return vec

    def membership_columns(self):
        if self._columns is None:
            cont_cols, int_cols = [], []
            cont_labels, int_labels = [], []
            for label, op, kind in self.sampled_generators():
                col = self.flatten(op)
                if kind == "continuous":
                    cont_cols.append(col)
                    cont_labels.append(label)
                else:
                    int_cols.append(col)
                    int_labels.append(label)
            self._columns = (cont_cols, int_cols)
            self._labels = (tuple(cont_labels), tuple(int_labels))
        return self._columns

    def membership_solver(self) -> MixedSolver:
        if self._solver is None:
            cont_cols, int_cols = self.membership_columns()
            self._solver = MixedSolver(cont_cols, int_cols)
        return self._solver


def build_parent(L: int) -> LatticeModel:
    """The parent gauge model: free real vertex stars and plaquette loops."""
    geom = Torus(L)
    return LatticeModel(geom, (vertex_star_family(geom),
                               plaquette_flux_family(geom)))


def condensed_code(generators, L: int) -> LatticeModel:
    """Assemble the condensed stabilizer model for a condensate on Torus(L)."""
    if isinstance(generators, BosonSubgroup):
        subgroup = generators
    else:
        subgroup = validate_subgroup(list(generators))
    outcome = condense(subgroup.generators, subgroup.continuous_directions)
    geom = Torus(L)
    pattern = synthesize_hopping(subgroup, geom)
    hop_fam = hopping_family(geom, pattern, subgroup)
    hop_items = [(op, "continuous" if kind == "continuous" else "discrete")
                 for _, op, kind in hop_fam.instances()]
    local = [vertex_star_family(geom), plaquette_flux_family(geom)]
    if pattern.dressed:
        local.append(vertex_loop_family(geom, pattern))
    restricted = centralizer(local, hop_items)
    families = (hop_fam, *[f for f in restricted if not f.domain.is_trivial])
    return LatticeModel(geom, families, pattern, subgroup, outcome)


@dataclass(frozen=True)
class CommutationReport:
    passed: bool
    pairs_checked: int
    violations: tuple[tuple[str, str, str], ...]


def verify_commuting(items) -> CommutationReport:
    """Exact pairwise commutation of labelled generators.

    Pairs involving a continuous-parameter generator must have exactly zero
    symplectic form; discrete pairs an integer value.
    """
    items = list(items)
    violations = []
    checked = 0
    for a in range(len(items)):
        label_a, op_a, kind_a = items[a]
        for b in range(a + 1, len(items)):
            label_b, op_b, kind_b = items[b]
            checked += 1
            value = symplectic_value(op_a, op_b)
            if kind_a == "continuous" or kind_b == "continuous":
                ok = value == ZERO
            else:
                ok = value.is_integer()
            if not ok:
                violations.append((label_a, label_b, format_scalar(value)))
    return CommutationReport(not violations, checked, tuple(violations))


@dataclass(frozen=True)
class MembershipWitness:
    member: bool
    continuous: tuple[tuple[str, QuadFieldScalar], ...] = ()
    integer: tuple[tuple[str, int], ...] = ()


def stabilizer_membership(model: LatticeModel,
                          op: DisplacementVector) -> MembershipWitness:
    """Decide membership in the stabilizer group, with the combination found.

    Members are exact products of family instances: integer powers of the
    discrete generators times real powers of the continuous directions.
    """
    solver = model.membership_solver()
    solution = solver.solve(model.flatten(op))
    if solution is None:
        return MembershipWitness(False)
    x_c, x_d = solution
    cont_labels, int_labels = model._labels
    return MembershipWitness(
        True,
        tuple((lbl, v) for lbl, v in zip(cont_labels, x_c) if v != 0),
        tuple((lbl, k) for lbl, k in zip(int_labels, x_d) if k != 0),
    )


def in_continuous_span(model: LatticeModel, op: DisplacementVector) -> bool:
    """Whether the full real line of powers of ``op`` lies in the group."""
    solver = model.membership_solver()
    return field_solve(solver.Pc, model.flatten(op)) is not None


# -- logical strings ---------------------------------------------------------


def string_gamma1(geom: Torus, a, b, i0: int = 0) -> DisplacementVector:
    """X^(2 pi a) across the horizontal edges of column i0 plus Z^b along the
    vertical cycle of the same column."""
    op = DisplacementVector(geom)
    for j in range(geom.L):
        op = op + DisplacementVector.x_op(geom, geom.edge("h", i0, j), a)
        op = op + DisplacementVector.z_op(geom, geom.edge("v", i0, j), b)
    return op


def string_gamma2(geom: Torus, a, b, j0: int = 0) -> DisplacementVector:
    """X^(2 pi a) across the vertical edges of row j0 plus Z^b along the
    horizontal cycle of row j0+1."""
    op = DisplacementVector(geom)
    for i in range(geom.L):
        op = op + DisplacementVector.x_op(geom, geom.edge("v", i, j0), a)
        op = op + DisplacementVector.z_op(geom, geom.edge("h", i, j0 + 1), b)
    return op


def hopping_string(model: LatticeModel, x: FluxCharge, orientation: str,
                   start: tuple[int, int], length: int) -> DisplacementVector:
    """Compose ``length`` hopping terms of ``x`` along their own direction."""
    if model.pattern is None:
        raise ValueError("parent model has no hopping terms")
    geom = model.geometry
    i, j = start
    op = DisplacementVector(geom)
    for t in range(length):
        e = geom.edge(orientation, i + t if orientation == "h" else i,
                      j + t if orientation == "v" else j)
        op = op + model.pattern.operator(geom, e, x)
    return op


def operator_from_cochain(model: LatticeModel,
                          assignments: Mapping[Edge, FluxCharge]
                          ) -> DisplacementVector:
    """Sum of hopping terms C_e(u_e) for an edge assignment e -> u_e."""
    if model.pattern is None:
        raise ValueError("parent model has no hopping terms")
    geom = model.geometry
    op = DisplacementVector(geom)
    for e, u in assignments.items():
        e = geom.edge(e.orientation, e.i, e.j)
        op = op + model.pattern.operator(geom, e, u)
    return op


@dataclass(frozen=True)
class LogicalFactor:
    """One encoded degree of freedom: a conjugate pair of cycle strings."""

    kind: str  # "qudit" | "rotor" | "cv"
    dimension: int | None
    x_cycle: str
    z_cycle: str
    x_params: tuple[QuadFieldScalar, QuadFieldScalar]
    z_params: tuple[QuadFieldScalar, QuadFieldScalar]
    x_string: DisplacementVector
    z_string: DisplacementVector
    pairing: QuadFieldScalar


@dataclass(frozen=True)
class LogicalContent:
    factors: tuple[LogicalFactor, ...]
    commutation_finite: tuple[tuple[PhaseFraction, ...], ...]
    domain_gamma1: ParamDomain
    domain_gamma2: ParamDomain
    quantization_matches_theory: bool
    order_checks_passed: bool
    gsd: int | None


def _string_domain(geom: Torus, items, which: str, i0: int, j0: int) -> ParamDomain:
    if which == "gamma1":
        units = [string_gamma1(geom, 1, 0, i0), string_gamma1(geom, 0, 1, i0)]
    else:
        units = [string_gamma2(geom, 1, 0, j0), string_gamma2(geom, 0, 1, j0)]
    rows = []
    for _, op, kind in items:
        coeffs = [symplectic_value(u, op) for u in units]
        rows.append((coeffs, "zero" if kind == "continuous" else "integer"))
    cont, disc = congruence_solve(rows, 2)
    return ParamDomain(tuple(tuple(v) for v in cont), tuple(tuple(v) for v in disc))


def _params_to_anyon(params, flip: bool) -> FluxCharge:
    a, b = params
    return FluxCharge(-a if flip else a, b)


def _anyon_to_params(x: FluxCharge, flip: bool):
    return (-x.flux_hat if flip else x.flux_hat, x.charge)


def _domain_matches_theory(outcome: CondensationOutcome, dom: ParamDomain,
                           flip: bool) -> bool:
    sub = outcome.subgroup
    all_b = list(sub.generators) + list(sub.continuous_directions)
    for gen in dom.discrete:
        if not outcome.deconfined.is_deconfined(_params_to_anyon(gen, flip)):
            return False
    for direction in dom.continuous:
        x = _params_to_anyon(direction, flip)
        if any(braiding_value(g, x) != ZERO for g in all_b):
            return False
    targets = list(outcome.finite_generators)
    if outcome.integer_factor_generator is not None:
        targets.append(outcome.integer_factor_generator)
    cont_cols = [list(v) for v in dom.continuous]
    int_cols = [list(v) for v in dom.discrete]
    for r in targets:
        target = list(_anyon_to_params(r, flip))
        if MixedSolver(cont_cols, int_cols).solve(target) is None:
            return False
    if outcome.continuous_factor is not None:
        v = list(_anyon_to_params(outcome.continuous_factor.direction, flip))
        M = [[col[t] for col in cont_cols] for t in range(2)]
        if field_solve(M, v) is None:
            return False
    return True


def _dual_partners(reps, orders) -> list[FluxCharge]:
    """Combos q_j of the reps with braiding b(r_i, q_j) = delta_ij / d_j mod 1."""
    t = len(reps)
    if t == 0:
        return []
    gram = [[braiding_value(reps[i], reps[j]) for j in range(t)] for i in range(t)]
    denom = 1
    for row in gram:
        for x in row:
            if x.b != 0:
                raise ValueError("finite-sector braiding must be rational")
            denom = denom * x.a.denominator // _int_gcd(denom, x.a.denominator)
    for d in orders:
        denom = denom * d // _int_gcd(denom, d)
    # solve (N G) c = N delta_j / d_j  (mod N) with slack columns
    M = [[int(gram[i][k].a * denom) for k in range(t)]
         + [denom if i == col else 0 for col in range(t)] for i in range(t)]
    partners = []
    for j in range(t):
        rhs = [denom // orders[j] if i == j else 0 for i in range(t)]
        sol = integer_solve(M, rhs)
        if sol is None:
            raise ValueError("braiding form is degenerate on the quotient")
        q = FluxCharge(ZERO, ZERO)
        for k in range(t):
            q = q + reps[k] * sol[k]
        partners.append(q)
    return partners


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _build_factors(model: LatticeModel, i0: int, j0: int):
    out = model.outcome
    geom = model.geometry
    reps = list(out.finite_generators)
    orders = list(out.finite_theory.cyclic_orders)
    partners = _dual_partners(reps, orders)
    factors = []
    for r, d, q in zip(reps, orders, partners):
        xp = _anyon_to_params(r, False)
        zp = _anyon_to_params(q, True)
        xs = string_gamma1(geom, xp[0], xp[1], i0)
        zs = string_gamma2(geom, zp[0], zp[1], j0)
        factors.append(LogicalFactor("qudit", d, "gamma1", "gamma2", xp, zp,
                                     xs, zs, symplectic_value(xs, zs)))
    cf = out.continuous_factor
    if cf is not None and out.integer_factor_generator is not None:
        v, u = cf.direction, out.integer_factor_generator
        vp1, up2 = _anyon_to_params(v, False), _anyon_to_params(u, True)
        xs = string_gamma1(geom, vp1[0], vp1[1], i0)
        zs = string_gamma2(geom, up2[0], up2[1], j0)
        factors.append(LogicalFactor("rotor", None, "gamma1", "gamma2",
                                     vp1, up2, xs, zs, symplectic_value(xs, zs)))
        vp2, up1 = _anyon_to_params(v, True), _anyon_to_params(u, False)
        xs = string_gamma2(geom, vp2[0], vp2[1], j0)
        zs = string_gamma1(geom, up1[0], up1[1], i0)
        factors.append(LogicalFactor("rotor", None, "gamma2", "gamma1",
                                     vp2, up1, xs, zs, symplectic_value(xs, zs)))
    elif cf is not None and cf.kind == "R":
        v = cf.direction
        vp1, vp2 = _anyon_to_params(v, False), _anyon_to_params(v, True)
        xs = string_gamma1(geom, vp1[0], vp1[1], i0)
        zs = string_gamma2(geom, vp2[0], vp2[1], j0)
        factors.append(LogicalFactor("cv", None, "gamma1", "gamma2",
                                     vp1, vp2, xs, zs, symplectic_value(xs, zs)))
    finite = [f for f in factors if f.kind == "qudit"]
    commutation = tuple(tuple(symplectic_phase(fi.x_string, fj.z_string)
                              for fj in finite) for fi in finite)
    return factors, commutation


def _factor_orders_ok(model: LatticeModel, factors) -> bool:
    for f in factors:
        if f.kind == "qudit":
            for op in (f.x_string, f.z_string):
                for k in range(1, f.dimension + 1):
                    member = stabilizer_membership(model, op.scale(k)).member
                    if member != (k == f.dimension):
                        return False
        elif f.kind == "rotor":
            angle, winding = f.x_string, f.z_string
            if not stabilizer_membership(model, angle).member:
                return False
            if stabilizer_membership(model, angle.scale(_HALF)).member:
                return False
            if any(stabilizer_membership(model, winding.scale(k)).member
                   for k in (1, 2)):
                return False
        else:  # cv: no finite power of either string is a stabilizer
            for op in (f.x_string, f.z_string):
                if any(stabilizer_membership(model, op.scale(k)).member
                       for k in (1, 2)):
                    return False
    return True


_HALF = QuadFieldScalar(1) / QuadFieldScalar(2)


def _logical_string_columns(model: LatticeModel, i0: int = 0, j0: int = 0):
    """Flattened cycle strings of the encoded content, as solver columns."""
    out = model.outcome
    geom = model.geometry
    cont_cols, int_cols = [], []
    if out is None:
        return cont_cols, int_cols
    reps = list(out.finite_generators)
    if out.integer_factor_generator is not None:
        reps.append(out.integer_factor_generator)
    for r in reps:
        int_cols.append(model.flatten(
            string_gamma1(geom, r.flux_hat, r.charge, i0)))
        int_cols.append(model.flatten(
            string_gamma2(geom, -r.flux_hat, r.charge, j0)))
    if out.continuous_factor is not None:
        v = out.continuous_factor.direction
        cont_cols.append(model.flatten(
            string_gamma1(geom, v.flux_hat, v.charge, i0)))
        cont_cols.append(model.flatten(
            string_gamma2(geom, -v.flux_hat, v.charge, j0)))
    return cont_cols, int_cols


def check_local_maximality(model: LatticeModel, window: int = 2) -> None:
    """Raise NonMaximal if an operator on a contractible window commutes with
    every stabilizer generator without being accounted for.

    For purely finite condensates every such operator must be a stabilizer
    member.  When a continuous direction survives, its tensionless strings
    let contractible operators carry logical classes (a wound string times a
    stabilizer can have local support), so membership is then tested modulo
    the logical cycle strings.  A window of 2 catches missing single-edge
    stabilizers such as a proper sub-lattice of hopping powers; wider gaps
    need a larger window and torus.
    """
    geom = model.geometry
    if geom.L < window + 1:
        raise ValueError("torus too small for a contractible window")
    ball = [geom.edge(o, i, j) for o in ("h", "v")
            for i in range(window) for j in range(window)]
    units = []
    for e in ball:
        units.append(DisplacementVector.x_op(geom, e, 1))
        units.append(DisplacementVector.z_op(geom, e, 1))
    rows = []
    for _, op, kind in model.sampled_generators():
        coeffs = [symplectic_value(u, op) for u in units]
        rows.append((coeffs, "zero" if kind == "continuous" else "integer"))
    cont, disc = congruence_solve(rows, len(units))

    continuous_sector = (model.outcome is not None
                         and model.outcome.continuous_factor is not None)
    cont_cols, int_cols = model.membership_columns()
    if continuous_sector:
        extra_cont, extra_int = _logical_string_columns(model)
        cont_cols = cont_cols + extra_cont
        solver = MixedSolver(cont_cols, int_cols + extra_int)
    else:
        solver = model.membership_solver()
    cont_matrix = [[col[t] for col in cont_cols]
                   for t in range(2 * len(geom.edges))]

    def realise(vec) -> DisplacementVector:
        op = DisplacementVector(geom)
        for t, e in enumerate(ball):
            op = op + DisplacementVector.x_op(geom, e, vec[2 * t])
            op = op + DisplacementVector.z_op(geom, e, vec[2 * t + 1])
        return op

    for direction in cont:
        if field_solve(cont_matrix, model.flatten(realise(direction))) is None:
            raise NonMaximal("continuous local direction outside the "
                             "stabilizer group")
    for gen in disc:
        if solver.solve(model.flatten(realise(gen))) is None:
            raise NonMaximal("local commutant element outside the stabilizer "
                             "group")


def logical_operators(model: LatticeModel, basis: HomologyBasis | None = None,
                      check_maximality: bool = True) -> LogicalContent:
    """Quantized non-contractible strings modulo stabilizers, as factors.

    Solves the commutation congruences for the two cycle-string families,
    cross-checks the solution against the condensed anyon content, builds one
    conjugate string pair per encoded factor, and verifies the fusion orders
    by membership.
    """
    if model.outcome is None:
        raise ValueError("parent model has no condensed logical content")
    geom = model.geometry
    if basis is None:
        basis = HomologyBasis(geom)
    i0, j0 = basis.i0, basis.j0
    items = model.sampled_generators()
    dom1 = _string_domain(geom, items, "gamma1", i0, j0)
    dom2 = _string_domain(geom, items, "gamma2", i0, j0)
    matches = (_domain_matches_theory(model.outcome, dom1, flip=False)
               and _domain_matches_theory(model.outcome, dom2, flip=True))
    factors, commutation = _build_factors(model, i0, j0)
    orders_ok = _factor_orders_ok(model, factors)
    if check_maximality and geom.L >= 3:
        check_local_maximality(model)
    return LogicalContent(tuple(factors), commutation, dom1, dom2, matches,
                          orders_ok, model.outcome.gsd_torus)


@dataclass(frozen=True)
class SyndromeReport:
    violations: tuple[tuple[str, str, str], ...]  # (family, anchor, detail)
    classification: str  # "commuting" | "string-endpoints" | "confined"

    def anchors(self, family: str) -> tuple[str, ...]:
        return tuple(anchor for fam, anchor, _ in self.violations
                     if fam == family)


def syndrome(model: LatticeModel, op: DisplacementVector) -> SyndromeReport:
    """Which stabilizer generators fail to commute with ``op``, and how.

    Edge-term violations signal confinement (the cost grows with the support);
    vertex or plaquette violations alone mark the endpoints of a deconfined
    string.
    """
    violations = []
    edge_violated = False
    other_violated = False
    for fam in model.families:
        for anchor in fam.anchors:
            details = []
            for t, gen in enumerate(fam.domain.discrete):
                value = symplectic_value(fam.builder(anchor, gen), op)
                if not value.is_integer():
                    details.append(f"d{t}={format_scalar(value)}")
            for t, direction in enumerate(fam.domain.continuous):
                value = symplectic_value(fam.builder(anchor, direction), op)
                if value != ZERO:
                    details.append(f"c{t}={format_scalar(value)}")
            if details:
                violations.append((fam.name, str(anchor), ", ".join(details)))
                if fam.anchor_kind == "edge":
                    edge_violated = True
                else:
                    other_violated = True
    if edge_violated:
        classification = "confined"
    elif other_violated:
        classification = "string-endpoints"
    else:
        classification = "commuting"
    return SyndromeReport(tuple(violations), classification)
