"""Hopping-operator synthesis by exhaustive constraint search.

A hopping operator C_e(u) moves the flux-charge composite u across edge e:
X^(2*pi*flux) on e plus a Z dressing (multiples of the charge) on nearby
edges.  The dressing is not given by a closed formula here; it is found by
searching all coefficient assignments in c*{0, +-1/2, +-1, +-2} on the edges
within graph radius 1 of e, subject to:

(i)   syndrome: only the two adjacent plaquettes see flux +-phi, and the two
      vertices southeast of those plaquettes see charge +-c;
(ii)  commutation table: psi_{e,e'} = exp(+-i(phi c' + phi' c)/2) on coupled
      pairs and 1 elsewhere, equivalent to the cross-dressing overlap being
      antisymmetric with entries in {0, +-1/2};
(iii) hoppings of the condensate generators commute exactly (follows from
      (ii) plus the evenness certificate);
(iv)  composed strings excite endpoints only (follows from (i) by syndrome
      cancellation; verified in tests).

Pure-flux/pure-charge condensates need no dressing: the pattern is the plain
single-edge X^(2*pi*flux) Z^charge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .anyons import FluxCharge
from .displacement import DisplacementVector, symplectic_value
from .geometry import Edge, Torus
from .scalars import PhaseFraction, QuadFieldScalar, format_scalar

Offset = tuple[str, int, int]  # (orientation, di, dj) relative to the base edge anchor

GRID = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
)

# edges whose endpoints lie within graph distance 1 of the base edge's endpoints
H_CANDIDATES: tuple[Offset, ...] = (
    ("h", -1, 0), ("h", 1, 0), ("h", 0, 1), ("h", 0, -1),
    ("v", 0, 0), ("v", 0, -1), ("v", 1, 0), ("v", 1, -1),
)
V_CANDIDATES: tuple[Offset, ...] = (
    ("v", 0, -1), ("v", 0, 1), ("v", -1, 0), ("v", 1, 0),
    ("h", -1, 0), ("h", 0, 0), ("h", -1, 1), ("h", 0, 1),
)

# charge syndrome targets (vertex offset -> sign, in units of c), southeast of
# the +-flux plaquettes of the bare X part
H_CHARGE_TARGET = {(1, 0): 1, (1, -1): -1}
V_CHARGE_TARGET = {(0, 0): 1, (1, 0): -1}


class NoPatternFound(Exception):
    """The dressing search exhausted its grid without satisfying (i)-(iv)."""


@dataclass(frozen=True)
class HoppingTemplate:
    orientation: str
    dressing: tuple[tuple[Offset, Fraction], ...]  # sorted, nonzero entries only
    on_edge_z: Fraction = Fraction(0)

    def z_coefficient(self, offset: Offset) -> Fraction:
        if offset == (self.orientation, 0, 0):
            return self.on_edge_z
        for off, coef in self.dressing:
            if off == offset:
                return coef
        return Fraction(0)


@dataclass(frozen=True)
class HoppingPattern:
    horizontal: HoppingTemplate
    vertical: HoppingTemplate

    @property
    def dressed(self) -> bool:
        return bool(self.horizontal.dressing or self.vertical.dressing)

    def template(self, orientation: str) -> HoppingTemplate:
        return self.horizontal if orientation == "h" else self.vertical

    def operator(self, geometry: Torus, edge: Edge, u: FluxCharge) -> DisplacementVector:
        tpl = self.template(edge.orientation)
        base = geometry.edge(edge.orientation, edge.i, edge.j)
        op = DisplacementVector.x_op(geometry, base, u.flux_hat)
        if tpl.on_edge_z:
            op = op + DisplacementVector.z_op(geometry, base, u.charge * tpl.on_edge_z)
        for (o, di, dj), coef in tpl.dressing:
            target = geometry.edge(o, edge.i + di, edge.j + dj)
            op = op + DisplacementVector.z_op(geometry, target, u.charge * coef)
        return op

    def s_value(self, base: Edge, other: Edge) -> int:
        """Coupling sign s with psi_{base,other}(u,u') = exp(pi*i*s*(braiding))."""
        tpl = self.template(base.orientation)
        offset = (other.orientation, other.i - base.i, other.j - base.j)
        return int(2 * tpl.z_coefficient(offset))

    def dump(self) -> str:
        lines = []
        one = format_scalar(QuadFieldScalar(1))
        zero = format_scalar(QuadFieldScalar(0))
        for tpl in (self.horizontal, self.vertical):
            entries = [((tpl.orientation, 0, 0), Fraction(1), tpl.on_edge_z)]
            entries += [(off, Fraction(0), coef) for off, coef in tpl.dressing]
            entries.sort(key=lambda t: t[0])
            body = "; ".join(
                f"({o},{di},{dj}) x={format_scalar(QuadFieldScalar(x))}"
                f" z={format_scalar(QuadFieldScalar(z))}"
                for (o, di, dj), x, z in entries
            )
            lines.append(f"{tpl.orientation}: {body}")
        return "\n".join(lines)


def _charge_rows(candidates, targets):
    """Linear system: at every vertex touching the candidate support, the
    accumulated charge syndrome equals the target (0 off the designated pair).

    The syndrome at vertex w is -sum_e star_sign(w,e)*alpha_e; rows are over
    the candidate coefficients."""
    # star membership on the infinite lattice: edge (o,i,j) touches
    # h: (i,j) out[+], (i+1,j) in[-]; v: (i,j) out[+], (i,j+1) in[-]
    vertices = set()
    for o, i, j in candidates:
        if o == "h":
            vertices.update([(i, j), (i + 1, j)])
        else:
            vertices.update([(i, j), (i, j + 1)])
    vertices.update(targets)
    rows, rhs = [], []
    for w in sorted(vertices):
        row = []
        for o, i, j in candidates:
            if o == "h":
                sign = 1 if (i, j) == w else (-1 if (i + 1, j) == w else 0)
            else:
                sign = 1 if (i, j) == w else (-1 if (i, j + 1) == w else 0)
            row.append(sign)
        rows.append(row)
        rhs.append(-targets.get(w, 0))
    return rows, rhs


def _grid_solutions(candidates, targets):
    """All assignments of GRID coefficients to candidates meeting the
    syndrome system; enumerated via the solution affine space."""
    rows, rhs = _charge_rows(candidates, targets)
    n = len(candidates)
    # fraction RREF of [rows | rhs]
    aug = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][n] != 0:
            return  # inconsistent syndrome targets
    free = [c for c in range(n) if c not in pivots]
    for assignment in itertools.product(GRID, repeat=len(free)):
        sol = [Fraction(0)] * n
        for c, val in zip(free, assignment):
            sol[c] = val
        ok = True
        for row_idx, p in enumerate(pivots):
            value = aug[row_idx][n] - sum(
                aug[row_idx][c] * sol[c] for c in free if aug[row_idx][c]
            )
            if value not in GRID:
                ok = False
                break
            sol[p] = value
        if ok:
            yield tuple(sol)


def _as_map(candidates, coeffs) -> dict[Offset, Fraction]:
    return {off: c for off, c in zip(candidates, coeffs) if c != 0}


def _lookup(maps, base_o: str, offset: Offset) -> Fraction:
    return maps[base_o].get(offset, Fraction(0))


def _antisymmetric(maps) -> bool:
    """Condition (ii): alpha^(e)_(e') = -alpha^(e')_(e), entries in {0,+-1/2}.

    Checked for all pairs of edge classes via translation covariance: e is an
    anchor h(0,0) or v(0,0); e' = (o', di, dj) ranges over everything either
    template touches."""
    for base_o in ("h", "v"):
        for (o2, di, dj), coef in maps[base_o].items():
            if abs(coef) > Fraction(1, 2):
                return False
            reverse = _lookup(maps, o2, (base_o, -di, -dj))
            if coef + reverse != 0:
                return False
    return True


def _coupled_triple(pattern: HoppingPattern):
    """A deterministic T-junction triple: three pairwise-coupled edges whose
    sign combination s(e1,e2) - s(e3,e1) - s(e3,e2) equals +1.

    The window uses raw (unwrapped) indices so that s_value sees true offsets;
    instantiation happens on a torus large enough to avoid wrap collisions."""
    geometry = Torus(7)
    window = [
        Edge(o, i, j)
        for o in ("h", "v")
        for i in range(-2, 3)
        for j in range(-2, 3)
    ]
    window.sort()
    for e1, e2, e3 in itertools.permutations(window, 3):
        s12 = pattern.s_value(e1, e2)
        s31 = pattern.s_value(e3, e1)
        s32 = pattern.s_value(e3, e2)
        if s12 and s31 and s32 and s12 - s31 - s32 == 1:
            return geometry, e1, e2, e3
    return None


def synthesize_hopping(subgroup, geometry: Torus | None = None) -> HoppingPattern:
    """Search the dressing grid for a pattern satisfying (i)-(iv).

    ``subgroup`` is a validated BosonSubgroup; pure-only condensates get the
    plain single-edge pattern.
    """
    gens = list(subgroup.generators) + list(subgroup.continuous_directions)
    if all(g.is_pure_flux or g.is_pure_charge for g in gens):
        plain = Fraction(1)
        return HoppingPattern(
            horizontal=HoppingTemplate("h", (), on_edge_z=plain),
            vertical=HoppingTemplate("v", (), on_edge_z=plain),
        )
    if not subgroup.lattice_realizable:
        raise NoPatternFound("subgroup failed the evenness certificate")

    h_solutions = [
        _as_map(H_CANDIDATES, sol) for sol in _grid_solutions(H_CANDIDATES, H_CHARGE_TARGET)
    ]
    v_solutions = [
        _as_map(V_CANDIDATES, sol) for sol in _grid_solutions(V_CANDIDATES, V_CHARGE_TARGET)
    ]
    survivors = []
    for h_map, v_map in itertools.product(h_solutions, v_solutions):
        if _antisymmetric({"h": h_map, "v": v_map}):
            survivors.append((h_map, v_map))
    for h_map, v_map in sorted(survivors, key=lambda hv: (sorted(hv[0].items()), sorted(hv[1].items()))):
        pattern = HoppingPattern(
            horizontal=HoppingTemplate("h", tuple(sorted(h_map.items()))),
            vertical=HoppingTemplate("v", tuple(sorted(v_map.items()))),
        )
        if _coupled_triple(pattern) is not None:
            return pattern
    raise NoPatternFound("no dressing in the radius-1 grid satisfies the constraint set")


def t_junction_spin(pattern: HoppingPattern, x: FluxCharge) -> PhaseFraction:
    """Exchange statistics from the three-psi T-junction product.

    theta = psi(e3,e1; x,-x) * psi(e3,e2; x,-x) * psi(e1,e2; -x,-x) over a
    pairwise-coupled triple; equals spin(x) for deconfined x.
    """
    if not pattern.dressed:
        raise ValueError("T-junction protocol needs a dressed hopping pattern")
    found = _coupled_triple(pattern)
    if found is None:
        raise NoPatternFound("pattern admits no coupled T-junction triple")
    geometry, e1, e2, e3 = found
    minus = -x
    c1 = pattern.operator(geometry, e1, minus)
    c2 = pattern.operator(geometry, e2, minus)
    c3 = pattern.operator(geometry, e3, x)
    theta = (
        symplectic_value(c3, c1)
        + symplectic_value(c3, c2)
        + symplectic_value(c1, c2)
    )
    return PhaseFraction(theta)
