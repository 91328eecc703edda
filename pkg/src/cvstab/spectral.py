"""Large-coupling Gaussian analysis of the condensed lattice models.

Works in the quadrature picture: every displacement operator e^{iS} has a
phase S that is a real linear combination of the edge quadratures
(x_e, p_e).  The pinning terms built from the hopping stabilizers and their
local conjugate strings give a quadratic effective Hamiltonian whose normal
modes, gap and residual ground-space dimension are computed here with dense
linear algebra.  All matrix entries descend from exact scalars, so the
float results can be cross-checked against the exact symplectic data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .anyons import braiding_value
from .condense import BosonSubgroup
from .displacement import DisplacementVector
from .geometry import Torus
from .hopping import HoppingPattern
from .lattice import LatticeModel
from .linalg import solve
from .scalars import ZERO, ONE, QuadFieldScalar

TWO_PI = 2.0 * math.pi
SQRT2 = math.sqrt(2.0)


class NonIntegerEntry(ValueError):
    """A pairing that must be an integer is not one."""


class NotPositiveDefinite(ValueError):
    """The curvature matrix has a non-positive eigenvalue."""


@dataclass(frozen=True)
class QuadratureForm:
    """A linear form sum_e (x[e]*x_e + p[e]*p_e) over the edge quadratures.

    The commutator of two such forms is a scalar: [A, B] = 2*pi*i*pairing(A, B).
    """

    label: str
    x: tuple[float, ...]
    p: tuple[float, ...]

    def __post_init__(self):
        if len(self.x) != len(self.p):
            raise ValueError("x and p coefficient vectors differ in length")


def pairing(a: QuadratureForm, b: QuadratureForm) -> float:
    """Symplectic pairing in 2*pi units: [A, B] = 2*pi*i*pairing(a, b)."""
    acc = 0.0
    for ax, ap, bx, bp in zip(a.x, a.p, b.x, b.p):
        acc += ax * bp - ap * bx
    return acc / TWO_PI


def commutator(a: QuadratureForm, b: QuadratureForm) -> float:
    """The scalar value of [A, B]/i, namely 2*pi times the pairing."""
    return TWO_PI * pairing(a, b)


def form_from_displacement(op: DisplacementVector, label: str,
                           scale: float = 1.0) -> QuadratureForm:
    """Quadrature phase of a displacement operator, optionally rescaled.

    Z^c contributes c to the x coefficient of its edge and X^(2*pi*a)
    contributes 2*pi*a to the p coefficient, so that the pairing of two
    converted operators reproduces their exact symplectic value.
    """
    edges = list(op.geometry.edges)
    xs = tuple(scale * float(op.z_at(e)) for e in edges)
    ps = tuple(scale * TWO_PI * float(op.x_at(e)) for e in edges)
    return QuadratureForm(label=label, x=xs, p=ps)


@dataclass(frozen=True)
class LayerQuadratures:
    """Conjugate pairs (c_e, w_e) for one layer of the condensed model."""

    k: int
    c_forms: tuple[QuadratureForm, ...]
    w_forms: tuple[QuadratureForm, ...]


_REFERENCE_L = 5


@lru_cache(maxsize=None)
def _short_string_offsets(pattern: HoppingPattern, gens, orientation: str,
                          layer: int, target: QuadFieldScalar):
    """Solve for the local string conjugate to a hop on a reference torus.

    The unknown is a displacement supported within Chebyshev distance 2 of
    the base edge whose symplectic value against every hopping stabilizer
    vanishes, except against the base hop of the requested layer where it
    equals ``target``.  On the reference torus the solution is unique and
    its support fits the window, so it is returned as signed offsets from
    the base edge; folding those offsets onto a smaller torus preserves
    every constraint because each stabilizer row picks up exactly one
    translate of the reference solution.
    """
    geom = Torus(_REFERENCE_L)
    base = geom.edge(orientation, 0, 0)
    ball = sorted({geom.edge(o, di, dj)
                   for o in ("h", "v")
                   for di in range(-2, 3) for dj in range(-2, 3)}, key=str)
    rows = []
    rhs = []
    seen = set()
    for j, g in enumerate(gens):
        for o in ("h", "v"):
            for di in range(-4, 5):
                for dj in range(-4, 5):
                    e = geom.edge(o, di, dj)
                    if (j, e) in seen:
                        continue
                    seen.add((j, e))
                    hop = pattern.operator(geom, e, g)
                    rows.append([hop.z_at(b) for b in ball] +
                                [-hop.x_at(b) for b in ball])
                    rhs.append(target if (e == base and j == layer) else ZERO)
    sol = solve(rows, rhs)
    if sol is None:
        raise RuntimeError(
            f"no local conjugate string for layer {layer} at {base}")
    n = len(ball)

    def signed(c: int) -> int:
        return c if c <= _REFERENCE_L // 2 else c - _REFERENCE_L

    offsets = []
    for b, xv, zv in zip(ball, sol[:n], sol[n:]):
        if xv == ZERO and zv == ZERO:
            continue
        offsets.append((b.orientation, signed(b.i), signed(b.j), xv, zv))
    return tuple(offsets)


def _string_at(geom: Torus, offsets, i: int, j: int) -> DisplacementVector:
    out = DisplacementVector(geom)
    for o, di, dj, xv, zv in offsets:
        e = geom.edge(o, i + di, j + dj)
        if xv != ZERO:
            out = out + DisplacementVector.x_op(geom, e, xv)
        if zv != ZERO:
            out = out + DisplacementVector.z_op(geom, e, zv)
    return out


def _layer_sign(k: int) -> QuadFieldScalar:
    return ONE if k > 0 else -ONE


def _layer_label(g) -> int:
    k_val = braiding_value(g, g)
    if not k_val.is_integer():
        raise NonIntegerEntry(f"layer label {k_val} is not an integer")
    return int(k_val.a)


def short_conjugate_string(model: LatticeModel, edge,
                           layer: int) -> DisplacementVector:
    """The exact local string conjugate to the hop of ``layer`` at ``edge``.

    Its symplectic value against the matching hop is sign(k), zero against
    every other hopping stabilizer.  The order of the dual excitation shows
    up as membership: the |k|-th multiple of the string lies in the
    stabilizer group, and summing the strings of all layers weighted by the
    inverse hop exponents collapses to a bare single-edge displacement.
    """
    if model.pattern is None or model.subgroup is None:
        raise ValueError("model carries no hopping pattern")
    gens = model.subgroup.generators
    k = _layer_label(gens[layer])
    offsets = _short_string_offsets(model.pattern, gens, edge.orientation,
                                    layer, _layer_sign(k))
    return _string_at(model.geometry, offsets, edge.i, edge.j)


def quadrature_vectors(model: LatticeModel) -> tuple[LayerQuadratures, ...]:
    """Conjugate quadrature pairs (c, w) for every edge and layer.

    c_e is the phase of the hopping stabilizer of its layer, w_e the phase
    of the short string conjugate to it.  The c forms carry a sqrt(2)
    normalisation that makes their mutual pairings integers, the w forms
    the inverse factor, so that pairing(c_e, w_e) = sign(k) on matching
    edge and layer and zero otherwise.

    The short string is solved exactly once per layer and orientation on a
    reference torus and its offsets are folded onto the model geometry, so
    small lattices carry the same translation-covariant string as large
    ones.
    """
    if model.pattern is None or model.subgroup is None:
        raise ValueError("model carries no hopping pattern")
    geom = model.geometry
    gens = model.subgroup.generators
    layers = []
    for j, g in enumerate(gens):
        k = _layer_label(g)
        bases = {o: _short_string_offsets(model.pattern, gens, o, j,
                                          _layer_sign(k))
                 for o in ("h", "v")}
        c_forms = []
        w_forms = []
        for e in geom.edges:
            hop = model.pattern.operator(geom, e, g)
            c_forms.append(form_from_displacement(
                hop, label=f"c({k})@{e}", scale=SQRT2))
            string = _string_at(geom, bases[e.orientation], e.i, e.j)
            w_forms.append(form_from_displacement(
                string, label=f"w({k})@{e}", scale=1.0 / SQRT2))
        layers.append(LayerQuadratures(
            k=k, c_forms=tuple(c_forms), w_forms=tuple(w_forms)))
    return tuple(layers)


def _pair_matrix(a_forms: Sequence[QuadratureForm],
                 b_forms: Sequence[QuadratureForm]) -> np.ndarray:
    ax = np.array([f.x for f in a_forms])
    ap = np.array([f.p for f in a_forms])
    bx = np.array([f.x for f in b_forms])
    bp = np.array([f.p for f in b_forms])
    return (ax @ bp.T - ap @ bx.T) / TWO_PI


def n_matrix(c_forms: Sequence[QuadratureForm],
             w_forms: Sequence[QuadratureForm],
             alpha: float) -> np.ndarray:
    """Curvature matrix of the pinning potential around the w = 0 well.

    For the quadratic trapping Hamiltonian H0 = alpha*sum(w_e^2) the nested
    commutator -[S_i, [S_j, H0]] collapses to a Gram form in the pairings
    G_ie = pairing(c_i, w_e); the normalisation is fixed so that conjugate
    unit pairings give N = (alpha/pi)*Identity.
    """
    G = _pair_matrix(c_forms, w_forms)
    return (alpha / math.pi) * (G @ G.T)


def _integer_det(m: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[-1][-1]


@dataclass(frozen=True)
class ZData:
    """Integer pairing matrix of stabilizer phases and its determinant data."""

    matrix: np.ndarray
    det: int
    sqrt_abs_det: int
    singular: bool


def z_matrix(c_forms: Sequence[QuadratureForm]) -> ZData:
    """Antisymmetric integer pairing matrix Z_ij of the stabilizer phases.

    sqrt(|det Z|) counts the states pinned by the stabilizer group; it is
    computed exactly over the integers and cross-checked against a float LU
    determinant.  Forms whose pairings are not integers are rejected.
    """
    P = _pair_matrix(c_forms, c_forms)
    R = np.rint(P)
    err = float(np.max(np.abs(P - R))) if P.size else 0.0
    if err > 1e-9:
        raise NonIntegerEntry(
            f"pairing matrix deviates from integers by {err:.3e}")
    ints = [[int(v) for v in row] for row in R]
    det = _integer_det(ints)
    if det != 0:
        sign, logabs = np.linalg.slogdet(P)
        if not math.isclose(logabs, math.log(abs(det)), rel_tol=1e-8):
            raise ArithmeticError("float and exact determinants disagree")
    root = math.isqrt(abs(det))
    if root * root != abs(det):
        raise ArithmeticError(f"|det Z| = {abs(det)} is not a perfect square")
    return ZData(matrix=np.array(ints, dtype=object),
                 det=det, sqrt_abs_det=root, singular=det == 0)


@dataclass(frozen=True)
class GapEstimate:
    delta: float
    lambda_min: float


def gap_estimate(N: np.ndarray, U: float) -> GapEstimate:
    """Perturbative gap sqrt(U*lambda_min) from the curvature matrix."""
    if U <= 0:
        raise ValueError("U must be positive")
    evs = np.linalg.eigvalsh(np.asarray(N, dtype=float))
    lam = float(evs[0])
    scale = max(1.0, float(abs(evs[-1])))
    if lam <= 1e-12 * scale:
        raise NotPositiveDefinite(
            f"smallest eigenvalue {lam:.3e} is not positive")
    return GapEstimate(delta=math.sqrt(U * lam), lambda_min=lam)


@dataclass(frozen=True)
class QuadraticSpectrum:
    energies: tuple[float, ...]
    mode_energies: tuple[float, ...]
    gap: float
    unique_ground_state: bool


def quadratic_spectrum(w_forms: Sequence[QuadratureForm],
                       alpha: float) -> QuadraticSpectrum:
    """Normal modes of H = alpha*sum(w_e^2) from the w pairing matrix.

    With iK_ee' = [w_e, w_e'] the full set of eigenvalues of the Hermitian
    matrix 2*alpha*(iK) comes in +/-E pairs; the positive ones are the mode
    energies, the gap is the smallest of them, and a trivial kernel means a
    unique Gaussian ground state.
    """
    P = _pair_matrix(w_forms, w_forms)
    K = TWO_PI * P
    H = 2.0 * alpha * (1j * K)
    evs = np.linalg.eigvalsh(H)
    scale = max(1.0, float(np.max(np.abs(evs))) if evs.size else 0.0)
    tol = 1e-9 * scale
    positive = sorted(float(e) for e in evs if e > tol)
    kernel = int(np.sum(np.abs(evs) <= tol))
    return QuadraticSpectrum(
        energies=tuple(float(e) for e in evs),
        mode_energies=tuple(positive),
        gap=positive[0] if positive else 0.0,
        unique_ground_state=kernel == 0)


def effective_hamiltonian_degeneracy(subgroup: BosonSubgroup) -> int:
    """Ground-space dimension left after imposing the vertex constraints.

    Per layer the stabilizer phases pin sqrt(|det Z|) = |2k|^(L*L) states;
    the L*L - 1 independent vertex constraints together with the extra
    halving from the product relation cut this down to |k|, independent of
    system size, and the general answer is |det B| for the braiding gram B
    of the condensate generators.  Only rank-2 discrete condensates have a
    finite answer.
    """
    if subgroup.subgroup_class != "ZxZ":
        raise ValueError(
            "ground-space dimension is infinite unless the condensate is "
            "a rank-2 discrete subgroup")
    gens = subgroup.generators
    gram = []
    for a in gens:
        row = []
        for b in gens:
            v = braiding_value(a, b)
            if not v.is_integer():
                raise NonIntegerEntry(f"braiding gram entry {v} not integer")
            row.append(int(v.a))
        gram.append(row)
    return abs(_integer_det(gram))


@dataclass(frozen=True)
class SpectralConfig:
    """Couplings of the large-coupling analysis for one layer.

    alpha is the quadratic trapping strength and must be positive.  The
    hierarchy U >> alpha and U' << sqrt(U*alpha) justifies the perturbative
    treatment; it is reported by advisories(), never enforced.  J is the
    condensation coupling, recorded for reporting only.
    """

    L: int
    alpha: float
    U: float
    U_prime: float = 0.0
    k: int = 2
    J: float = 0.0

    def __post_init__(self):
        if self.L < 1:
            raise ValueError("L must be at least 1")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")

    def advisories(self) -> tuple[str, ...]:
        notes = []
        if not self.U > 10.0 * self.alpha:
            notes.append(
                f"U = {self.U:g} does not dominate alpha = {self.alpha:g}; "
                "the perturbative gap formula may be unreliable")
        bound = math.sqrt(self.U * self.alpha) if self.U > 0 else 0.0
        if self.U_prime and not self.U_prime < 0.1 * bound:
            notes.append(
                f"U' = {self.U_prime:g} is not small against "
                f"sqrt(U*alpha) = {bound:g}")
        return tuple(notes)
