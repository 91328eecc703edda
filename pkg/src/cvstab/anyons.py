"""Anyons of the 2D continuous gauge theory: flux-charge pairs and their statistics.

An anyon is a pair (flux, charge) with flux measured in radians. Internally we
store ``flux_hat`` = flux / (2*pi), so a dyon (2*pi*f, c) has flux_hat = f.
With that normalisation the topological spin is flux_hat * charge mod 1 and
the mutual braiding phase of x and y is flux_hat(x)*charge(y) +
flux_hat(y)*charge(x) mod 1, both exact ``PhaseFraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cvstab.scalars import PhaseFraction, QuadFieldScalar, format_scalar


def _scalar(x) -> QuadFieldScalar:
    if isinstance(x, QuadFieldScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadFieldScalar(x)
    raise TypeError(f"expected exact scalar, got {type(x).__name__}")


@dataclass(frozen=True)
class FluxCharge:
    """Dyon labelled by flux (in units of 2*pi) and gauge charge."""

    flux_hat: QuadFieldScalar
    charge: QuadFieldScalar

    def __post_init__(self):
        object.__setattr__(self, "flux_hat", _scalar(self.flux_hat))
        object.__setattr__(self, "charge", _scalar(self.charge))

    @classmethod
    def from_flux(cls, flux_over_2pi, charge) -> "FluxCharge":
        return cls(_scalar(flux_over_2pi), _scalar(charge))

    @property
    def is_vacuum(self) -> bool:
        return not self.flux_hat and not self.charge

    @property
    def is_pure_flux(self) -> bool:
        return not self.charge

    @property
    def is_pure_charge(self) -> bool:
        return not self.flux_hat

    # fusion is coordinatewise addition in the abelian group R x R
    def __add__(self, other: "FluxCharge") -> "FluxCharge":
        return FluxCharge(self.flux_hat + other.flux_hat, self.charge + other.charge)

    def __neg__(self) -> "FluxCharge":
        return FluxCharge(-self.flux_hat, -self.charge)

    def __sub__(self, other: "FluxCharge") -> "FluxCharge":
        return self + (-other)

    def __mul__(self, k: int) -> "FluxCharge":
        if not isinstance(k, int):
            raise TypeError("anyons scale by integers only")
        return FluxCharge(self.flux_hat * k, self.charge * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"({format_scalar(self.flux_hat)}, {format_scalar(self.charge)})"


VACUUM = FluxCharge(QuadFieldScalar(0), QuadFieldScalar(0))


def spin(x: FluxCharge) -> PhaseFraction:
    """Topological spin theta(x) as a fraction of a turn."""
    return PhaseFraction(x.flux_hat * x.charge)


def braiding_phase(x: FluxCharge, y: FluxCharge) -> PhaseFraction:
    """Full mutual braiding (double exchange) phase of x around y."""
    return PhaseFraction(x.flux_hat * y.charge + y.flux_hat * x.charge)


def braiding_value(x: FluxCharge, y: FluxCharge) -> QuadFieldScalar:
    """Unreduced braiding bilinear form, before taking mod 1."""
    return x.flux_hat * y.charge + y.flux_hat * x.charge


def exchange_dual(x: FluxCharge) -> FluxCharge:
    """Electric-magnetic duality: swap flux (in 2*pi units) with charge.

    This is an involution on dyons that preserves every spin and braiding
    phase, since both are symmetric in the two coordinates.
    """
    return FluxCharge(x.charge, x.flux_hat)


def scale(x: FluxCharge, t) -> FluxCharge:
    """Scale a continuous direction vector by an exact scalar.

    Fusion powers of anyons are integer (use ``k * x``); this helper is for
    geometry on continuous families, where real coefficients are legitimate.
    """
    t = _scalar(t) if not isinstance(t, QuadFieldScalar) else t
    return FluxCharge(x.flux_hat * t, x.charge * t)


def is_boson(x: FluxCharge) -> bool:
    return spin(x).is_trivial


def mutually_transparent(x: FluxCharge, y: FluxCharge) -> bool:
    return braiding_phase(x, y).is_trivial
