"""Continuous-variable topological stabilizer codes from boson condensation."""

from cvstab.anyons import FluxCharge, braiding_phase, spin
from cvstab.condense import classify, condense, validate_subgroup
from cvstab.report import Report, RunConfig, render, render_machine, run
from cvstab.scalars import (
    PhaseFraction,
    QuadFieldScalar,
    format_scalar,
    parse_scalar,
)

__all__ = [
    "QuadFieldScalar",
    "PhaseFraction",
    "format_scalar",
    "parse_scalar",
    "FluxCharge",
    "spin",
    "braiding_phase",
    "validate_subgroup",
    "condense",
    "classify",
    "RunConfig",
    "Report",
    "run",
    "render",
    "render_machine",
]

__version__ = "0.1.0"
