"""Run configurations, verification pipelines, and report rendering.

A RunConfig names a condensate (taxonomy shortcut or explicit generator
pairs) and a pipeline mode; run() executes the requested stages and returns
a Report of plain data plus a process exit status.  The machine rendering
is a sorted-key JSON document whose scalar entries are exact textual forms,
so identical configs produce byte-identical reports and parsing a rendered
report reproduces the Report object.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import asdict, dataclass, field

import numpy as np

from .anyons import FluxCharge, braiding_value
from .condense import (
    CondensationError,
    classify,
    composite_condensate,
    condense,
    double_condensate,
    even_k_condensate,
    flux_charge_condensate,
    flux_condensate,
    validate_subgroup,
)
from .finite import gauss_sum_central_charge, lagrangian_subgroups
from .hopping import NoPatternFound
from .lattice import condensed_code, logical_operators, verify_commuting
from .scalars import ONE, format_scalar, parse_scalar
from .spectral import (
    NotPositiveDefinite,
    SpectralConfig,
    gap_estimate,
    n_matrix,
    quadratic_spectrum,
    quadrature_vectors,
    z_matrix,
)

MODES = ("condense", "lattice-verify", "spectrum", "boundary", "full")
_LATTICE_MODES = ("lattice-verify", "spectrum", "full")

_TAXONOMY_RE = re.compile(
    r"^(?P<name>flux|flux-charge|composite|double|even-K)"
    r"(?:\((?P<args>[-\d\s,]*)\))?$")


class ConfigError(ValueError):
    """The run configuration is malformed."""


@dataclass(frozen=True)
class RunConfig:
    """One pipeline invocation: mode, condensate selection, couplings."""

    mode: str
    taxonomy: str | None = None
    generators: tuple[tuple[str, str], ...] | None = None
    d: int = 2
    L: int = 2
    alpha: float = 0.3
    U: float = 10.0
    U_prime: float = 0.0
    tol: float = 1e-10
    out: str | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if (self.taxonomy is None) == (self.generators is None):
            raise ConfigError(
                "exactly one of taxonomy or generators must be given")
        if self.mode in _LATTICE_MODES and self.L < 2:
            raise ConfigError(f"mode {self.mode} needs L >= 2, got {self.L}")
        if self.generators is not None:
            object.__setattr__(
                self, "generators",
                tuple((str(x), str(z)) for x, z in self.generators))


def taxonomy_generators(taxonomy: str) -> list[FluxCharge]:
    """Expand a taxonomy shortcut into condensate generators."""
    m = _TAXONOMY_RE.match(taxonomy.strip())
    if not m:
        raise ConfigError(f"unrecognized taxonomy {taxonomy!r}")
    name = m.group("name")
    args = [int(a) for a in m.group("args").split(",")] if m.group("args") else []
    try:
        if name == "flux":
            if args:
                raise ConfigError("flux takes no parameters")
            return flux_condensate()
        if name == "flux-charge":
            (n,) = args
            return flux_charge_condensate(n)
        if name == "composite":
            (n,) = args
            return composite_condensate(n)
        if name == "double":
            n, m_ = args
            return double_condensate(n, m_)
        n1, n2, nprime = args
        return even_k_condensate(n1, n2, nprime)
    except (TypeError, ValueError) as exc:
        raise ConfigError(
            f"bad parameters for taxonomy {name!r}: {exc}") from exc


def config_generators(config: RunConfig) -> list[FluxCharge]:
    if config.taxonomy is not None:
        return taxonomy_generators(config.taxonomy)
    gens = []
    for xs, zs in config.generators:
        try:
            gens.append(FluxCharge(parse_scalar(xs), parse_scalar(zs)))
        except ValueError as exc:
            raise ConfigError(f"bad generator pair ({xs}, {zs}): {exc}") from exc
    return gens


@dataclass
class Report:
    """Plain-data result of one pipeline run."""

    config: dict
    classification: str | None = None
    encoded_factors: list = field(default_factory=list)
    fusion_orders: list = field(default_factory=list)
    fusion_group: str | None = None
    spins: list = field(default_factory=list)
    braiding: list = field(default_factory=list)
    gsd_torus: int | None = None
    central_charge: int | None = None
    lagrangian_subgroups: list | None = None
    logical_factors: list = field(default_factory=list)
    spectral: dict | None = None
    verification: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    passed: bool = True


def _config_echo(config: RunConfig) -> dict:
    return {
        "mode": config.mode,
        "taxonomy": config.taxonomy,
        "generators": [list(p) for p in config.generators]
        if config.generators is not None else None,
        "d": config.d,
        "L": config.L,
        "alpha": config.alpha,
        "U": config.U,
        "U_prime": config.U_prime,
        "tol": config.tol,
        "out": config.out,
    }


def _subscript(n: int) -> str:
    digits = {"0": "₀", "1": "₁", "2": "₂", "3": "₃",
              "4": "₄", "5": "₅", "6": "₆", "7": "₇",
              "8": "₈", "9": "₉", "-": "₋"}
    return "".join(digits[c] for c in str(n))


def _generator_labels(outcome, tag: str) -> list[str]:
    if tag.startswith("U(1)_") and outcome.relation_matrix is not None:
        R = outcome.relation_matrix
        return [f"a{_subscript(R[i][i])}-analogue" for i in range(len(R))]
    return [f"g{i}" for i in range(len(outcome.finite_theory.cyclic_orders))]


def _condense_stage(report: Report, outcome) -> None:
    cls = classify(outcome)
    report.classification = cls.tag
    report.encoded_factors = list(cls.encoded_factors)
    theory = outcome.finite_theory
    report.fusion_orders = list(theory.cyclic_orders)
    report.fusion_group = outcome.group_description.replace("Z_", "Z")
    labels = _generator_labels(outcome, cls.tag)
    report.spins = [
        {"label": lab, "order": d, "spin": str(s)}
        for lab, d, s in zip(labels, theory.cyclic_orders,
                             theory.generator_spins)]
    report.braiding = [[str(p) for p in row] for row in theory.braiding_matrix]
    report.gsd_torus = outcome.gsd_torus
    report.warnings.extend(outcome.warnings)
    report.verification["condensation"] = (
        f"PASS ({report.fusion_group}, gsd "
        f"{'-' if outcome.gsd_torus is None else outcome.gsd_torus})")


def _boundary_stage(report: Report, outcome) -> None:
    if outcome.gsd_torus is None:
        report.warnings.append(
            "boundary search skipped: condensate leaves continuous sectors")
        return
    theory = outcome.finite_theory
    subs = lagrangian_subgroups(theory)
    report.lagrangian_subgroups = sorted(
        sorted(str(a) for a in sub) for sub in subs)
    report.central_charge = gauss_sum_central_charge(theory)
    report.verification["boundary-search"] = (
        f"PASS ({len(subs)} Lagrangian subgroup(s), "
        f"c- = {report.central_charge} mod 8)")


def _lattice_stage(report: Report, subgroup, L: int) -> None:
    try:
        model = condensed_code(subgroup, L)
    except NoPatternFound as exc:
        report.verification["stabilizer-commutation"] = f"FAIL: {exc}"
        return
    comm = verify_commuting(model.sampled_generators())
    if comm.passed:
        report.verification["stabilizer-commutation"] = (
            f"PASS ({comm.pairs_checked} pairs)")
    else:
        first = comm.violations[0]
        report.verification["stabilizer-commutation"] = (
            f"FAIL: {first[0]} vs {first[1]} -> {first[2]}")
    content = logical_operators(model)
    report.logical_factors = [
        {"kind": f.kind, "dimension": f.dimension,
         "pairing": format_scalar(f.pairing)}
        for f in content.factors]
    names = " + ".join(
        f"{f.kind}({f.dimension})" if f.dimension is not None else f.kind
        for f in content.factors) or "none"
    report.verification["logical-content"] = f"PASS ({names})"
    report.verification["logical-orders"] = (
        "PASS" if content.order_checks_passed else "FAIL: order relations")
    report.verification["logical-quantization"] = (
        "PASS" if content.quantization_matches_theory
        else "FAIL: domain quantization")
    expected = report.gsd_torus if report.gsd_torus is not None else content.gsd
    report.verification["gsd-consistency"] = (
        "PASS" if content.gsd == expected
        else f"FAIL: lattice {content.gsd} vs theory {expected}")


def _spectral_stage(report: Report, subgroup, config: RunConfig) -> None:
    gens = subgroup.generators
    gram_ok = all(
        (braiding_value(a, b).is_integer()
         and (a is b or int(braiding_value(a, b).a) == 0)
         and (a is not b or int(braiding_value(a, b).a) != 0))
        for a in gens for b in gens)
    if not gram_ok:
        report.warnings.append(
            "spectral stage skipped: condensate layers do not decouple")
        return
    spectral_config = SpectralConfig(
        L=config.L, alpha=config.alpha, U=config.U,
        U_prime=config.U_prime)
    report.warnings.extend(spectral_config.advisories())
    model = condensed_code(subgroup, config.L)
    try:
        layers = quadrature_vectors(model)
    except RuntimeError as exc:
        report.verification["spectral-forms"] = f"FAIL: {exc}"
        return
    cs = [f for lay in layers for f in lay.c_forms]
    ws = [f for lay in layers for f in lay.w_forms]
    N = n_matrix(cs, ws, config.alpha)
    dev = float(np.max(np.abs(
        N - (config.alpha / math.pi) * np.eye(len(cs)))))
    report.verification["curvature-identity"] = (
        f"PASS (max deviation {dev:.2e})" if dev < config.tol
        else f"FAIL: deviation {dev:.2e}")
    try:
        est = gap_estimate(N, config.U)
        gap_entry = {"lambda_min": est.lambda_min, "delta": est.delta}
        report.verification["curvature-gap"] = "PASS"
    except NotPositiveDefinite as exc:
        gap_entry = None
        report.verification["curvature-gap"] = f"FAIL: {exc}"
    layer_entries = []
    dets_ok = True
    modes_ok = True
    for lay in layers:
        zd = z_matrix(lay.c_forms)
        expect = abs(2 * lay.k) ** (config.L * config.L)
        if zd.sqrt_abs_det != expect:
            dets_ok = False
        spec = quadratic_spectrum(lay.w_forms, config.alpha)
        sym = max((abs(a + b) for a, b in
                   zip(spec.energies, reversed(spec.energies))), default=0.0)
        if spec.gap <= 0.0 or sym > config.tol:
            modes_ok = False
        layer_entries.append({
            "k": lay.k,
            "sqrt_abs_det": zd.sqrt_abs_det,
            "gap": spec.gap,
            "unique_ground_state": spec.unique_ground_state,
            "mode_energies": list(spec.mode_energies),
        })
    report.spectral = {"gap_estimate": gap_entry, "layers": layer_entries}
    report.verification["pairing-determinants"] = (
        "PASS (sqrt|det Z| = |2k|^(L*L) per layer)" if dets_ok
        else "FAIL: determinant mismatch")
    report.verification["normal-modes"] = (
        "PASS (gapped, +/-E symmetric)" if modes_ok
        else "FAIL: gapless or asymmetric spectrum")


def run(config: RunConfig) -> tuple[Report, int]:
    """Execute the configured pipeline; exit status 0 iff all checks pass."""
    report = Report(config=_config_echo(config))
    gens = config_generators(config)
    try:
        subgroup = validate_subgroup(gens)
        outcome = condense(subgroup.generators, subgroup.continuous_directions)
    except CondensationError as exc:
        report.verification["condensation"] = f"FAIL: {exc}"
        report.passed = False
        return report, 1
    _condense_stage(report, outcome)
    if config.mode in ("boundary", "full"):
        _boundary_stage(report, outcome)
    if config.mode in ("lattice-verify", "full"):
        _lattice_stage(report, subgroup, config.L)
    if config.mode in ("spectrum", "full"):
        _spectral_stage(report, subgroup, config)
    report.passed = all(
        v.startswith("PASS") for v in report.verification.values())
    return report, 0 if report.passed else 1


def render_machine(report: Report) -> str:
    """Canonical machine form: sorted-key JSON, exact scalars as strings."""
    return json.dumps(asdict(report), sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> Report:
    """Inverse of render_machine."""
    return Report(**json.loads(text))


def _spin_cell(spin: str) -> str:
    value = parse_scalar(spin)
    if float(value) > 0.5:
        return f"{spin} ≡ {format_scalar(value - ONE)}"
    return spin


def render(report: Report) -> str:
    """Human-readable report: one section per pipeline stage."""
    cfg = report.config
    what = cfg["taxonomy"] if cfg["taxonomy"] is not None else (
        "; ".join(f"({x}, {z})" for x, z in cfg["generators"]))
    lines = [f"# {cfg['mode']} report for {what}", ""]
    if report.classification is not None:
        lines.append("## condensation")
        lines.append(f"classification: {report.classification}")
        lines.append(f"fusion: {report.fusion_group}")
        for row in report.spins:
            lines.append(f"{row['label']}: order {row['order']}, "
                         f"spin {_spin_cell(row['spin'])}")
        if report.braiding:
            lines.append("braiding (mod 1):")
            for row in report.braiding:
                lines.append("  " + "  ".join(f"{p:>6}" for p in row))
        gsd = "-" if report.gsd_torus is None else report.gsd_torus
        lines.append(f"gsd_torus: {gsd}")
        lines.append("")
    if report.lagrangian_subgroups is not None:
        lines.append("## boundary")
        if report.lagrangian_subgroups:
            lines.append(
                f"lagrangian subgroups ({len(report.lagrangian_subgroups)}):")
            for sub in report.lagrangian_subgroups:
                lines.append("  {" + ", ".join(sub) + "}")
        else:
            lines.append("lagrangian subgroups: none (no gapped boundary)")
        lines.append(f"central charge c- mod 8: {report.central_charge}")
        lines.append("")
    if report.logical_factors:
        lines.append("## logical content")
        for f in report.logical_factors:
            dim = "-" if f["dimension"] is None else f["dimension"]
            lines.append(f"{f['kind']}(dim {dim}): pairing {f['pairing']}")
        lines.append("")
    if report.spectral is not None:
        lines.append("## spectral")
        est = report.spectral["gap_estimate"]
        if est is not None:
            lines.append(f"lambda_min: {est['lambda_min']:.12g}")
            lines.append(f"gap estimate sqrt(U*lambda_min): {est['delta']:.12g}")
        for lay in report.spectral["layers"]:
            lines.append(
                f"layer k={lay['k']}: sqrt|det Z| = {lay['sqrt_abs_det']}, "
                f"quadratic gap = {lay['gap']:.12g}, "
                f"unique ground state = {lay['unique_ground_state']}")
        lines.append("")
    if report.verification:
        lines.append("## verification")
        for name in sorted(report.verification):
            lines.append(f"{name}: {report.verification[name]}")
        lines.append("")
    if report.warnings:
        lines.append("## warnings")
        for w in report.warnings:
            lines.append(f"- {w}")
        lines.append("")
    lines.append("overall: " + ("PASS" if report.passed else "FAIL"))
    lines.append("")
    return "\n".join(lines)
