"""Command-line front end for the condensation pipelines.

Each subcommand selects a pipeline mode; the condensate comes either from a
taxonomy shortcut with its integer parameters, from repeated --generator
pairs, or from a JSON config file.  The human report goes to stdout; --out
additionally writes the canonical machine report.  Exit status: 0 when all
verification stages pass, 1 on a verification failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .report import MODES, ConfigError, RunConfig, render, render_machine, run

_TAXONOMY_PARAMS = {
    "flux": (),
    "flux-charge": ("n",),
    "composite": ("n",),
    "double": ("n", "m"),
    "even-K": ("n1", "n2", "nprime"),
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="FILE",
                     help="JSON file with run settings")
    sub.add_argument("--taxonomy", choices=sorted(_TAXONOMY_PARAMS),
                     help="condensate family shortcut")
    sub.add_argument("--n", type=int)
    sub.add_argument("--m", type=int)
    sub.add_argument("--n1", type=int)
    sub.add_argument("--n2", type=int)
    sub.add_argument("--nprime", type=int)
    sub.add_argument("--generator", action="append", metavar="FLUX,CHARGE",
                     help="exact scalar pair; repeat per generator")
    sub.add_argument("--d", type=int, default=2,
                     help="field discriminant (default 2)")
    sub.add_argument("--L", type=int, default=2, help="torus side")
    sub.add_argument("--alpha", type=float, default=0.3)
    sub.add_argument("--U", type=float, default=10.0)
    sub.add_argument("--U-prime", type=float, default=0.0, dest="U_prime")
    sub.add_argument("--tol", type=float, default=1e-10)
    sub.add_argument("--out", metavar="FILE",
                     help="also write the machine report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvstab",
        description="condense boson subgroups and verify the induced codes")
    subs = parser.add_subparsers(dest="mode", required=True)
    for mode in MODES:
        _add_common(subs.add_parser(mode))
    return parser


def _taxonomy_string(parser: argparse.ArgumentParser,
                     args: argparse.Namespace) -> str:
    params = _TAXONOMY_PARAMS[args.taxonomy]
    values = []
    for name in params:
        value = getattr(args, name)
        if value is None:
            parser.error(f"--taxonomy {args.taxonomy} requires --{name}")
        values.append(value)
    for name in ("n", "m", "n1", "n2", "nprime"):
        if name not in params and getattr(args, name) is not None:
            parser.error(f"--{name} is not a parameter of {args.taxonomy}")
    if not values:
        return args.taxonomy
    return f"{args.taxonomy}({', '.join(str(v) for v in values)})"


def _generator_pairs(parser: argparse.ArgumentParser,
                     raw: list[str]) -> tuple[tuple[str, str], ...]:
    pairs = []
    for item in raw:
        parts = [p.strip() for p in item.split(",")]
        if len(parts) != 2:
            parser.error(f"--generator expects FLUX,CHARGE, got {item!r}")
        pairs.append((parts[0], parts[1]))
    return tuple(pairs)


def _config_from_args(parser: argparse.ArgumentParser,
                      args: argparse.Namespace) -> RunConfig:
    inline = args.taxonomy is not None or args.generator
    if args.config is not None:
        if inline:
            parser.error("--config excludes --taxonomy/--generator")
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}")
        data.setdefault("mode", args.mode)
        if data.get("generators") is not None:
            data["generators"] = tuple(
                tuple(pair) for pair in data["generators"])
        if args.out is not None:
            data["out"] = args.out
        try:
            return RunConfig(**data)
        except TypeError as exc:
            raise ConfigError(f"bad config {args.config}: {exc}")
    kwargs = dict(mode=args.mode, d=args.d, L=args.L, alpha=args.alpha,
                  U=args.U, U_prime=args.U_prime, tol=args.tol, out=args.out)
    if args.taxonomy is not None and args.generator:
        parser.error("--taxonomy excludes --generator")
    if args.taxonomy is not None:
        kwargs["taxonomy"] = _taxonomy_string(parser, args)
    elif args.generator:
        kwargs["generators"] = _generator_pairs(parser, args.generator)
    else:
        parser.error("need --taxonomy, --generator, or --config")
    return RunConfig(**kwargs)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(parser, args)
        report, status = run(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report))
    if config.out is not None:
        with open(config.out, "w") as fh:
            fh.write(render_machine(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
