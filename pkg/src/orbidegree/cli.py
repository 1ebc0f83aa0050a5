"""Command-line front end with stable JSON output and a fixed exit-code contract.

Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 value not
regular, 4 exponents not equivariant, 5 enumeration cap exceeded.  Identical
invocations with identical configuration print byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields

from .degree import DEFAULT_ENUMERATION_CAP, DegreeResult, degree, preimages
from .errors import (
    EnumerationCapExceededError,
    NoHomomorphismError,
    NotEffectiveError,
    NotEquivariantError,
    NotRegularError,
    OrbidegreeError,
    WeightMismatchError,
)
from .maps import MonomialMap
from .roots import ExactCoordinate
from .spaces import CircleQuotient, WpsOrbifold, WpsPoint, strata
from . import verify as verify_mod

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NOT_REGULAR = 3
EXIT_NOT_EQUIVARIANT = 4
EXIT_CAP_EXCEEDED = 5

CAP_ENV_VAR = "ORBIDEGREE_ENUM_CAP"


@dataclass
class CliConfig:
    """Defaults are documented and stable: cap 10^7, residual 1e-9,
    derivative threshold 1e-8, finite-difference step 1e-5, seed 0."""

    format: str = "json"
    cap: int = DEFAULT_ENUMERATION_CAP
    residual_tol: float = 1e-9
    derivative_threshold: float = 1e-8
    fd_step: float = 1e-5
    seed: int = 0


def load_config(args: argparse.Namespace) -> CliConfig:
    """Defaults, then config file, then environment, then explicit flags."""
    config = CliConfig()
    if getattr(args, "config", None):
        with open(args.config) as handle:
            data = json.load(handle)
        known = {f.name for f in fields(CliConfig)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        for key, value in data.items():
            setattr(config, key, value)
    if CAP_ENV_VAR in os.environ:
        config.cap = int(os.environ[CAP_ENV_VAR])
    for flag in ("format", "cap", "seed"):
        value = getattr(args, flag, None)
        if value is not None:
            setattr(config, flag, value)
    if config.format not in ("json", "text"):
        raise ValueError(f"format must be 'json' or 'text', got {config.format!r}")
    return config


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"weights must be comma-separated integers, got {text!r}") from exc


def _parse_value(text: str, space: WpsOrbifold) -> WpsPoint:
    coords = tuple(ExactCoordinate.parse(part) for part in text.split(","))
    return WpsPoint(space, coords)


def _emit(payload: dict | list, config: CliConfig, text_renderer=None) -> None:
    if config.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text_renderer(payload) if text_renderer else json.dumps(payload, indent=2))


def _cmd_strata(args: argparse.Namespace, config: CliConfig) -> int:
    if (args.wps is None) == (args.circle is None):
        raise ValueError("give exactly one of --wps or --circle")
    if args.wps is not None:
        space = WpsOrbifold(_parse_weights(args.wps))
        header = space.to_json()
    else:
        if args.circle == "reflection":
            space = CircleQuotient.reflection()
        elif args.circle.startswith("rotation"):
            _, _, order = args.circle.partition(":")
            space = CircleQuotient.rotation(int(order) if order else 1)
        else:
            raise ValueError("--circle must be 'reflection' or 'rotation[:k]'")
        header = space.to_json()
    report = strata(space)
    payload = dict(header)
    payload.update(report.to_json())

    def render(data: dict) -> str:
        lines = [f"codim1_empty={data['codim1_empty']} orientable={data['orientable']}"]
        for rec in data["strata"]:
            for comp in rec["components"]:
                lines.append(
                    f"  sdim {rec['sdim']}: isotropy Z_{comp['isotropy']} ({comp['description']})"
                )
        return "\n".join(lines)

    _emit(payload, config, render)
    return EXIT_OK


def _build_map(args: argparse.Namespace) -> MonomialMap:
    return MonomialMap.from_descriptor(
        {"q": _parse_weights(args.q), "r": _parse_weights(args.r), "e": _parse_weights(args.e)}
    )


def _cmd_degree(args: argparse.Namespace, config: CliConfig) -> int:
    f = _build_map(args)
    y = _parse_value(args.value, f.target) if args.value else None
    result: DegreeResult = degree(f, y, cap=config.cap)
    _emit(
        result.to_json(),
        config,
        lambda data: f"degree {data['degree']} (mod2 {data['mod2']}) at {args.value or 'default probe'}",
    )
    return EXIT_OK


def _cmd_preimages(args: argparse.Namespace, config: CliConfig) -> int:
    f = _build_map(args)
    y = _parse_value(args.value, f.target)
    records = preimages(f, y, cap=config.cap)
    payload = {
        "map": f.descriptor(),
        "value": y.to_json(),
        "preimages": [rec.to_json() for rec in records],
    }
    _emit(payload, config, lambda data: f"{len(data['preimages'])} preimage points")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    reports = verify_mod.run_suite(args.suite, seed=config.seed)
    if config.format == "json":
        print(json.dumps(verify_mod.reports_to_json(reports), indent=2))
    else:
        print(verify_mod.summarize(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("--config", help="JSON file with CliConfig overrides")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap")
    common.add_argument("--seed", type=int, default=None, help="random seed for suites")

    parser = argparse.ArgumentParser(prog="orbidegree")
    sub = parser.add_subparsers(dest="command", required=True)

    p_strata = sub.add_parser("strata", parents=[common], help="singular stratification")
    p_strata.add_argument("--wps", help="comma-separated weights, e.g. 1,3")
    p_strata.add_argument("--circle", help="'reflection' or 'rotation:k'")
    p_strata.set_defaults(func=_cmd_strata)

    for name, func, needs_value in (
        ("degree", _cmd_degree, False),
        ("preimages", _cmd_preimages, True),
    ):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--q", required=True, help="source weights")
        p.add_argument("--r", required=True, help="target weights")
        p.add_argument("--e", required=True, help="exponents; d is derived")
        p.add_argument(
            "--value",
            required=needs_value,
            help="probed value: per-coordinate '0' or 'a/m', comma separated",
        )
        p.set_defaults(func=func)

    p_verify = sub.add_parser("verify", parents=[common])
    p_verify.add_argument(
        "suite",
        nargs="?",
        default="all",
        help="all | " + " | ".join(sorted(verify_mod.SUITES)),
    )
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = load_config(args)
        return args.func(args, config)
    except NotRegularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_REGULAR
    except (NotEquivariantError, WeightMismatchError, NoHomomorphismError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_EQUIVARIANT
    except EnumerationCapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (ValueError, NotEffectiveError, OSError, OrbidegreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
