"""Command-line entry point: ``blowup-calc <subcommand> ...``.

Exit codes: 0 success, 1 selftest failure, 2 validation failure,
64 usage error (unknown subcommand, missing flag), 65 malformed literal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from pathlib import Path

from . import acceptance
from .chow import set_epsilon
from .cohomology import BundleDescriptor, BundleKind, cohomology_table
from .config import Config, load_config
from .curves import CurveSheafData, parse_curve
from .deformation import thooft_component_dimension, transform_deformation_report
from .errors import StepError, ValidationError
from .instanton import (
    InstantonData,
    definition_checklist,
    monad_chern_check,
    monad_shape,
)
from .sheafdata import ChernData, TwistDescriptor, euler_characteristic, twist
from .transform import ElementaryData, iterate_transforms, thooft_seed, transform_charge

SCHEMA = "blowup-calc/1"

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_INVALID = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65


class UsageError(Exception):
    pass


class MalformedLiteral(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "--twist -2,1" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)*$")

    def error(self, message):
        raise UsageError(message)


# -- literal parsing ---------------------------------------------------------

_INT = re.compile(r"^[+-]?\d+$")


def parse_int(text: str, what: str) -> int:
    text = text.strip()
    if not _INT.match(text):
        raise MalformedLiteral(f"{what}: expected an integer, got {text!r}")
    return int(text)


def parse_pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise MalformedLiteral(f"{what}: expected 'x,y', got {text!r}")
    return parse_int(parts[0], what), parse_int(parts[1], what)


_BUNDLE = re.compile(r"^\s*(O|Omega1)\s*\(([^)]*)\)\s*$")


def parse_bundle(text: str) -> BundleDescriptor:
    m = _BUNDLE.match(text)
    if not m:
        raise MalformedLiteral(f"--bundle: expected O(p,q) or Omega1(p,q), got {text!r}")
    p, q = parse_pair(m.group(2), "--bundle")
    return BundleDescriptor(BundleKind(m.group(1)), TwistDescriptor(p, q))


def parse_seed(text: str) -> InstantonData:
    kind, sep, rest = text.partition(":")
    if not sep or kind not in ("thooft", "charge"):
        raise MalformedLiteral(f"--seed: expected thooft:k,l or charge:k,l, got {text!r}")
    k, l = parse_pair(rest, "--seed")
    return thooft_seed(k, l).instanton if kind == "thooft" else InstantonData.of_charge(k, l)


def parse_curve_literal(text: str):
    try:
        return parse_curve(text)
    except ValueError as exc:
        raise MalformedLiteral(f"curve literal: {exc}") from exc


def _chern_from_args(args) -> ChernData:
    a, b = parse_pair(args.c1, "--c1")
    k, l = parse_pair(args.c2, "--c2")
    return ChernData(parse_int(args.rank, "--rank"), a, b, k, l, parse_int(args.m, "--m"))


# -- output ------------------------------------------------------------------


def _emit_json(obj, cfg: Config, out) -> None:
    if isinstance(obj, dict):
        obj = {"schema": SCHEMA, **obj}
    indent = 2 if cfg.output == "pretty" else None
    out.write(json.dumps(obj, indent=indent) + "\n")


# -- subcommands -------------------------------------------------------------


def cmd_chi(args, cfg, out):
    d = _chern_from_args(args)
    out.write(f"{euler_characteristic(d, TwistDescriptor(*parse_pair(args.twist, '--twist')))}\n")


def cmd_twist(args, cfg, out):
    d = twist(_chern_from_args(args), TwistDescriptor(*parse_pair(args.twist, "--twist")))
    _emit_json(d.as_dict(), cfg, out)


def cmd_cohom(args, cfg, out):
    _emit_json(cohomology_table(parse_bundle(args.bundle)).as_dict(), cfg, out)


def cmd_cohom_grid(args, cfg, out):
    pmin, pmax, qmin, qmax = (
        parse_int(getattr(args, n), f"--{n}") for n in ("pmin", "pmax", "qmin", "qmax")
    )
    if pmin > pmax or qmin > qmax:
        raise ValidationError("empty grid: need pmin <= pmax and qmin <= qmax")
    kind = BundleKind(args.kind)
    cells = list(product(range(pmin, pmax + 1), range(qmin, qmax + 1)))
    with ThreadPoolExecutor() as pool:
        # map preserves input order, so output is deterministic
        tables = list(pool.map(lambda c: cohomology_table(BundleDescriptor(kind, TwistDescriptor(*c))), cells))
    fmt = args.format or ("csv" if cfg.output == "csv" else "json")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "q", "h0", "h1", "h2", "h3"])
        for (p, q), t in zip(cells, tables):
            w.writerow([p, q, *t])
        out.write(buf.getvalue())
    else:
        rows = [{"p": p, "q": q, **t.as_dict()} for (p, q), t in zip(cells, tables)]
        _emit_json({"kind": kind.value, "cells": rows}, cfg, out)


def cmd_monad(args, cfg, out):
    k, l = parse_pair(args.charge, "--charge")
    d = InstantonData.of_charge(k, l, r=parse_int(args.rank, "--rank"), gamma=parse_int(args.gamma, "--gamma"))
    s = monad_shape(d)
    _emit_json(
        {
            "rank": d.rank,
            "charge": [k, l],
            "gamma": d.gamma,
            "multiplicities": s.as_dict(),
            "checks": {"rank": s.rank() == d.rank, "chern_character": monad_chern_check(d, s)},
        },
        cfg,
        out,
    )


def _load_tables(path: str):
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedLiteral(f"{path}: {exc}") from exc
    if not isinstance(raw, dict) or "charge" not in raw or "tables" not in raw:
        raise ValidationError(f'{path}: expected {{"charge": [k, l], "tables": {{"p,q": {{"h0": ..}}}}}}')
    try:
        k, l = (int(x) for x in raw["charge"])
        d = InstantonData.of_charge(k, l, r=int(raw.get("rank", 2)), m=int(raw.get("m", 0)))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise MalformedLiteral(f"{path}: bad charge/rank/m") from exc
    tables = {}
    for key, entry in raw["tables"].items():
        t = TwistDescriptor(*parse_pair(key.strip("() "), f"{path} table key"))
        if not isinstance(entry, dict) or any(not re.fullmatch(r"h[0-3]", h) for h in entry):
            raise ValidationError(f"{path}: table {key!r} must map h0..h3 to integers")
        for h, v in entry.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise MalformedLiteral(f"{path}: {key} {h} is not an integer")
            if v < 0:
                raise ValidationError(f"{path}: {key} {h} is negative")
        tables[t] = entry
    return d, tables


def cmd_check_instanton(args, cfg, out):
    d, tables = _load_tables(args.tables)
    report = definition_checklist(d, tables)
    _emit_json({"charge": list(d.charge), **report.as_dict()}, cfg, out)


def cmd_transform(args, cfg, out):
    seed = parse_seed(args.seed)
    if args.curve is not None:
        step = ElementaryData(CurveSheafData.theta(parse_curve_literal(args.curve)), seed)
        steps = [step]
    else:
        tokens = [s.strip() for s in args.steps.split(",") if s.strip()] if args.steps else []
        steps = [CurveSheafData.theta(parse_curve_literal(t)) for t in tokens]
        for i, s in enumerate(steps, start=1):
            if len(s.profile) != 1:
                raise StepError(i, "each step is a single curve component")
    trajectory = iterate_transforms(seed, steps)
    if args.curve is not None:
        # a single union step must agree with the one-shot transform
        assert trajectory[-1].data == transform_charge(steps[0])
    _emit_json(
        {"trajectory": [s.as_dict(paper_literal=cfg.paper_literal_mode) for s in trajectory]},
        cfg,
        out,
    )


def cmd_deform(args, cfg, out):
    k, l = parse_pair(args.charge, "--charge")
    if args.line not in ("P", "F"):
        raise ValidationError(f"--line must be P or F, got {args.line!r}")
    _emit_json({"charge": [k, l], "line": args.line, **transform_deformation_report(k, l, args.line).as_dict()}, cfg, out)


def cmd_component_dim(args, cfg, out):
    out.write(f"{thooft_component_dimension(*parse_pair(args.charge, '--charge'))}\n")


def cmd_selftest(args, cfg, out):
    results = acceptance.run_all()
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} criteria passed\n")
    return EXIT_SELFTEST if failed else EXIT_OK


# -- parser ------------------------------------------------------------------


def _chern_flags(p):
    p.add_argument("--rank", required=True)
    p.add_argument("--c1", required=True, help="a,b for aH + bE")
    p.add_argument("--c2", required=True, help="k,l for kH2 + lE2")
    p.add_argument("--m", required=True, help="c3 as a multiple of the point class")
    p.add_argument("--twist", required=True, help="p,q")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="blowup-calc", description="Sheaf calculators on the blow-up of P3 at a point.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    p = sub.add_parser("chi", help="Euler characteristic of a twist")
    _chern_flags(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("twist", help="Chern data of a twist")
    _chern_flags(p)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("cohom", help="cohomology table of O(p,q) or Omega1(p,q)")
    p.add_argument("--bundle", required=True)
    p.set_defaults(func=cmd_cohom)

    p = sub.add_parser("cohom-grid", help="cohomology tables over a rectangle of twists")
    for name in ("pmin", "pmax", "qmin", "qmax"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--kind", choices=("O", "Omega1"), default="O")
    p.set_defaults(func=cmd_cohom_grid)

    p = sub.add_parser("monad", help="monad multiplicities for a charge")
    p.add_argument("--rank", default="2")
    p.add_argument("--charge", required=True)
    p.add_argument("--gamma", default="0")
    p.set_defaults(func=cmd_monad)

    p = sub.add_parser("check-instanton", help="evaluate the defining vanishings on given tables")
    p.add_argument("--tables", required=True)
    p.set_defaults(func=cmd_check_instanton)

    p = sub.add_parser("transform", help="iterated elementary transforms of an instanton")
    p.add_argument("--seed", required=True, help="thooft:k,l or charge:k,l")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--steps", help='one component per step, e.g. "P,P,F,X"')
    group.add_argument("--curve", help='a single step along a union, e.g. "P*2,F*1"')
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("deform", help="Ext^1 count at a single-line transform")
    p.add_argument("--charge", required=True)
    p.add_argument("--line", required=True)
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("component-dim", help="dimension of the t'Hooft component")
    p.add_argument("--charge", required=True)
    p.set_defaults(func=cmd_component_dim)

    p = sub.add_parser("selftest", help="run every acceptance criterion")
    p.set_defaults(func=cmd_selftest)
    return parser


def _error(kind: str, message: str, out, **extra) -> None:
    out.write(json.dumps({"schema": SCHEMA, "error": {"type": kind, "message": message, **extra}}) + "\n")


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        cfg = load_config()
    except ValidationError as exc:
        _error("ConfigError", str(exc), out)
        return EXIT_INVALID
    set_epsilon(cfg.epsilon)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _error("UsageError", str(exc), out)
        return EXIT_USAGE
    try:
        code = args.func(args, cfg, out)
    except MalformedLiteral as exc:
        _error("MalformedLiteral", str(exc), out)
        return EXIT_DATAERR
    except StepError as exc:
        _error("StepError", exc.reason, out, step=exc.index)
        return EXIT_INVALID
    except ValidationError as exc:
        _error(type(exc).__name__, str(exc), out)
        return EXIT_INVALID
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
