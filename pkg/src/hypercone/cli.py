"""Command-line interface: ``hypercone <subcommand> ...``.

Every subcommand prints JSON on stdout.  Failures print
``{"error": <kind>, "message": <text>}`` on stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions
from .arrangement import chambers, chambers_csv, general_position, zaslavsky_central
from .hyperbolicity import HyperbolicityConfig, Status, count_cones, is_hyperbolic
from .improj import asymptotics
from .improj import raster as rastermod
from .improj.membership import MembershipConfig, Verdict, membership
from .jsonio import dumps, load_forms, load_pencil, to_jsonable
from .polytext import parse_rationals, read_poly_arg

__all__ = ["main", "build_parser"]

EXIT_ERROR = 2


class CliError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _target(args, need_poly: bool = False):
    """The object a subcommand acts on: a pencil, a form set or a polynomial."""
    pencil = getattr(args, "pencil", None)
    forms = getattr(args, "forms", None)
    if pencil and not need_poly:
        return load_pencil(pencil)
    if forms and not need_poly:
        return load_forms(forms)
    if not args.poly:
        raise CliError("a polynomial is required (--poly/-p)")
    return read_poly_arg(args.poly, args.nvars)


def _box(text: str) -> tuple[Fraction, ...]:
    box = parse_rationals(text)
    if len(box) != 4:
        raise CliError("--box needs four numbers a,b,c,d (z1 range a..b, z2 range c..d)")
    return box


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_hyperbolic(args) -> int:
    f = _target(args)
    v = is_hyperbolic(f, parse_rationals(args.dir), HyperbolicityConfig(samples=args.samples, seed=args.seed))
    _emit(dumps(v))
    return 1 if v.status is Status.NOT_HYPERBOLIC else 0


def cmd_cones(args) -> int:
    _emit(dumps(count_cones(_target(args))))
    return 0


def cmd_member(args) -> int:
    cfg = MembershipConfig(seed=args.seed)
    m = membership(_target(args), parse_rationals(args.point), mode=args.mode, cfg=cfg)
    _emit(dumps(m))
    return {Verdict.OUTSIDE: 0, Verdict.INSIDE: 1, Verdict.UNKNOWN: 3}[m.value]


def cmd_raster(args) -> int:
    f = _target(args, need_poly=True)
    grid = rastermod.raster(f, _box(args.box), args.res, mode=args.mode, cfg=MembershipConfig(seed=args.seed))
    if args.out:
        rastermod.write_pgm(grid, args.out)
    rep = rastermod.components(grid)
    text = dumps(rep, counts=grid.counts())
    if args.report:
        Path(args.report).write_text(text + "\n")
    _emit(text)
    return 0


def cmd_limits(args) -> int:
    _emit(dumps(asymptotics.limit_directions(_target(args, need_poly=True))))
    return 0


def cmd_arrange(args) -> int:
    fs = load_forms(args.forms)
    chs = chambers(fs)
    if args.csv:
        Path(args.csv).write_text(chambers_csv(chs, fs.n))
    out = {
        "count": len(chs),
        "zaslavsky": zaslavsky_central(fs.n, fs.d),
        "general_position": general_position(fs),
        "chambers": [{"signs": c.sign_text(), "witness": c.witness} for c in chs],
    }
    _emit(json.dumps(to_jsonable(out), indent=2))
    return 0


def _param(value: str, kind: str):
    if kind == "int":
        return int(value)
    if kind == "rational":
        return Fraction(value)
    if kind in ("matrix", "matrices"):
        return json.loads(value)
    return value


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit(json.dumps(to_jsonable(constructions.catalog_listing()), indent=2))
        return 0
    if not args.name:
        raise CliError("catalog build needs an entry name")
    if args.name not in constructions.CATALOG:
        raise CliError(f"unknown catalog entry {args.name!r}")
    schema = constructions.CATALOG[args.name][1]
    params = {}
    for item in args.params:
        key, sep, value = item.partition("=")
        if not sep or key not in schema:
            raise CliError(f"bad parameter {item!r}; {args.name} takes {', '.join(schema) or 'no parameters'}")
        params[key] = _param(value, schema[key])
    entry = constructions.build(args.name, **params)
    if args.json:
        _emit(dumps(entry))
    else:
        _emit(entry.poly.to_text())
    return 0


def cmd_verify(args) -> int:
    f = _target(args, need_poly=True)
    if args.what == "homogenization":
        rep = asymptotics.verify_homogenization(f, samples=args.samples, seed=args.seed)
        _emit(dumps(rep))
        return 1 if rep.contradictions else 0
    rep = asymptotics.recession_correspondence(f, box=_box(args.box), resolution=args.res)
    _emit(dumps(rep, bijective=rep.bijective))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypercone", description="Hyperbolicity cones and imaginary projections.")
    sub = ap.add_subparsers(dest="command", required=True)

    def poly_args(p, required=True):
        p.add_argument("-p", "--poly", required=required, help="polynomial text or @file")
        p.add_argument("--nvars", type=int, default=None, help="number of variables (default: highest index used)")

    p = sub.add_parser("hyperbolic", help="test hyperbolicity in a direction")
    poly_args(p, required=False)
    p.add_argument("--pencil", help="@file with a JSON list of Hermitian matrices")
    p.add_argument("--forms", help="@file with linear forms")
    p.add_argument("--dir", required=True, help="direction e as comma-separated rationals")
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_hyperbolic)

    p = sub.add_parser("cones", help="count hyperbolicity cones")
    poly_args(p, required=False)
    p.add_argument("--pencil", help="@file with a JSON list of Hermitian matrices")
    p.add_argument("--forms", help="@file with linear forms")
    p.set_defaults(func=cmd_cones)

    p = sub.add_parser("member", help="decide membership in the imaginary projection")
    poly_args(p, required=False)
    p.add_argument("--pencil", help="@file with a JSON list of Hermitian matrices")
    p.add_argument("--forms", help="@file with linear forms (diagonal determinant)")
    p.add_argument("--point", required=True, help="comma-separated rationals")
    p.add_argument("--mode", choices=["exact", "numeric"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("raster", help="rasterize a bivariate imaginary projection")
    poly_args(p)
    p.add_argument("--box", required=True, help="a,b,c,d")
    p.add_argument("--res", type=int, default=256)
    p.add_argument("--out", help="PGM output path")
    p.add_argument("--report", help="JSON component report path")
    p.add_argument("--mode", choices=["exact", "numeric"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_raster)

    p = sub.add_parser("limits", help="limit directions of a bivariate imaginary projection")
    poly_args(p)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("arrange", help="chambers of a central hyperplane arrangement")
    p.add_argument("--forms", required=True, help="@file or inline JSON list of forms")
    p.add_argument("--csv", help="write chambers as CSV")
    p.set_defaults(func=cmd_arrange)

    p = sub.add_parser("catalog", help="list or build named constructions")
    p.add_argument("action", choices=["list", "build"])
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("--json", action="store_true", help="print the full entry instead of the polynomial")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="check the asymptotic correspondences")
    p.add_argument("what", choices=["homogenization", "recession"])
    poly_args(p)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", default="-4,4,-4,4")
    p.add_argument("--res", type=int, default=512)
    p.set_defaults(func=cmd_verify)
    return ap


_NUMERIC_FLAGS = ("--box", "--point", "--dir")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--box -6,6,...`` as ``--box=-6,6,...`` so argparse does not read a flag."""
    out: list[str] = []
    k = 0
    while k < len(argv):
        if argv[k] in _NUMERIC_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    try:
        return args.func(args)
    except Exception as exc:  # reported uniformly as JSON
        kind = "usage" if isinstance(exc, CliError) else type(exc).__name__
        sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
