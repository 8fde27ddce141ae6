"""Command-line entry point.

Exit status: 0 on success, 1 when a checked property fails (``verify``,
``search``, ``cover``), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import fileio
from .bounds import (
    CoverInstance,
    ResourceError,
    lemma_distinct_bound,
    lemma_repeat_bound,
    min_cover_with_repeats,
    min_triple_cover,
)
from .census import census
from .exactnum import ContractError
from .generators import GeneratorSpec
from .search import SearchSpec, lemma_checks

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_input(path: str):
    if path == "-":
        return fileio.loads(sys.stdin.read())
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    return fileio.loads(text)


def _json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# ---------------------------------------------------------------- commands

def cmd_census(args) -> int:
    report = census(_read_input(args.input))
    text = report.to_csv() if args.format == "csv" else _json(report.to_dict())
    _emit(text, args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = GeneratorSpec(args.kind, args.dim, args.r2, args.k, args.shape, args.size)
    _emit(fileio.dumps(spec.build()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _read_input(args.input)
    checks = lemma_checks(cfg, args.lemma)
    failed = any(c["status"] == "fail" for c in checks)
    _emit(_json({"lemma": args.lemma, "ok": not failed, "checks": checks}), args.out)
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_cover(args) -> int:
    n, m = args.n, args.m
    bound = None if args.bound == "auto" else args.bound
    if m is None:
        sol = min_triple_cover(n, bound=bound)
        formula = lemma_distinct_bound(n) if n >= 1 else 0
        relation = "=="
        ok = sol.size == formula
    else:
        sol = min_cover_with_repeats(n, m, bound=bound)
        formula = lemma_repeat_bound(n, m)
        relation = ">="
        ok = sol.size >= formula
    lines = [f"n {n}"]
    if m is not None:
        lines.append(f"m {m}")
    lines.append(f"size {sol.size}")
    lines.append(f"formula {formula} ({'holds' if ok else 'FAILS'}: size {relation} formula)")
    lines.append(f"triples {sol.size}")
    lines.extend(" ".join(map(str, t)) for t in sol.triples)
    if args.emit_certificate:
        lines.append("certificate")
        inst = CoverInstance.distinct_pairs(n, range(1, (m or 0) + 1))
        lines.append(f"cover_verified {'yes' if sol.covers(inst) else 'no'}")
        lines.append(f"no_cover_of_size {sol.size - 1} exhaustive")
        lines.append(f"pruning {sol.bound}")
        lines.append(f"refutation_nodes {sol.certificate_nodes}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_search(args) -> int:
    radius = args.grid_radius
    if radius is None:
        # perturbations default to one grid step, augmentation to a radius-2 box
        radius = args.grid_step if args.mode == "perturb" else Fraction(2)
    spec = SearchSpec(args.mode, args.dim, args.grid_step, radius, args.budget,
                      args.k, args.shape, args.size, args.size_cap)
    result = spec.run(threads=args.threads)
    if args.report:
        Path(args.report).write_text(result.to_csv())
    _emit(_json(result.summary()), args.out)
    return EXIT_VIOLATION if result.violations else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive_int, default=1, help="worker processes (default 1)")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="tricensus", description="Distinct-triangle censuses of exact point sets.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", parents=[common], help="triangle and distance classes of a configuration")
    c.add_argument("--input", required=True, help="configuration JSON ('-' for stdin)")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_census)

    g = sub.add_parser("generate", parents=[common], help="write a canonical configuration")
    g.add_argument("--kind", required=True, choices=GeneratorSpec.KINDS)
    g.add_argument("--dim", type=int)
    g.add_argument("--r2", "--scale2", dest="r2", type=_fraction, default=Fraction(1),
                   help="squared radius (orthoplex) or squared edge (simplex)")
    g.add_argument("--k", type=int, help="distance count for fig1")
    g.add_argument("--shape", choices=("hexagon", "rhombus", "triangle"), default="hexagon")
    g.add_argument("--size", type=_positive_int, default=1)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", parents=[common], help="check lemma inequalities on a configuration")
    v.add_argument("--lemma", default="all",
                   choices=("max_dds", "distinct_bound", "repeat_bound", "elim_dds", "tri_geom", "all"))
    v.add_argument("--input", required=True)
    v.set_defaults(func=cmd_verify)

    cv = sub.add_parser("cover", parents=[common], help="minimum triple cover with proof of minimality")
    cv.add_argument("--n", type=int, required=True)
    cv.add_argument("--m", type=int, help="number of repeated distances")
    cv.add_argument("--emit-certificate", action="store_true")
    cv.add_argument("--bound", choices=("auto", "count", "symbol"), default="auto")
    cv.set_defaults(func=cmd_cover)

    s = sub.add_parser("search", parents=[common], help="grid searches and lattice enumeration")
    s.add_argument("--mode", required=True, choices=("augment", "perturb", "lattice"))
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--grid-step", type=_fraction, default=Fraction(1, 2))
    s.add_argument("--grid-radius", type=_fraction, default=None,
                   help="default 2 for augment, one step for perturb")
    s.add_argument("--budget", type=int, default=0, help="candidate (or node) limit, 0 = none")
    s.add_argument("--report", help="CSV report path")
    s.add_argument("--k", type=int, default=3, help="lattice mode: distance count")
    s.add_argument("--shape", choices=("hexagon", "rhombus", "triangle"), default="hexagon")
    s.add_argument("--size", type=_positive_int, default=2)
    s.add_argument("--size-cap", type=int, default=0)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (fileio.ConfigFormatError, ContractError, ResourceError, _UsageError) as exc:
        print(f"tricensus {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
