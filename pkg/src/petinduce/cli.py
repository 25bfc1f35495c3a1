"""Command-line front end.

Subcommands::

    petinduce induce     --pet FILE [--partition FILE] --halfspace V0,V1,V2 [--orientation column|row]
    petinduce render     PARTITION
    petinduce jr-verify  [--skip-shear] [--desub-samples N] [--expected FILE]
    petinduce sturmian   ALPHA STEPS
    petinduce orbit      --pet FILE [--pet FILE] [--partition FILE] --point X,Y --window 0:8,0:8

Files may be replaced by the built-in objects ``builtin:P0``, ``builtin:R0e1``
and ``builtin:R0e2``.  Every subcommand accepts ``--max-iter``, ``--seed``,
``--out`` and ``--format``.

Exit codes: 0 success, 1 verification mismatch, 2 input or parse error,
3 induction did not terminate, 4 geometry invariant violated,
5 rational alpha given to the Sturmian driver, 6 orbit met a boundary.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import pipeline
from .errors import (GeometryError, NonTerminating, OnBoundary, ParseError, PetInduceError,
                     RationalAlpha, SelfInductionFailed)
from .exactfield import FieldParseError, format_elem, parse
from .induction import DEFAULT_MAX_ITER, induced_partition
from .partition import LabeledPartition, render_svg
from .pet import Pet, code_config

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NONTERMINATING = 3
EXIT_GEOMETRY = 4
EXIT_RATIONAL = 5
EXIT_BOUNDARY = 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# inputs ----------------------------------------------------------------------

def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
                       EXIT_PARSE) from exc


def load_pet(ref: str) -> Pet:
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        gens = dict(zip(("R0e1", "R0e2"), pipeline.r0_generators()))
        if name not in gens:
            raise CliError(f"unknown built-in PET {name!r} (known: R0e1, R0e2)", EXIT_PARSE)
        return gens[name]
    obj = _read_json(ref)
    try:
        return Pet.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise CliError(f"{ref}: malformed PET JSON ({exc})", EXIT_PARSE) from exc


def load_partition(ref: str) -> LabeledPartition:
    if ref == "builtin:P0":
        return pipeline.load_p0()
    if ref.startswith("builtin:"):
        raise CliError(f"unknown built-in partition {ref!r} (known: builtin:P0)", EXIT_PARSE)
    obj = _read_json(ref)
    try:
        return LabeledPartition.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise CliError(f"{ref}: malformed partition JSON ({exc})", EXIT_PARSE) from exc


def parse_vector(text: str) -> tuple:
    return tuple(parse(t.strip()) for t in text.split(","))


def parse_window(text: str) -> tuple:
    out = []
    for part in text.split(","):
        try:
            lo, hi = part.split(":")
            out.append((int(lo), int(hi)))
        except ValueError as exc:
            raise CliError(f"bad window range {part!r}; expected START:STOP", EXIT_PARSE) from exc
    return tuple(out)


# outputs ---------------------------------------------------------------------

def _emit(args, payload: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
            if not payload.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# subcommands -------------------------------------------------------------------

def cmd_induce(args) -> int:
    T = load_pet(args.pet)
    P = load_partition(args.partition) if args.partition else None
    v = parse_vector(args.halfspace)
    res = induced_partition(T, v, P, args.orientation, max_iter=args.max_iter)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(res.partition))
    if args.format == "text":
        lines = [f"{len(res.return_words)} letters, {len(res.partition)} cells, "
                 f"{res.iterations} iterations"]
        for a, w in res.words_by_letter.items():
            lines.append(f"{a} -> {' '.join(map(str, w))}")
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _dumps(res.to_json()))
    return EXIT_OK


def cmd_render(args) -> int:
    P = load_partition(args.partition)
    _emit(args, render_svg(P))
    return EXIT_OK


def cmd_jr_verify(args) -> int:
    expected = pipeline.load_expected(args.expected)
    progress = (lambda s: print(s, file=sys.stderr)) if args.verbose else None
    rec = pipeline.run_chain(max_iter=args.max_iter, progress=progress)
    rep = pipeline.full_report(rec, expected, shear=not args.skip_shear,
                               desub_samples=args.desub_samples, seed=args.seed)
    if args.format == "json":
        _emit(args, _dumps(rep.to_json()))
    else:
        _emit(args, rep.text())
    bad = rep.first_failure()
    if bad is not None:
        print(f"mismatch: {bad.name}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_sturmian(args) -> int:
    alpha = parse(args.alpha)
    try:
        digits, morphisms = pipeline.sturmian_chain(alpha, args.steps, max_iter=args.max_iter)
    except RationalAlpha as exc:
        raise CliError(f"{exc}", EXIT_RATIONAL) from exc
    if args.format == "text":
        lines = [f"alpha = {format_elem(alpha)}", "digits: " + " ".join(map(str, digits))]
        for k, m in enumerate(morphisms):
            lines.append(f"tau_{k}^{digits[k]}: L -> {m['L']}, R -> {m['R']}")
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _dumps({"alpha": format_elem(alpha), "digits": digits, "substitutions": morphisms}))
    return EXIT_OK


def cmd_orbit(args) -> int:
    gens = [load_pet(p) for p in args.pet]
    P = load_partition(args.partition) if args.partition else gens[0].partition
    x = parse_vector(args.point)
    window = parse_window(args.window) if args.window else tuple((0, 8) for _ in gens)
    config = code_config(gens, P, x, window)
    if args.format == "text":
        if len(gens) == 1:
            _emit(args, " ".join(map(str, config)))
        else:
            n1, n2 = len(config), len(config[0]) if config else 0
            rows = [" ".join(str(config[i][j]) for i in range(n1)) for j in reversed(range(n2))]
            _emit(args, "\n".join(rows))
    else:
        _emit(args, _dumps({"point": [format_elem(c) for c in x],
                            "window": [list(w) for w in window], "config": config}))
    return EXIT_OK


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER,
                        help=f"induction iteration cap (default {DEFAULT_MAX_ITER})")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    common.add_argument("--out", help="write the result to this file instead of stdout")
    common.add_argument("--format", choices=["json", "text", "svg"], default=None,
                        help="output format (default depends on the command)")

    parser = argparse.ArgumentParser(prog="petinduce",
                                     description="Exact induction of polytope exchange transformations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("induce", parents=[common], help="induced partition and substitution on a half-space")
    p.add_argument("--pet", required=True, help="PET JSON file or builtin:R0e1 / builtin:R0e2")
    p.add_argument("--partition", help="partition JSON file or builtin:P0 (default: the PET's atoms)")
    p.add_argument("--halfspace", required=True, help="v0,v1,v2 for the window v0 + v1 x + v2 y >= 0")
    p.add_argument("--orientation", choices=["column", "row"], default="column")
    p.add_argument("--svg", help="also draw the induced partition to this SVG file")
    p.set_defaults(func=cmd_induce, default_format="json")

    p = sub.add_parser("render", parents=[common], help="draw a partition as SVG")
    p.add_argument("partition", help="partition JSON file or builtin:P0")
    p.set_defaults(func=cmd_render, default_format="svg")

    p = sub.add_parser("jr-verify", parents=[common], help="run and verify the Jeandel-Rao chain")
    p.add_argument("--skip-shear", action="store_true", help="omit the pointwise shear check")
    p.add_argument("--desub-samples", type=int, default=50,
                   help="sample points per desubstitution check (0 disables them; default 50)")
    p.add_argument("--expected", help="golden tables JSON (default: bundled data)")
    p.add_argument("--verbose", action="store_true", help="log chain progress to stderr")
    p.set_defaults(func=cmd_jr_verify, default_format="text")

    p = sub.add_parser("sturmian", parents=[common], help="continued fraction substitutions of alpha")
    p.add_argument("alpha", help="a positive element of Q(phi), e.g. 186/55+3/55*phi")
    p.add_argument("steps", type=int)
    p.set_defaults(func=cmd_sturmian, default_format="json")

    p = sub.add_parser("orbit", parents=[common], help="coding of an orbit on a window")
    p.add_argument("--pet", action="append", required=True,
                   help="generator PET (give once per direction)")
    p.add_argument("--partition", help="coding partition (default: atoms of the first PET)")
    p.add_argument("--point", required=True, help="coordinates, comma separated")
    p.add_argument("--window", help="START:STOP per direction, comma separated (default 0:8)")
    p.set_defaults(func=cmd_orbit, default_format="text")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    if args.max_iter < 1:
        parser.error("--max-iter must be positive")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FieldParseError, ParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonTerminating as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONTERMINATING
    except OnBoundary as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    except SelfInductionFailed as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (GeometryError, PetInduceError) as exc:
        print(f"geometry error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY


if __name__ == "__main__":
    sys.exit(main())
