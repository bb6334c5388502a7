"""Command-line front end.

Subcommands: curve (turtle walk as SVG/JSON), boundary (traced outline as
word/SVG/JSON), count (exact sequence values, table or b-file), enumerate
(strings, arrays, aligned listing), verify (self-check suite), gf
(generating functions), report (matplotlib figures plus a CSV table).

Exit codes: 0 success, 1 failed verification, 2 usage or cap error,
3 internal invariant violation (two independent computations disagreed;
must never happen).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import counting, enumeration, polyomino, render
from .curve import dragon_path
from .lsystem import (
    BOUNDARY,
    COUNT_ORDER,
    DRAGON,
    LEFT_BOUNDARY,
    RIGHT_BOUNDARY,
    iterate,
    letter_counts,
)

WORD_CAP_DEFAULT = 26


@dataclass(frozen=True)
class BFile:
    """OEIS-style b-file body: consecutive 'index value' lines."""

    sequence_id: str
    offset: int
    values: tuple

    def lines(self) -> str:
        return "".join(
            f"{self.offset + i} {v}\n" for i, v in enumerate(self.values)
        )


# name -> (display offset, OEIS id or local tag, single matrix value,
#          recurrence, stepping prefix)
def _seq_left_value(n):
    return counting.left_weighted_count(n + 1)


def _seq_left_prefix(count):
    return counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.E_R, counting.LEFT_WEIGHTS,
        count, pre_steps=1)


def _seq_right_prefix(count):
    return counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.E_L, counting.ONES5, count)


def _seq_full_prefix(count):
    return counting.sequence_prefix(
        counting.BOUNDARY_MATRIX, counting.FULL_SEED, counting.ONES5, count)


def _seq_binary_prefix(count):
    return counting.sequence_prefix(
        counting.STRING_TYPE_MATRIX, counting.STRING_SEED, counting.ONES5, count)


def _seq_arrays_prefix(count):
    return counting.sequence_prefix(
        counting.ARRAY_TYPE_MATRIX, counting.ARRAY_SEED, counting.ONES7, count)


SEQUENCES = {
    "left": (0, "A227036", _seq_left_value, "LEFT_REC", _seq_left_prefix),
    "right": (0, "A203175", counting.right_count, "RIGHT_REC", _seq_right_prefix),
    "full": (0, "full", counting.full_count, "FULL_REC", _seq_full_prefix),
    "binary": (1, "binary", enumeration.count_S_matrix, "STRING_REC",
               _seq_binary_prefix),
    "arrays": (1, "arrays", lambda n: enumeration.count_A(n, "N"), "ARRAY_REC",
               _seq_arrays_prefix),
}


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _check_n(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("--n must be nonnegative")
    if n > cap:
        raise ValueError(f"--n {n} exceeds the word cap {cap}; raise --cap to force")


# --------------------------------------------------------------------------
# subcommands

def cmd_curve(args) -> int:
    _check_n(args.n, args.cap)
    path = dragon_path(iterate(DRAGON, args.n))
    if args.format == "svg":
        _emit(render.curve_svg(path, args.scale), args.out)
    else:
        doc = {"n": args.n, "vertices": [list(v) for v in path]}
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    return 0


def cmd_boundary(args) -> int:
    _check_n(args.n, args.cap)
    n = args.n
    path = dragon_path(iterate(DRAGON, n))
    cells = polyomino.cells_from_curve(path)
    cycle = polyomino.trace_boundary(cells)
    left, right = polyomino.split_boundary(cycle, path[-1])
    full = polyomino.word_from_cycle(cycle)

    # the rewriting systems must reproduce the traced words exactly
    expected = {
        "full": iterate(BOUNDARY, n),
        "left": iterate(LEFT_BOUNDARY, n),
        # the start level has no rewrite yet; its geometric right half is "r"
        "right": iterate(RIGHT_BOUNDARY, n) if n >= 1 else "r",
    }
    got = {"full": full.word, "left": left.word, "right": right.word}
    for side, word in expected.items():
        if got[side] != word:
            print(
                f"internal invariant violated: traced {side} boundary "
                f"disagrees with the rewriting system at n={n}",
                file=sys.stderr,
            )
            return 3

    if args.format == "word":
        _emit(got[args.side] + "\n", args.out)
    elif args.format == "svg":
        _emit(
            render.boundary_svg(path, cycle, len(left), args.side, args.scale),
            args.out,
        )
    else:
        doc = {
            "n": n,
            "cells": sorted([list(c) for c in cells]),
            "cycle": [list(v) for v in cycle],
            "count_order": COUNT_ORDER,
            "letter_counts": list(letter_counts(full.word, COUNT_ORDER)),
        }
        sections = {
            "full": ("full",),
            "left": ("left",),
            "right": ("right",),
        }[args.side] if args.side != "full" else ("full", "left", "right")
        words = {"full": full, "left": left, "right": right}
        for name in sections:
            doc[name] = {"word": words[name].word, "parities": words[name].parities}
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    return 0


def cmd_count(args) -> int:
    offset, _, value_fn, rec_name, prefix_fn = SEQUENCES[args.sequence]
    rec = getattr(counting, rec_name)
    n = args.n
    if n < offset:
        raise ValueError(f"--n must be at least {offset} for {args.sequence}")

    if args.table or args.bfile:
        count = n - offset + 1
        via_matrix = prefix_fn(count)
        via_rec = rec.prefix(count)
        if via_matrix != via_rec:
            print(
                "internal invariant violated: matrix and recurrence tables "
                f"disagree for {args.sequence}",
                file=sys.stderr,
            )
            return 3
        display = offset if args.offset is None else args.offset
        if args.bfile:
            body = BFile(args.sequence, display, tuple(via_matrix)).lines()
        else:
            body = "".join(
                f"{display + i}\t{v}\n" for i, v in enumerate(via_matrix)
            )
        _emit(body, args.out)
        return 0

    via_matrix = value_fn(n)
    via_rec = rec.value(n)
    if args.sequence == "arrays":
        # third route: the grouped 3x3 matrix
        if enumeration.count_A(n, "P") != via_matrix:
            print(
                "internal invariant violated: grouped matrix disagrees",
                file=sys.stderr,
            )
            return 3
    if via_matrix != via_rec:
        print(
            f"internal invariant violated: matrix gives {via_matrix}, "
            f"recurrence gives {via_rec}",
            file=sys.stderr,
        )
        return 3
    _emit(f"{via_matrix}\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    n = args.n
    if args.sequence == "binary":
        members = enumeration.enumerate_S(n)
        typed = [(s, enumeration.classify_bin(s)) for s in members]
        if args.format == "text":
            body = "".join(f"{s} {t}\n" for s, t in typed)
        else:
            doc = {"n": n, "strings": [{"string": s, "type": t} for s, t in typed]}
            body = json.dumps(doc, sort_keys=True) + "\n"
    elif args.sequence == "arrays":
        members = enumeration.enumerate_A(n)
        typed = [(rows, enumeration.classify_row(rows)) for rows in members]
        if args.format == "text":
            body = "".join(
                " ".join(f"{p}{q}" for p, q in rows) + f" {t}\n"
                for rows, t in typed
            )
        else:
            doc = {
                "n": n,
                "arrays": [
                    {"rows": [list(r) for r in rows], "type": t}
                    for rows, t in typed
                ],
            }
            body = json.dumps(doc, sort_keys=True) + "\n"
    else:  # aligned
        triples = enumeration.aligned_listing(n)
        word = iterate(RIGHT_BOUNDARY, n)
        doc = {
            "n": n,
            "triples": [
                {
                    "element": i,
                    "symbol": word[i],
                    "string": s,
                    "array": [list(r) for r in rows],
                }
                for i, s, rows in triples
            ],
        }
        body = json.dumps(doc, sort_keys=True) + "\n"
    _emit(body, args.out)
    return 0


def cmd_verify(args) -> int:
    from .checks import run_checks

    results = run_checks(args.level)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        doc = {
            "level": args.level,
            "passed": len(results) - len(failed),
            "failed": len(failed),
            "checks": [
                {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
            ],
        }
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    else:
        lines = []
        for r in results:
            lines.append(
                f"PASS {r.name}" if r.ok else f"FAIL {r.name}: {r.detail}"
            )
        lines.append(
            f"{len(results) - len(failed)} passed, {len(failed)} failed "
            f"(level={args.level})"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_gf(args) -> int:
    if args.sequence == "left":
        gf = counting.LEFT_GF
        factors = counting.LEFT_DEN_FACTORS
        rec_line = "a(n) = 2a(n-1) - a(n-2) + 2a(n-3) - 2a(n-4)  (n >= 4; starts 2, 4, 8, 16)"
    else:
        gf = counting.RIGHT_GF
        factors = counting.RIGHT_DEN_FACTORS
        rec_line = "a(n) = a(n-1) + 2a(n-3)  (n >= 3; starts 1, 1, 2)"
    den = "".join(f"({counting.poly_str(f)})" for f in factors)
    coeffs = gf.taylor(args.terms)
    lines = [
        f"sequence: {args.sequence} boundary",
        f"rational form: ({counting.poly_str(gf.numerator)}) / {den}",
        f"numerator coefficients: {list(gf.numerator)}",
        f"denominator coefficients: {list(gf.denominator)}",
        f"recurrence: {rec_line}",
        f"growth root: {counting.growth_root():.9f}  (real root of x^3 - x^2 - 2)",
        "coefficients 0..{}: {}".format(args.terms, " ".join(map(str, coeffs))),
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_report(args) -> int:
    from .report import write_report

    written = write_report(args.out_dir, args.n_geometry, args.n_sequences)
    _emit("".join(f"{p}\n" for p in written), None)
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dragonbound",
        description="Dragon curve, its polyomino boundary, and exact "
                    "boundary-length sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("curve", help="turtle walk of a curve generation")
    c.add_argument("--n", type=int, required=True, help="generation index")
    c.add_argument("--format", choices=("svg", "json"), default="svg")
    c.add_argument("--scale", type=int, default=10, help="pixels per lattice unit")
    c.add_argument("--cap", type=int, default=WORD_CAP_DEFAULT,
                   help="largest n whose word may be materialized")
    c.add_argument("--out", help="write to this file instead of stdout")
    c.set_defaults(func=cmd_curve)

    b = sub.add_parser("boundary", help="traced outline of the cell polyomino")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--side", choices=("left", "right", "full"), default="full")
    b.add_argument("--format", choices=("word", "svg", "json"), default="word")
    b.add_argument("--scale", type=int, default=10)
    b.add_argument("--cap", type=int, default=WORD_CAP_DEFAULT)
    b.add_argument("--out")
    b.set_defaults(func=cmd_boundary)

    k = sub.add_parser("count", help="exact sequence values (matrix and "
                                     "recurrence paths, compared)")
    k.add_argument("--sequence", choices=tuple(SEQUENCES), required=True)
    k.add_argument("--n", type=int, required=True, help="index of the value "
                   "(or last index with --table/--bfile)")
    group = k.add_mutually_exclusive_group()
    group.add_argument("--table", action="store_true",
                       help="print 'index<TAB>value' lines up to n")
    group.add_argument("--bfile", action="store_true",
                       help="print OEIS b-file lines up to n")
    k.add_argument("--offset", type=int, default=None,
                   help="first printed index (default: the sequence's own)")
    k.add_argument("--out")
    k.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="explicit members of the counted families")
    e.add_argument("--sequence", choices=("binary", "arrays", "aligned"),
                   required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run the named self-checks")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gf", help="generating function of a boundary sequence")
    g.add_argument("--sequence", choices=("left", "right"), required=True)
    g.add_argument("--terms", type=int, default=12,
                   help="expand through x^terms")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gf)

    r = sub.add_parser("report", help="figures and a CSV table in a directory")
    r.add_argument("--out-dir", required=True)
    r.add_argument("--n-geometry", type=int, default=8,
                   help="largest generation drawn in the figure panels")
    r.add_argument("--n-sequences", type=int, default=30,
                   help="last index tabulated in the CSV and growth plot")
    r.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    # Counts grow like 1.69^n, so printing large indices exceeds the
    # interpreter's default int-to-str digit limit.  Lift it for the CLI.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
