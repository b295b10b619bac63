"""Command-line driver.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, TextIO

from .constructions import (
    COUNT_MAX_N,
    construct_pair,
    extremal_size,
    pair_counts,
    verify_pair,
)
from .cube_core import DENSE_MAX_N, elements, format_hex, format_vertex
from .families import Family
from .oracles import (
    EXHAUSTIVE_MAX_N,
    SAMPLED_MAX_N,
    SAMPLED_MIN_N,
    SEGMENT_MAX_N,
    TERMINAL_MAX_N,
    check_isoperimetry_exhaustive,
    check_isoperimetry_sampled,
    check_terminal_property,
    max_balanced_exhaustive,
    max_balanced_segment,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Output:
    """Writes to stdout and, optionally, the same bytes to a file."""

    def __init__(self, path: str | None):
        self._streams: list[TextIO] = [sys.stdout]
        self._file = None
        if path:
            self._file = open(path, "w", encoding="utf-8", newline="\n")
            self._streams.append(self._file)

    def write(self, text: str) -> None:
        for s in self._streams:
            s.write(text)

    def line(self, text: str = "") -> None:
        self.write(text + "\n")

    def close(self) -> None:
        if self._file:
            self._file.close()


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_range(text: str, lo: int, hi: int) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            first, last = int(a), int(b)
        else:
            first = last = int(text)
    except ValueError:
        raise UsageError(f"--n expects N or A..B, got {text!r}") from None
    if first > last or first < lo or last > hi:
        raise UsageError(f"--n {text}: valid range is {lo}..{hi}")
    return list(range(first, last + 1))


def _need(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise UsageError(f"{what} requires {lo} <= n <= {hi}, got n={n}")


# -- construct ----------------------------------------------------------------

def _json_items(fam: Family, form: str, out: Output) -> None:
    out.write("[")
    first = True
    for chunk in fam.iter_layers():
        if form == "hex":
            items = [f'"{format_hex(x)}"' for x in chunk.tolist()]
        else:
            items = ["[" + ",".join(map(str, elements(x))) + "]" for x in chunk.tolist()]
        if items:
            out.write(("" if first else ",") + ",".join(items))
            first = False
    out.write("]")


def cmd_construct(args, out: Output) -> int:
    _need(args.n, 1, DENSE_MAX_N, "construct")
    pair = construct_pair(args.n)
    if args.format == "text":
        out.line(f"# n={pair.n} case={pair.case} k={pair.k} size={pair.size} "
                 f"|A|={len(pair.A)} |B|={len(pair.B)}")
        for label, fam in (("A", pair.A), ("B", pair.B)):
            for chunk in fam.iter_layers():
                out.write("".join(f"{label} {format_vertex(x)}\n" for x in chunk.tolist()))
        return EXIT_OK
    form = "hex" if args.format == "hex" else "sets"
    out.write(f'{{"n":{pair.n},"case":{pair.case},"A":')
    _json_items(pair.A, form, out)
    out.write(',"B":')
    _json_items(pair.B, form, out)
    out.line(f',"size":{pair.size}}}')
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def _emit_report(report, fmt: str, out: Output) -> None:
    if fmt == "json":
        out.line(_dumps(report.to_record()))
    else:
        out.line(report.to_text())


def cmd_verify(args, out: Output) -> int:
    ns = _parse_range(args.n, 1, DENSE_MAX_N)
    ok = True
    for n in ns:
        report = verify_pair(n)
        ok &= report.passed
        _emit_report(report, args.format, out)
    return EXIT_OK if ok else EXIT_FAIL


# -- oracle -------------------------------------------------------------------

def cmd_oracle(args, out: Output) -> int:
    n = args.n
    methods = ["exhaustive", "segment"] if args.method == "both" else [args.method]
    if "exhaustive" in methods:
        _need(n, 1, EXHAUSTIVE_MAX_N, "the exhaustive oracle")
    if "segment" in methods:
        _need(n, 1, SEGMENT_MAX_N, "the segment oracle")
    formula = extremal_size(n)
    ok = True
    for method in methods:
        res = max_balanced_exhaustive(n) if method == "exhaustive" else max_balanced_segment(n)
        match = res.optimum == formula
        ok &= match
        if args.format == "json":
            rec = {"n": n, "method": method, "optimum": res.optimum, "formula": formula,
                   "match": match, "notes": res.notes}
            if args.witness:
                rec["witness"] = res.witness.to_record()["sets"]
            out.line(_dumps(rec))
        else:
            out.line(f"n={n} method={method} optimum={res.optimum} formula={formula} "
                     f"{'match' if match else 'MISMATCH'}")
            for note in res.notes:
                out.line(f"  note: {note}")
            if args.witness:
                out.line("  witness: " + " ".join(format_vertex(x) for x in res.witness))
    return EXIT_OK if ok else EXIT_FAIL


# -- isocheck -----------------------------------------------------------------

def _parse_m(text: str | None) -> int | None:
    if text is None or text == "all":
        return None
    try:
        m = int(text)
    except ValueError:
        raise UsageError(f"--m expects an integer or 'all', got {text!r}") from None
    if m < 0:
        raise UsageError("--m must be nonnegative")
    return m


def cmd_isocheck(args, out: Output) -> int:
    n = args.n
    m = _parse_m(args.m)
    half = 1 << (n - 1) if n >= 1 else 0
    if m is not None and m > half:
        raise UsageError(f"--m must be at most 2^(n-1) = {half}")
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    reports = []
    if args.terminal:
        _need(n, 1, TERMINAL_MAX_N, "isocheck --terminal")
        reports.append(lambda: check_terminal_property(n))
    elif args.samples is not None:
        if args.seed is None:
            raise UsageError("--samples requires --seed")
        if m is None:
            raise UsageError("the sampled check needs an integer --m")
        if args.samples < 1:
            raise UsageError("--samples must be positive")
        _need(n, SAMPLED_MIN_N, SAMPLED_MAX_N, "isocheck --samples")
        reports.append(lambda: check_isoperimetry_sampled(n, m, args.samples, args.seed, jobs))
    else:
        if args.seed is not None:
            raise UsageError("--seed only applies together with --samples")
        _need(n, 1, EXHAUSTIVE_MAX_N, "exhaustive isocheck (use --samples for larger n)")
        ms = range(half + 1) if m is None else [m]
        reports += [lambda mm=mm: check_isoperimetry_exhaustive(n, mm) for mm in ms]
    ok = True
    for make in reports:
        report = make()
        ok &= report.passed
        _emit_report(report, args.format, out)
    return EXIT_OK if ok else EXIT_FAIL


# -- table --------------------------------------------------------------------

def cmd_table(args, out: Output) -> int:
    _need(args.max_n, 1, COUNT_MAX_N, "table")
    if args.format == "text":
        out.line("n\tcase\tsize\t|A|")
    ok = True
    for n in range(1, args.max_n + 1):
        a, b = pair_counts(n)
        size = extremal_size(n)
        ok &= a == b and a + b == size
        if args.format == "json":
            out.line(_dumps({"n": n, "case": n % 4, "size": size, "A": a, "B": b}))
        else:
            out.line(f"{n}\t{n % 4}\t{size}\t{a}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="balancedcube",
        description="Largest balanced independent sets in the hypercube Q_n.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", metavar="FILE", help="also write output to FILE")

    sp = sub.add_parser("construct", help="print the extremal pair (A, B) for n")
    sp.add_argument("--n", type=int, required=True)
    common(sp, ("text", "json", "hex"))
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check the constructed pair for n or a range A..B")
    sp.add_argument("--n", required=True)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="search for the optimum and compare with the formula")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("exhaustive", "segment", "both"), default="segment")
    sp.add_argument("--witness", action="store_true", help="print the witness set")
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("isocheck", help="check the isoperimetric theorem")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", default=None, help="segment length, or 'all' (exhaustive only)")
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--terminal", action="store_true",
                    help="check the terminal-segment property for every m")
    sp.add_argument("--jobs", type=int, default=1, help="worker threads; 0 means all cores")
    common(sp)
    sp.set_defaults(func=cmd_isocheck)

    sp = sub.add_parser("table", help="tabulate sizes from binomial sums")
    sp.add_argument("--max-n", type=int, default=COUNT_MAX_N)
    common(sp)
    sp.set_defaults(func=cmd_table)
    return p


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.out)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"balancedcube {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
