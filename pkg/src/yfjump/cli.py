"""Command-line front end: ``yfjump <subcommand> ...``.

Words are digit strings with ``e`` for the empty word; rationals are
``num/den``.  Exit status is 0 on success and 2 on invalid input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Sequence

from .counting import ENGINES, chains_saturated
from .fcoeffs import f_gen
from .measures import (
    DEFAULT_MAX_LEN,
    DEFAULT_TOL,
    MeasureParams,
    convergence_table,
    level_table,
    mu,
)
from .poly import format_poly, q_gen
from .sampler import TruncationError, sample_path
from .words import (
    EMPTY_TEXT,
    covers_down,
    covers_up,
    format_word,
    leq,
    parse_word,
    rank,
    words_of_rank,
)


def _word(text: str) -> str:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if not values or min(values) < 0:
        raise argparse.ArgumentTypeError(f"need nonnegative integers: {text!r}")
    return values


def render_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} {float(x):.12g}"


def _sorted_words(words) -> list[str]:
    return sorted(words, key=lambda u: (rank(u), u))


def _params(args) -> MeasureParams:
    return MeasureParams(args.K, args.tail, args.p)


def cmd_count(args, out) -> None:
    print(ENGINES[args.method].count(args.from_, args.to, args.steps), file=out)


def cmd_chains(args, out) -> None:
    print(chains_saturated(args.from_, args.to), file=out)


def cmd_covers(args, out) -> None:
    found = covers_down(args.word) if args.down else covers_up(args.word)
    words = [format_word(u) for u in _sorted_words(found)]
    if args.format == "json":
        print(json.dumps(words), file=out)
    else:
        print(" ".join(words), file=out)


def cmd_order(args, out) -> None:
    print("true" if leq(args.left, args.right) else "false", file=out)


def cmd_fcoef(args, out) -> None:
    print(json.dumps(list(f_gen(args.from_, args.to))), file=out)


def cmd_qpoly(args, out) -> None:
    q = q_gen(args.from_, args.to)
    print(format_poly(q), file=out)
    print(json.dumps(list(q.coeffs)), file=out)
    if args.eval is not None:
        print(render_rational(q(args.eval)), file=out)


def cmd_measure(args, out) -> None:
    print(render_rational(mu(_params(args), args.word, args.level)), file=out)


def cmd_levelmass(args, out) -> None:
    table = level_table(_params(args), args.level, args.max_len)
    total = sum(table.values(), Fraction(0))
    if args.format == "json":
        doc = {
            "level": args.level,
            "max_len": args.max_len,
            "total": f"{total.numerator}/{total.denominator}",
            "masses": {format_word(w): f"{x.numerator}/{x.denominator}" for w, x in table.items()},
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(render_rational(total), file=out)


def cmd_converge(args, out) -> None:
    rows = convergence_table(_params(args), args.word, args.level, args.m, prefix=args.prefix)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["m", "n_m", "value_num", "value_den", "abs_error_float"])
    for r in rows:
        writer.writerow([r.m, r.n_m, r.value.numerator, r.value.denominator, f"{float(r.error):.12g}"])


def cmd_sample(args, out) -> None:
    path = sample_path(_params(args), args.levels, args.seed, args.tol, args.max_len)
    print(" ".join(format_word(u) for u in path), file=out)


def cmd_graph(args, out) -> None:
    if args.format != "dot":
        raise ValueError("graph export supports only --format dot")
    words = [w for r in range(args.max_rank + 1) for w in words_of_rank(r, args.K)]
    present = set(words)
    lines = ["digraph YF {", "  rankdir=BT;"]
    for r in range(args.max_rank + 1):
        level = [f'"{format_word(w)}"' for w in words if rank(w) == r]
        lines.append(f"  {{ rank=same; {' '.join(level)}; }}")
    for w in words:
        for u in _sorted_words(covers_up(w)):
            if u in present:
                lines.append(f'  "{format_word(w)}" -> "{format_word(u)}";')
    lines.append("}")
    print("\n".join(lines), file=out)


def _measure_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tail", type=_word, required=True, help='tail word, "e" for empty')
    p.add_argument("--p", type=_rational, required=True, help="parameter in (0, 1] as num/den")
    p.add_argument("--K", type=_nonneg, required=True, help="maximal number of twos")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yfjump",
        description="Path counts and central measures on the Young-Fibonacci jump graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="jump-graph paths D(w, v, n)")
    p.add_argument("--from", dest="from_", type=_word, required=True)
    p.add_argument("--to", type=_word, required=True)
    p.add_argument("--steps", type=_nonneg, required=True)
    p.add_argument("--method", choices=sorted(ENGINES), default="closed")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("chains", help="saturated chains in the Hasse diagram")
    p.add_argument("--from", dest="from_", type=_word, required=True)
    p.add_argument("--to", type=_word, required=True)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("covers", help="upper (or lower) covers of a word")
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--down", action="store_true")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("order", help="whether LEFT <= RIGHT")
    p.add_argument("--left", type=_word, required=True)
    p.add_argument("--right", type=_word, required=True)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("fcoef", help="binomial-expansion coefficients F(w, v, .)")
    p.add_argument("--from", dest="from_", type=_word, default=EMPTY_TEXT)
    p.add_argument("--to", type=_word, required=True)
    p.set_defaults(func=cmd_fcoef)

    p = sub.add_parser("qpoly", help="boundary polynomial Q_{w,v}")
    p.add_argument("--from", dest="from_", type=_word, default=EMPTY_TEXT)
    p.add_argument("--to", type=_word, required=True)
    p.add_argument("--eval", type=_rational, default=None, help="evaluate exactly at p = a/b")
    p.set_defaults(func=cmd_qpoly)

    p = sub.add_parser("measure", help="exact measure of a vertex (w, l)")
    _measure_flags(p)
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--level", type=_nonneg, required=True)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("levelmass", help="truncated total measure of one level")
    _measure_flags(p)
    p.add_argument("--level", type=_nonneg, required=True)
    p.add_argument("--max-len", type=_nonneg, default=DEFAULT_MAX_LEN)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_levelmass)

    p = sub.add_parser("converge", help="prelimit values along a vertex schedule (CSV)")
    _measure_flags(p)
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--level", type=_nonneg, required=True)
    p.add_argument("--m", type=_int_list, required=True, help='comma-separated, e.g. "10,50,200"')
    p.add_argument("--prefix", type=_word, default=EMPTY_TEXT, help="fixed word in front of the ones run")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("sample", help="one random path from the measure")
    _measure_flags(p)
    p.add_argument("--levels", type=_nonneg, required=True)
    p.add_argument("--seed", type=_nonneg, required=True)
    p.add_argument("--tol", type=_rational, default=DEFAULT_TOL)
    p.add_argument("--max-len", type=_nonneg, default=DEFAULT_MAX_LEN)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("graph", help="Hasse diagram as Graphviz DOT")
    p.add_argument("--max-rank", type=_nonneg, required=True)
    p.add_argument("--K", type=_nonneg, default=None)
    p.add_argument("--format", default="dot")
    p.set_defaults(func=cmd_graph)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (ValueError, TruncationError) as exc:
        print(f"yfjump {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
