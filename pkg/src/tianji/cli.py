"""Command line front end.

Exit codes: 0 success, 2 usage or validation error, 3 enumeration budget
exceeded. Data goes to stdout, diagnostics to stderr. ``TIANJI_FORMAT`` sets
the default ``--format``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from tianji.eulerian import eulerian_row_recurrence
from tianji.exactmath import decimal_string
from tianji.racing import (
    DEFAULT_ENUM_LIMIT,
    EnumerationBudgetExceeded,
    Permutation,
    count_outcomes,
    enumerate_outcomes,
    match_result,
    monte_carlo_outcomes,
    wins_histogram,
)
from tianji.report import FORMATS, figure_series, render_series, render_table

EXIT_USAGE = 2
EXIT_BUDGET = 3
FORMAT_ENV = "TIANJI_FORMAT"
MC_PLACES = 6


class UsageError(Exception):
    pass


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value} (undefined for zero horses)")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV} or text)")
    common.add_argument("--enum-limit", type=positive_int, default=DEFAULT_ENUM_LIMIT,
                        help="largest n that brute-force enumeration may scan")

    parser = argparse.ArgumentParser(prog="tianji", description="Generalized Tian Ji horse racing counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eulerian", parents=[common], help="Eulerian number E(n, m) or row n")
    p.add_argument("n", type=positive_int)
    p.add_argument("m", type=int, nargs="?")

    p = sub.add_parser("table", parents=[common], help="outcome table for n = 1..max-n")
    p.add_argument("--max-n", type=positive_int, default=10)
    p.add_argument("--probabilities", action="store_true", help="include exact fractions in JSON")

    p = sub.add_parser("analyze", parents=[common], help="classify one lineup or summarize all of them")
    p.add_argument("n", type=positive_int)
    p.add_argument("--lineup", help="comma separated sigma(1),...,sigma(n)")

    p = sub.add_parser("enumerate", parents=[common], help="brute-force outcome census")
    p.add_argument("n", type=positive_int)
    p.add_argument("--histogram", action="store_true", help="print counts per number of race wins")
    p.add_argument("--workers", type=positive_int, default=1)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo estimate of outcome probabilities")
    p.add_argument("n", type=positive_int)
    p.add_argument("--samples", type=positive_int, default=100_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("figures", parents=[common], help="trend series for odd or even n")
    p.add_argument("--parity", choices=("odd", "even"), required=True)
    p.add_argument("--max-n", type=int, default=31)
    p.add_argument("--places", type=positive_int, default=4)
    return parser


def _resolve_format(args) -> str:
    if args.format is not None:
        return args.format
    env = os.environ.get(FORMAT_ENV)
    if env is None or env == "":
        return "text"
    if env not in FORMATS:
        raise UsageError(f"{FORMAT_ENV}={env!r} is not a supported format; supported formats: {', '.join(FORMATS)}")
    return env


def _frac(r) -> str:
    return f"{r.numerator}/{r.denominator}"


def _summary_doc(s) -> dict:
    return {
        "n": s.n,
        "total": s.total,
        "winning": s.winning,
        "drawing": s.drawing,
        "losing": s.losing,
        "p_win": _frac(s.p_win),
        "p_draw": _frac(s.p_draw),
        "p_loss": _frac(s.p_loss),
    }


def _emit(fmt: str, doc: dict, text: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        keys = list(doc)
        return ",".join(keys) + "\n" + ",".join(str(doc[k]) for k in keys) + "\n"
    return text


def _summary_text(s) -> str:
    return (
        f"n={s.n} total={s.total}\n"
        f"winning={s.winning}/{s.total} p_win={_frac(s.p_win)}\n"
        f"drawing={s.drawing}/{s.total} p_draw={_frac(s.p_draw)}\n"
        f"losing={s.losing}/{s.total} p_loss={_frac(s.p_loss)}\n"
    )


def cmd_eulerian(args, fmt):
    row = eulerian_row_recurrence(args.n)
    if args.m is not None:
        value = row[args.m]
        return _emit(fmt, {"n": args.n, "m": args.m, "value": value}, f"{value}\n")
    if fmt == "json":
        return json.dumps({"n": args.n, "counts": list(row)}) + "\n"
    if fmt == "csv":
        return "m,count\n" + "".join(f"{m},{c}\n" for m, c in enumerate(row))
    return " ".join(map(str, row)) + "\n"


def cmd_table(args, fmt):
    return render_table(args.max_n, fmt, probabilities=args.probabilities)


def cmd_analyze(args, fmt):
    if args.lineup is None:
        s = count_outcomes(args.n)
        return _emit(fmt, _summary_doc(s), _summary_text(s))
    try:
        p = Permutation.parse(args.lineup)
    except ValueError as exc:
        raise UsageError(str(exc))
    if p.n != args.n:
        raise UsageError(f"lineup {args.lineup} is not a bijection on 1..{args.n}")
    r = match_result(p)
    doc = {"n": p.n, "wins": r.t_wins, "losses": r.t_losses, "result": r.match_class.value}
    return _emit(fmt, doc, f"wins={r.t_wins} losses={r.t_losses} result={r.match_class.value}\n")


def cmd_enumerate(args, fmt):
    if args.histogram:
        hist = wins_histogram(args.n, limit=args.enum_limit, workers=args.workers)
        if fmt == "json":
            return json.dumps({"n": args.n, "histogram": hist}) + "\n"
        if fmt == "csv":
            return "wins,count\n" + "".join(f"{m},{c}\n" for m, c in enumerate(hist))
        return " ".join(map(str, hist)) + "\n"
    s = enumerate_outcomes(args.n, limit=args.enum_limit, workers=args.workers)
    return _emit(fmt, _summary_doc(s), _summary_text(s))


def cmd_simulate(args, fmt):
    mc = monte_carlo_outcomes(args.n, args.samples, args.seed)
    exact = count_outcomes(args.n)
    est = {k: decimal_string(getattr(mc, k), MC_PLACES) for k in ("p_win", "p_draw", "p_loss")}
    ref = {k: decimal_string(getattr(exact, k), MC_PLACES) for k in ("p_win", "p_draw", "p_loss")}
    doc = {
        "n": mc.n, "samples": mc.samples, "seed": mc.seed,
        "wins": mc.wins, "draws": mc.draws, "losses": mc.losses,
        **est,
        **{f"exact_{k}": v for k, v in ref.items()},
    }
    text = (
        f"n={mc.n} samples={mc.samples} seed={mc.seed}\n"
        f"p_win={est['p_win']} wins={mc.wins} exact={ref['p_win']} ({_frac(exact.p_win)})\n"
        f"p_draw={est['p_draw']} draws={mc.draws} exact={ref['p_draw']} ({_frac(exact.p_draw)})\n"
        f"p_loss={est['p_loss']} losses={mc.losses} exact={ref['p_loss']} ({_frac(exact.p_loss)})\n"
    )
    return _emit(fmt, doc, text)


def cmd_figures(args, fmt):
    try:
        series = figure_series(args.parity, args.max_n, args.places)
    except ValueError as exc:
        raise UsageError(str(exc))
    return render_series(series, fmt)


COMMANDS = {
    "eulerian": cmd_eulerian,
    "table": cmd_table,
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "simulate": cmd_simulate,
    "figures": cmd_figures,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        fmt = _resolve_format(args)
        out = COMMANDS[args.command](args, fmt)
    except UsageError as exc:
        print(f"tianji {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationBudgetExceeded as exc:
        print(f"tianji {args.command}: error: {exc}; raise --enum-limit to allow it", file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
