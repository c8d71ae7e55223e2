"""Outcome table and trend series, rendered as text, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from tianji.exactmath import decimal_string, percent_half_up
from tianji.racing import OutcomeSummary, count_outcomes

FORMATS = ("text", "csv", "json")
TABLE_COLUMNS = (
    "n",
    "total",
    "winning",
    "winning_pct",
    "drawing",
    "drawing_pct",
    "losing",
    "losing_pct",
)
FIGURE_COLUMNS = ("n", "p_win", "p_draw", "p_loss")


class UnknownFormat(ValueError):
    def __init__(self, fmt: str):
        super().__init__(f"unknown format {fmt!r}; supported formats: {', '.join(FORMATS)}")


@dataclass(frozen=True)
class TableRow:
    n: int
    total: int
    winning: int
    winning_pct: int
    drawing: int
    drawing_pct: int
    losing: int
    losing_pct: int

    @classmethod
    def from_summary(cls, s: OutcomeSummary) -> "TableRow":
        return cls(
            n=s.n,
            total=s.total,
            winning=s.winning,
            winning_pct=percent_half_up(s.p_win),
            drawing=s.drawing,
            drawing_pct=percent_half_up(s.p_draw),
            losing=s.losing,
            losing_pct=percent_half_up(s.p_loss),
        )


@dataclass(frozen=True)
class TrendPoint:
    n: int
    p_win: Fraction
    p_draw: Fraction
    p_loss: Fraction
    places: int

    def decimals(self) -> tuple[str, str, str]:
        return tuple(decimal_string(p, self.places) for p in (self.p_win, self.p_draw, self.p_loss))


@dataclass(frozen=True)
class TrendSeries:
    parity: str
    points: tuple[TrendPoint, ...]

    def point(self, n: int) -> TrendPoint:
        for p in self.points:
            if p.n == n:
                return p
        raise KeyError(n)


def _fraction_json(r: Fraction) -> dict:
    return {"num": str(r.numerator), "den": str(r.denominator)}


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise UnknownFormat(fmt)


def table_rows(max_n: int) -> list[TableRow]:
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    return [TableRow.from_summary(count_outcomes(n)) for n in range(1, max_n + 1)]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_table(max_n: int, format: str = "text", probabilities: bool = False) -> str:
    """Outcome table for n = 1..max_n.

    ``probabilities`` adds exact ``p_win``/``p_draw``/``p_loss`` objects to
    the JSON form; other formats ignore it.
    """
    _check_format(format)
    rows = table_rows(max_n)
    if format == "csv":
        return _csv(TABLE_COLUMNS, ([getattr(r, c) for c in TABLE_COLUMNS] for r in rows))
    if format == "json":
        docs = []
        for r in rows:
            doc = asdict(r)
            if probabilities:
                s = count_outcomes(r.n)
                doc["p_win"] = _fraction_json(s.p_win)
                doc["p_draw"] = _fraction_json(s.p_draw)
                doc["p_loss"] = _fraction_json(s.p_loss)
            docs.append(doc)
        return json.dumps(docs, indent=2) + "\n"

    cells = [
        (str(r.n), str(r.total), f"{r.winning} ({r.winning_pct}%)",
         f"{r.drawing} ({r.drawing_pct}%)", f"{r.losing} ({r.losing_pct}%)")
        for r in rows
    ]
    head = ("N", "Total", "Winning", "Drawing", "Losing")
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(head)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(head, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def figure_series(parity: str, max_n: int, decimal_places: int = 4) -> TrendSeries:
    """Outcome probabilities for every n of one parity up to ``max_n``."""
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    if decimal_places < 1:
        raise ValueError(f"decimal_places must be positive, got {decimal_places}")
    # n = 1 is a single forced loss and is left out of the odd trend
    start = 3 if parity == "odd" else 2
    points = []
    for n in range(start, max_n + 1, 2):
        s = count_outcomes(n)
        points.append(TrendPoint(n, s.p_win, s.p_draw, s.p_loss, decimal_places))
    return TrendSeries(parity, tuple(points))


def render_series(series: TrendSeries, format: str = "csv") -> str:
    _check_format(format)
    if format == "json":
        docs = []
        for p in series.points:
            w, d, l = p.decimals()
            docs.append({
                "n": p.n,
                "p_win": w, "p_draw": d, "p_loss": l,
                "exact": {
                    "p_win": _fraction_json(p.p_win),
                    "p_draw": _fraction_json(p.p_draw),
                    "p_loss": _fraction_json(p.p_loss),
                },
            })
        return json.dumps({"parity": series.parity, "points": docs}, indent=2) + "\n"
    rows = [(p.n, *p.decimals()) for p in series.points]
    if format == "csv":
        return _csv(FIGURE_COLUMNS, rows)
    lines = [f"{'n':>4}  {'p_win':>10}  {'p_draw':>10}  {'p_loss':>10}"]
    lines += [f"{n:>4}  {w:>10}  {d:>10}  {l:>10}" for n, w, d, l in rows]
    return "\n".join(lines) + "\n"
