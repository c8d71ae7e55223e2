"""Exact counting of the generalized Tian Ji N-horse racing model."""

from tianji.eulerian import (
    EulerianRow,
    eulerian_closed_form,
    eulerian_number,
    eulerian_row_recurrence,
    worpitzky_lhs_rhs,
)
from tianji.exactmath import binomial, factorial, percent_half_up, rational
from tianji.racing import (
    MatchClass,
    MatchResult,
    MonteCarloSummary,
    OutcomeSummary,
    Permutation,
    count_outcomes,
    enumerate_outcomes,
    excedance_count,
    identity_permutation,
    match_result,
    monte_carlo_outcomes,
    shift_permutation,
    t_beats_k,
    wins_histogram,
)
from tianji.report import TableRow, TrendSeries, figure_series, render_table, table_rows

__version__ = "0.1.0"

__all__ = [
    "EulerianRow",
    "MatchClass",
    "MatchResult",
    "MonteCarloSummary",
    "OutcomeSummary",
    "Permutation",
    "TableRow",
    "TrendSeries",
    "binomial",
    "count_outcomes",
    "enumerate_outcomes",
    "eulerian_closed_form",
    "eulerian_number",
    "eulerian_row_recurrence",
    "excedance_count",
    "factorial",
    "figure_series",
    "identity_permutation",
    "match_result",
    "monte_carlo_outcomes",
    "percent_half_up",
    "rational",
    "render_table",
    "shift_permutation",
    "t_beats_k",
    "table_rows",
    "wins_histogram",
    "worpitzky_lhs_rhs",
]
