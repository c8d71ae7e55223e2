"""Eulerian numbers E(n, m): permutations of {1..n} with exactly m excedances.

Two independent routes are provided. :func:`eulerian_row_recurrence` builds
rows bottom-up from E(1) = [1] with

    E(n, m) = (m + 1) E(n-1, m) + (n - m) E(n-1, m-1),

and :func:`eulerian_closed_form` evaluates the alternating sum

    E(n, m) = sum_{j=0}^{m} (-1)^j (m - j + 1)^n C(n + 1, j).

They share nothing except :func:`tianji.exactmath.binomial`, so agreement
between them is a meaningful check of both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from tianji.exactmath import binomial, factorial


@dataclass(frozen=True)
class EulerianRow:
    """Row ``n`` of the Eulerian triangle, ``counts[m] = E(n, m)``.

    Indexing outside ``0..n-1`` returns 0, matching E(n, -1) = E(n, n) = 0.
    """

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n:
            raise ValueError(f"row {self.n} needs {self.n} entries, got {len(self.counts)}")

    def __getitem__(self, m: int) -> int:
        if 0 <= m < self.n:
            return self.counts[m]
        return 0

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)


@lru_cache(maxsize=None)
def _row(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _row(n - 1)

    def at(m):
        return prev[m] if 0 <= m < n - 1 else 0

    return tuple((m + 1) * at(m) + (n - m) * at(m - 1) for m in range(n))


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"Eulerian numbers undefined for zero horses (n={n})")


def eulerian_row_recurrence(n: int) -> EulerianRow:
    _check_n(n)
    # warm the cache upward so deep n never hits the recursion limit
    for k in range(1, n):
        _row(k)
    return EulerianRow(n, _row(n))


def eulerian_number(n: int, m: int) -> int:
    """E(n, m) read from the recurrence table; 0 when m is out of range."""
    return eulerian_row_recurrence(n)[m]


def eulerian_closed_form(n: int, m: int) -> int:
    _check_n(n)
    if m < 0 or m >= n:
        return 0
    return sum((-1) ** j * (m - j + 1) ** n * binomial(n + 1, j) for j in range(m + 1))


def worpitzky_lhs_rhs(n_power: int, N: int) -> tuple[int, int]:
    """Both sides of Worpitzky's identity ``x^N = sum_M E(N, M) C(M + x, N)``.

    ``x`` is ``n_power``. The caller compares the two components.
    """
    if n_power < 1:
        raise ValueError(f"n_power must be positive, got {n_power}")
    row = eulerian_row_recurrence(N)
    rhs = sum(row[M] * binomial(M + n_power, N) for M in range(N))
    return n_power**N, rhs


def check_row(row: EulerianRow) -> None:
    """Raise ``AssertionError`` if ``row`` breaks a structural invariant."""
    c = row.counts
    assert sum(c) == factorial(row.n), "row sum differs from n!"
    assert all(x > 0 for x in c), "nonpositive entry"
    assert c == c[::-1], "row is not palindromic"
    assert c[0] == 1 and c[-1] == 1, "boundary entries differ from 1"
