"""The N-horse racing model.

K fields its horses in the fixed order (K_1, ..., K_N). T fields
(T_sigma(1), ..., T_sigma(N)) for a permutation sigma. Class 1 is the fastest,
and the capability chain T_{n+1} < K_{n+1} < T_n < K_n means T's horse of class
a beats K's horse of class b exactly when a < b. Race k is therefore a win for
T iff sigma(k) < k, and a whole match is won, drawn or lost by comparing T's
race wins with its race losses.

The number of permutations with M such wins is the Eulerian number E(N, M).
Eulerian numbers are usually defined through excedances (sigma(k) > k)
instead. The two statistics are swapped by sigma -> sigma^{-1}, so they have
the same distribution and every count agrees.
"""

from __future__ import annotations

import enum
import itertools
import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from tianji.eulerian import eulerian_row_recurrence
from tianji.exactmath import factorial, rational

DEFAULT_ENUM_LIMIT = 10
MC_BATCH = 1 << 16


class EnumerationBudgetExceeded(ValueError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"enumeration budget exceeded: n={n} is above the limit {limit}")
        self.n = n
        self.limit = limit


class MatchClass(enum.Enum):
    WIN = "WIN"
    DRAW = "DRAW"
    LOSS = "LOSS"

    @classmethod
    def from_tally(cls, wins: int, losses: int) -> "MatchClass":
        if wins > losses:
            return cls.WIN
        if wins == losses:
            return cls.DRAW
        return cls.LOSS


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} stored as its image, ``image[k] = sigma(k + 1)``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        n = len(image)
        if n == 0 or sorted(image) != list(range(1, n + 1)):
            raise ValueError(f"lineup {image} is not a bijection on 1..{n}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Build from a comma separated lineup such as ``"3,1,2"``."""
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"lineup {text!r} is not a bijection: expected comma separated integers")
        return cls(values)

    @property
    def n(self) -> int:
        return len(self.image)

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        """sigma(k) for 1-based ``k``."""
        return self.image[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.image, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return ",".join(map(str, self.image))


@dataclass(frozen=True)
class MatchResult:
    t_wins: int
    t_losses: int

    @property
    def match_class(self) -> MatchClass:
        return MatchClass.from_tally(self.t_wins, self.t_losses)


@dataclass(frozen=True)
class OutcomeSummary:
    n: int
    total: int
    winning: int
    drawing: int
    losing: int

    def __post_init__(self):
        if self.winning + self.drawing + self.losing != self.total:
            raise ValueError("outcome counts do not add up to the total")

    @property
    def p_win(self) -> Fraction:
        return rational(self.winning, self.total)

    @property
    def p_draw(self) -> Fraction:
        return rational(self.drawing, self.total)

    @property
    def p_loss(self) -> Fraction:
        return rational(self.losing, self.total)


@dataclass(frozen=True)
class MonteCarloSummary:
    n: int
    samples: int
    seed: int
    wins: int
    draws: int
    losses: int

    @property
    def p_win(self) -> Fraction:
        return rational(self.wins, self.samples)

    @property
    def p_draw(self) -> Fraction:
        return rational(self.draws, self.samples)

    @property
    def p_loss(self) -> Fraction:
        return rational(self.losses, self.samples)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"undefined for zero horses (n={n})")


def identity_permutation(n: int) -> Permutation:
    _check_n(n)
    return Permutation(tuple(range(1, n + 1)))


def shift_permutation(n: int) -> Permutation:
    """T's best lineup (T_n, T_1, ..., T_{n-1}): one loss, n-1 wins."""
    _check_n(n)
    return Permutation((n, *range(1, n)))


def t_beats_k(t_class: int, k_class: int) -> bool:
    return t_class < k_class


def match_result(p: Permutation) -> MatchResult:
    wins = sum(1 for k, t in enumerate(p.image, start=1) if t_beats_k(t, k))
    return MatchResult(wins, p.n - wins)


def excedance_count(p: Permutation) -> int:
    return sum(1 for k, v in enumerate(p.image, start=1) if v > k)


def _summary_from_histogram(n: int, hist: Sequence[int]) -> OutcomeSummary:
    won = drawn = lost = 0
    for wins, count in enumerate(hist):
        cls = MatchClass.from_tally(wins, n - wins)
        if cls is MatchClass.WIN:
            won += count
        elif cls is MatchClass.DRAW:
            drawn += count
        else:
            lost += count
    return OutcomeSummary(n, sum(hist), won, drawn, lost)


def count_outcomes(n: int) -> OutcomeSummary:
    """Exact outcome counts from the Eulerian row, no enumeration."""
    _check_n(n)
    row = eulerian_row_recurrence(n)
    total = factorial(n)
    if n % 2:
        winning = sum(row[M] for M in range((n + 1) // 2, n))
        drawing = 0
        losing = sum(row[M] for M in range(0, (n - 1) // 2 + 1))
    else:
        drawing = row[n // 2]
        winning = total // 2 - drawing
        losing = total // 2
    return OutcomeSummary(n, total, winning, drawing, losing)


def _histogram_with_first(n: int, first: int) -> list[int]:
    """Win-count census of all lineups with sigma(1) = ``first``."""
    hist = [0] * n
    rest = [v for v in range(1, n + 1) if v != first]
    positions = range(2, n + 1)
    lt = operator.lt
    # race 1 can never be won: sigma(1) >= 1
    for tail in itertools.permutations(rest):
        hist[sum(map(lt, tail, positions))] += 1
    return hist


def wins_histogram(n: int, limit: int = DEFAULT_ENUM_LIMIT, workers: int = 1) -> list[int]:
    """Brute-force census: slot M counts lineups giving T exactly M race wins.

    The lineups are partitioned by sigma(1) and the partial censuses are summed
    in a fixed order, so the result does not depend on ``workers``.
    """
    _check_n(n)
    if n > limit:
        raise EnumerationBudgetExceeded(n, limit)
    firsts = range(1, n + 1)
    if workers > 1 and n >= 8:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_histogram_with_first, itertools.repeat(n), firsts))
    else:
        parts = [_histogram_with_first(n, f) for f in firsts]
    return [sum(col) for col in zip(*parts)]


def enumerate_outcomes(n: int, limit: int = DEFAULT_ENUM_LIMIT, workers: int = 1) -> OutcomeSummary:
    """Outcome counts by classifying every one of the n! lineups."""
    return _summary_from_histogram(n, wins_histogram(n, limit=limit, workers=workers))


def excedance_histogram(n: int, limit: int = DEFAULT_ENUM_LIMIT) -> list[int]:
    _check_n(n)
    if n > limit:
        raise EnumerationBudgetExceeded(n, limit)
    hist = [0] * n
    for image in itertools.permutations(range(1, n + 1)):
        hist[excedance_count(Permutation(image))] += 1
    return hist


def _seed_u64(seed: int) -> int:
    return int(seed) & 0xFFFF_FFFF_FFFF_FFFF


def random_lineups(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` uniform lineups as rows of 0-based images, one Fisher-Yates pass."""
    perms = np.tile(np.arange(n, dtype=np.int64), (count, 1))
    rows = np.arange(count)
    for i in range(n - 1, 0, -1):
        j = rng.integers(0, i + 1, size=count)
        tmp = perms[rows, j]
        perms[rows, j] = perms[:, i]
        perms[:, i] = tmp
    return perms


def monte_carlo_outcomes(n: int, samples: int, seed: int) -> MonteCarloSummary:
    """Estimate outcome frequencies from ``samples`` uniform random lineups.

    The generator is numpy's PCG64 seeded with ``seed`` reduced to 64 bits;
    lineups are drawn in fixed-size batches with a Fisher-Yates shuffle, so a
    given ``(n, samples, seed)`` always yields the same tallies.
    """
    _check_n(n)
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = np.random.Generator(np.random.PCG64(_seed_u64(seed)))
    races = np.arange(n, dtype=np.int64)
    wins = draws = losses = 0
    left = samples
    while left:
        batch = min(left, MC_BATCH)
        perms = random_lineups(n, batch, rng)
        t_wins = (perms < races).sum(axis=1)
        t_losses = n - t_wins
        wins += int((t_wins > t_losses).sum())
        draws += int((t_wins == t_losses).sum())
        left -= batch
    losses = samples - wins - draws
    return MonteCarloSummary(n, samples, int(seed), wins, draws, losses)
