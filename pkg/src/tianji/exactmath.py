"""Exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always stored reduced with a positive
denominator. Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

ExactInt = int
ExactRational = Fraction


def factorial(n: int) -> int:
    """Return ``n!`` exactly. ``n`` must be a nonnegative integer."""
    if n < 0:
        raise ValueError(f"factorial undefined for negative n={n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient ``n (n-1) ... (n-k+1) / k!``.

    The upper argument may be negative, so ``binomial(-4, 2) == 10``. For
    ``0 <= n < k`` the result is 0. A negative ``k`` is rejected.
    """
    if k < 0:
        raise ValueError(f"binomial lower argument must be nonnegative, got k={k}")
    if 0 <= n < k:
        return 0
    if n >= 0 and k > n - k:
        k = n - k
    num = 1
    for i in range(k):
        num *= n - i
    # the falling factorial is always divisible by k!
    return num // math.factorial(k)


def rational(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError(f"undefined ratio {num}/0")
    return Fraction(num, den)


def _as_fraction(r) -> Fraction:
    if isinstance(r, Fraction):
        return r
    if isinstance(r, int):
        return Fraction(r)
    raise TypeError(f"expected an exact rational, got {type(r).__name__}")


def round_half_up(r: Fraction) -> int:
    """Nearest integer to ``r``, ties toward +infinity."""
    r = _as_fraction(r)
    return (2 * r.numerator + r.denominator) // (2 * r.denominator)


def percent_half_up(r: Fraction) -> int:
    """Whole-number percent of a probability, exact halves rounded up.

    >>> percent_half_up(Fraction(27, 120))
    23
    """
    r = _as_fraction(r)
    if r < 0 or r > 1:
        raise ValueError(f"percent requires 0 <= r <= 1, got {r}")
    return round_half_up(100 * r)


def decimal_string(r: Fraction, places: int) -> str:
    """Render ``r`` with exactly ``places`` digits after the point.

    The last digit is rounded to nearest with ties away from zero, computed
    on integers only.
    """
    if places < 1:
        raise ValueError(f"places must be positive, got {places}")
    r = _as_fraction(r)
    scale = 10**places
    sign = "-" if r < 0 else ""
    q = round_half_up(abs(r) * scale)
    whole, frac = divmod(q, scale)
    if q == 0:
        sign = ""
    return f"{sign}{whole}.{frac:0{places}d}"
