"""Exact integer and rational arithmetic helpers.

Counts are plain Python integers (arbitrary precision); expected values are
`fractions.Fraction` (always in lowest terms, positive denominator).  Floats
never appear in a computation path: decimal output is produced by exact
integer rounding in :func:`render_decimal`.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["binomial", "mobius", "divisors", "render_decimal"]

MAX_RENDER_PLACES = 50


def binomial(n: int, k: int) -> int:
    """n-choose-k; 0 when k < 0 or k > n.  Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def mobius(n: int) -> int:
    """Moebius function: 1 at 1, 0 when a square divides n, else (-1)^#primes."""
    if n < 1:
        raise ValueError(f"mobius: n must be positive, got {n}")
    if n == 1:
        return 1
    nprimes = 0
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            rest //= d
            if rest % d == 0:
                return 0
            nprimes += 1
        d += 1
    if rest > 1:
        nprimes += 1
    return -1 if nprimes % 2 else 1


def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors: n must be positive, got {n}")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def render_decimal(x: Fraction | int, places: int) -> str:
    """Render x as a decimal string with exactly `places` digits.

    Rounds half away from zero, so 11.125 at two places renders as "11.13".
    Exact values keep their trailing zeros ("4.00").
    """
    if places < 0 or places > MAX_RENDER_PLACES:
        raise ValueError(f"render_decimal: places must be in 0..{MAX_RENDER_PLACES}")
    x = Fraction(x)
    scaled = abs(x.numerator) * 10**places
    q, r = divmod(scaled, x.denominator)
    if 2 * r >= x.denominator:
        q += 1
    sign = "-" if x.numerator < 0 and q > 0 else ""
    digits = str(q)
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return sign + digits[:-places] + "." + digits[-places:]
