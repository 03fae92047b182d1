"""Exact rational scalars.

The coefficient domain is the rationals and nothing else.  Python's
``fractions.Fraction`` already keeps values in canonical reduced form
(gcd(num, den) = 1, den > 0, arbitrary-precision integers), so it is used
directly; this module adds the parsing/formatting used by the JSON schemas
and the generalized binomial coefficient needed for rational powers and
fractional iteration.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rat = Fraction

RatLike = Fraction | int | str


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value).strip())


def rat_str(q: RatLike) -> str:
    """Canonical string: "num/den", or just "num" when den == 1."""
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binom(r: RatLike, k: int) -> Fraction:
    """Generalized binomial coefficient r(r-1)...(r-k+1)/k!, exact in Q.

    ``r`` may be any rational; ``k`` must be a nonnegative integer
    (negative ``k`` yields 0, matching the empty convention).
    """
    if k < 0:
        return Fraction(0)
    r = rat(r)
    num = Fraction(1)
    for i in range(k):
        num *= r - i
    return num / factorial(k)
