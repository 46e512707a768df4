"""Exact rational arithmetic primitives.

Integers are plain Python ``int`` (arbitrary precision, canonical zero) and
rationals are ``fractions.Fraction``, which already maintains the invariants
we need: lowest terms, positive denominator, zero stored as 0/1.  This module
adds the handful of operations the rest of the package relies on: exact
parsing/printing of "p/q" strings, heights, and certified rational square
roots.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


def normalize(num: int, den: int) -> Fraction:
    """Return num/den in canonical form; den must be nonzero."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def rat(text: str) -> Fraction:
    """Parse "p/q" or the integer shorthand "p" exactly.

    Decimals are rejected on purpose: exactness is the package contract.
    """
    s = text.strip()
    if "." in s or "e" in s or "E" in s:
        raise ValueError(f"not an exact rational: {text!r}")
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        return normalize(int(num_s), int(den_s))
    return Fraction(int(s))


def rat_str(x: Fraction) -> str:
    """Print exactly; integers drop the "/1"."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def height(x: Fraction) -> int:
    """Naive height max(|num|, den) of a rational in lowest terms."""
    return max(abs(x.numerator), x.denominator)


def isqrt_exact(n: int) -> int | None:
    """Exact integer square root of n, or None if n is not a perfect square."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_square(x: Fraction) -> Fraction | None:
    """Nonnegative rational square root of x when one exists, else None.

    Because x is in lowest terms, x is a rational square iff its numerator
    and denominator are both integer squares.  Negative inputs yield None so
    callers can use this directly as a discriminant filter.
    """
    rn = isqrt_exact(x.numerator)
    if rn is None:
        return None
    rd = isqrt_exact(x.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)
