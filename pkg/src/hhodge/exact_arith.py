"""Exact factorial-type products and rational (de)serialization.

Every function works over `fractions.Fraction` and returns exact values.
The three factorial variants share one convention: an empty product is 1.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "shifted_factorial",
    "frac_factorial",
    "double_factorial",
    "multinomial",
    "rational_to_str",
    "rational_from_str",
]

Rational = Union[int, Fraction]


def shifted_factorial(x: Rational, k: int) -> Fraction:
    """Ascending product (x)(x+1)...(x+k) over k+1 terms.

    k = -1 gives the empty product 1; k < -1 is rejected.
    """
    if k < -1:
        raise ValueError(f"shifted_factorial needs k >= -1, got {k}")
    xf = Fraction(x)
    acc = Fraction(1)
    for m in range(k + 1):
        acc *= xf + m
    return acc


def frac_factorial(x: Rational) -> Fraction:
    """Descending product x(x-1)(x-2)... down to the representative of x mod 1 in (0, 1].

    Values in (-1, 0] give the empty product 1.  Arguments <= -1 are rejected:
    the descent would never terminate on the negative side.
    For half-integers, frac_factorial(k + 1/2) = (2k+1)!! / 2^(k+1).
    """
    xf = Fraction(x)
    if xf <= -1:
        raise ValueError(f"frac_factorial needs x > -1, got {xf}")
    acc = Fraction(1)
    while xf > 0:
        acc *= xf
        xf -= 1
    return acc


def double_factorial(m: int) -> int:
    """Product m(m-2)(m-4)...1 for odd m >= 1, with (-1)!! = 1."""
    if m < -1 or m % 2 == 0:
        raise ValueError(f"double_factorial needs odd m >= -1, got {m}")
    acc = 1
    while m > 1:
        acc *= m
        m -= 2
    return acc


def multinomial(top: int, parts) -> int:
    """top! / (parts_1! * ... * parts_r!) for nonnegative parts summing to top."""
    parts = tuple(parts)
    if top < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial needs nonnegative arguments")
    if sum(parts) != top:
        raise ValueError(f"parts sum to {sum(parts)}, expected {top}")
    acc = math.factorial(top)
    for p in parts:
        acc //= math.factorial(p)
    return acc


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def rational_to_str(x: Rational) -> str:
    """Serialize a rational as "p" for integers, "p/q" otherwise (q > 0, reduced)."""
    xf = Fraction(x)
    if xf.denominator == 1:
        return str(xf.numerator)
    return f"{xf.numerator}/{xf.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse "p" or "p/q" with q a positive integer literal."""
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {s!r}")
    return Fraction(s)
