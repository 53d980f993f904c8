"""Exact rational valuation of truth values.

A value ``[d1, ..., dn]`` is read as a balanced-ternary fraction
``d1 + d2/3 + ... + dn/3**(n-1)`` with F = -1, 0 = 0, T = 1. The map is
strictly monotone, so ranking by rational score agrees with ranking by the
list order.
"""
from __future__ import annotations

from fractions import Fraction

from .values import TruthValue

__all__ = ["value_of", "unreduced", "render", "DEFAULT_PRECISION"]

DEFAULT_PRECISION = 9


def unreduced(v: TruthValue) -> tuple[int, int]:
    """Numerator and denominator before reduction; the denominator is ``3**(n-1)``."""
    num = 0
    for d in v.digits:
        num = num * 3 + int(d)
    return num, 3 ** (len(v) - 1)


def value_of(v: TruthValue) -> Fraction:
    num, den = unreduced(v)
    return Fraction(num, den)


def render(r: Fraction, mode: str = "fraction", precision: int = DEFAULT_PRECISION) -> str:
    """Render a rational as ``num/den`` or as a decimal rounded half-to-even.

    >>> render(Fraction(5, 81), "decimal", 6)
    '0.061728'
    """
    r = Fraction(r)
    if mode == "fraction":
        return str(r)
    if mode != "decimal":
        raise ValueError(f"unknown render mode {mode!r}")
    if precision < 0:
        raise ValueError("precision must be non-negative")
    scaled = round(r * 10**precision)  # Fraction.__round__ rounds half to even
    neg = scaled < 0
    digits = str(abs(scaled)).rjust(precision + 1, "0")
    if precision:
        body = digits[:-precision] + "." + digits[-precision:]
    else:
        body = digits
    return ("-" if neg else "") + body
