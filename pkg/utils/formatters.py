"""
Number formatting for human-readable output.
"""
from fractions import Fraction
import math


def _fmt(value, dec=6):
    """Format exact, float and complex scalars; a dash for missing values."""
    if value is None:
        return "—"
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return f"{value:,}"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return f"{value.numerator:,}"
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, complex):
        if value.imag == 0:
            return _fmt(value.real, dec)
        sign = "+" if value.imag >= 0 else "-"
        return f"{value.real:.{dec}g}{sign}{abs(value.imag):.{dec}g}i"
    try:
        f = float(value)
    except (TypeError, ValueError):
        return str(value)
    if math.isnan(f):
        return "—"
    return f"{f:.{dec}g}"
