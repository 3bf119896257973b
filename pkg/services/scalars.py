"""
Scalar handling: every weight, fugacity and partition-function value is either
an exact rational (Fraction) or a complex double. The two never mix.
"""
from enum import Enum
from fractions import Fraction
import cmath
import numbers

from services.errors import ModeError


class ScalarMode(str, Enum):
    EXACT = "exact"
    COMPLEX = "complex"


def mode_of(value):
    if isinstance(value, bool):
        raise ModeError(f"booleans are not scalars: {value!r}")
    if isinstance(value, (int, Fraction)):
        return ScalarMode.EXACT
    if isinstance(value, (float, complex)):
        return ScalarMode.COMPLEX
    raise ModeError(f"unsupported scalar type {type(value).__name__}")


def common_mode(values, default=ScalarMode.EXACT):
    """The single mode shared by all values; ModeError on a mix."""
    found = None
    for v in values:
        m = mode_of(v)
        if found is None:
            found = m
        elif m is not found:
            raise ModeError(f"mixed scalar modes: {found.value} and {m.value}")
    return found or default


def coerce(value, mode):
    """Convert value into mode. Exact values widen to complex; floats never narrow."""
    mode = ScalarMode(mode)
    if mode is ScalarMode.EXACT:
        if mode_of(value) is not ScalarMode.EXACT:
            raise ModeError(f"exact mode needs a rational, got {value!r}")
        return Fraction(value)
    if isinstance(value, Fraction):
        return complex(float(value))
    return complex(value)


def one(mode):
    return Fraction(1) if ScalarMode(mode) is ScalarMode.EXACT else complex(1.0)


def zero(mode):
    return Fraction(0) if ScalarMode(mode) is ScalarMode.EXACT else complex(0.0)


def parse_scalar(raw, mode):
    """Parse a JSON/CLI scalar: 'p/q' or an int for exact, [re, im] or a number for complex."""
    mode = ScalarMode(mode)
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise ModeError(f"complex scalar must be [re, im], got {raw!r}")
        if mode is ScalarMode.EXACT:
            raise ModeError(f"complex value {raw!r} in exact mode")
        return complex(float(raw[0]), float(raw[1]))
    if isinstance(raw, str):
        text = raw.strip()
        try:
            exact = Fraction(text)
        except (ValueError, ZeroDivisionError):
            if mode is ScalarMode.EXACT:
                raise ModeError(f"not a rational: {raw!r}") from None
            return complex(text.replace("i", "j"))
        if mode is ScalarMode.EXACT:
            if "." in text or "e" in text.lower():
                raise ModeError(f"exact values must be written p/q, got {raw!r}")
            return exact
        return complex(float(exact))
    if isinstance(raw, float) and mode is ScalarMode.EXACT:
        raise ModeError(f"float {raw!r} in exact mode; write it as p/q")
    if isinstance(raw, numbers.Number):
        return coerce(raw, mode)
    raise ModeError(f"cannot parse scalar {raw!r}")


def scalar_to_json(value):
    """Exact → 'p/q' string, complex → [re, im]."""
    if mode_of(value) is ScalarMode.EXACT:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    value = complex(value)
    return [value.real, value.imag]


def _exact_int_root(n, k):
    if n < 0:
        return None
    r = round(n ** (1.0 / k)) if n < 2 ** 52 else _int_root_newton(n, k)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    return None


def _int_root_newton(n, k):
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_sqrt(q):
    """Positive rational r with r**2 == q, or None."""
    q = Fraction(q)
    if q <= 0:
        return None
    num = _exact_int_root(q.numerator, 2)
    den = _exact_int_root(q.denominator, 2)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def rational_fourth_root(q):
    """Positive rational r with r**4 == q; ModeError if q is not a rational fourth power."""
    q = Fraction(q)
    if q <= 0:
        raise ModeError(f"exact fourth root needs q > 0, got {q}")
    num = _exact_int_root(q.numerator, 4)
    den = _exact_int_root(q.denominator, 4)
    if num is None or den is None:
        raise ModeError(f"q = {q} is not the fourth power of a rational; use complex mode")
    return Fraction(num, den)


def principal_root(value, k):
    value = complex(value)
    if value == 0:
        return complex(0.0)
    return cmath.exp(cmath.log(value) / k)



def relative_residual(lhs, rhs):
    num = abs(complex(lhs) - complex(rhs))
    den = abs(complex(rhs))
    if den == 0:
        return num
    return num / den
