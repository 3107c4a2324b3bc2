"""Exact half-integer scalars stored as doubled integers.

A value x in (1/2)Z is stored as the plain int 2*x.  All modules pass
these doubled ints around, so no floating point appears anywhere.
"""

from fractions import Fraction

from .errors import DomainError


def parse_half(text) -> int:
    """Parse '3/2', '-1/2', '1.5', '2', 2, Fraction(3,2) into a doubled int."""
    if isinstance(text, int):
        return 2 * text
    if isinstance(text, Fraction):
        d = text * 2
        if d.denominator != 1:
            raise DomainError(f"not a half-integer: {text}")
        return int(d)
    s = str(text).strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            f = Fraction(int(num), int(den))
        elif "." in s:
            f = Fraction(s)
        else:
            f = Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse half-integer {text!r}") from exc
    d = f * 2
    if d.denominator != 1:
        raise DomainError(f"not a half-integer: {text!r}")
    return int(d)


def fmt_half(d: int) -> str:
    """Render a doubled int: integers plainly, true halves as 'p/2'."""
    if d % 2 == 0:
        return str(d // 2)
    return f"{d}/2"
