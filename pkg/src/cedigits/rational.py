"""Exact rational helpers used by both the stream and the closed forms.

Repetition counts are floors of powers of an exact rational, so every
computation here stays in integer arithmetic until the caller decides
to round.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse a CLI-style rational: ``3/2``, ``2``, or a decimal like ``1.5``.

    Decimal inputs are converted exactly (``1.5`` becomes 3/2), never
    through binary floating point.
    """
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def floor_power(c: Fraction, n: int) -> int:
    """Return floor(c**n) for a rational c >= 1 and integer n >= 0."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    num = c.numerator
    den = c.denominator
    if den == 1:
        return num**n
    return num**n // den**n


def format_rational(c: Fraction) -> str:
    """Canonical num/den rendering, always including the denominator."""
    return f"{c.numerator}/{c.denominator}"
