"""Exact textual rendering of rational quantities."""

from __future__ import annotations

from fractions import Fraction


def format_exact(q: Fraction | int) -> str:
    """Render a non-negative rational without any rounding.

    Terminating decimals (denominator a product of 2s and 5s) print as
    decimals, e.g. 231060472.5; everything else prints as a reduced
    fraction, e.g. 1078282205/3.
    """
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(q.numerator)
    scaled = q.numerator * 10**digits // q.denominator
    text = str(scaled).rjust(digits + 1, "0")
    return f"{text[:-digits]}.{text[-digits:]}"
