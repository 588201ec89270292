"""Shared brute-force oracles, deliberately independent of the library.

Everything here recomputes from first principles (literal trial division,
full scans) so library results are checked against a second route, not
against themselves.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, prod


def oracle_survives(moduli, x: int) -> bool:
    return all(x % m != 0 for m in moduli)


def oracle_count(moduli, x) -> int:
    """Survivors a with 1 <= a <= x, one trial division at a time."""
    n = floor(Fraction(x))
    return sum(1 for a in range(1, n + 1) if oracle_survives(moduli, a))


def oracle_centers(moduli, a: int, b: int) -> list[int]:
    """Centers x in (0, period] with x-a and x+b surviving mod the period."""
    period = prod(moduli)
    return [x for x in range(1, period + 1)
            if oracle_survives(moduli, (x - a) % period)
            and oracle_survives(moduli, (x + b) % period)]
