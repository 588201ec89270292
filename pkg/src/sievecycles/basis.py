"""Coprime modulus sets and the survivor wheels they generate.

A basis is a finite set of pairwise-coprime moduli.  Striking every multiple
of every modulus from the integers leaves the *survivors*; their pattern
repeats with period equal to the product of the moduli, so one period (a
"wheel") describes the whole number line.  The classical case is the first
n primes, but any pairwise-coprime moduli (including composites such as
20 and 2783) behave identically.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from math import gcd, isqrt, prod
from typing import Iterator

from .errors import CapacityError

# build_wheel marks one byte per candidate in [0, period): keep periods
# below this unless the caller raises the cap explicitly.
DEFAULT_WHEEL_CAP = 10**8


@dataclass(frozen=True)
class CoprimeBasis:
    """Strictly increasing, pairwise-coprime moduli, each >= 2; may be empty."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        for m in self.moduli:
            if not isinstance(m, int) or isinstance(m, bool):
                raise TypeError(f"modulus {m!r} is not an integer")
            if m < 2:
                raise ValueError(f"modulus {m} is smaller than 2")
        for i in range(1, len(self.moduli)):
            if self.moduli[i - 1] >= self.moduli[i]:
                raise ValueError("moduli must be strictly increasing")
        for i, a in enumerate(self.moduli):
            for b in self.moduli[i + 1 :]:
                g = gcd(a, b)
                if g > 1:
                    raise ValueError(
                        f"moduli {a} and {b} are not coprime (gcd = {g})"
                    )

    @cached_property
    def period(self) -> int:
        """Product of the moduli; 1 for the empty basis."""
        return prod(self.moduli)

    @cached_property
    def survivor_count(self) -> int:
        """Number of survivors in one period: the product of (m - 1)."""
        return prod(m - 1 for m in self.moduli)

    def without(self, m: int) -> CoprimeBasis:
        """The basis with modulus ``m`` removed."""
        if m not in self.moduli:
            raise ValueError(f"{m} is not a basis modulus")
        return CoprimeBasis(tuple(v for v in self.moduli if v != m))

    def largest(self) -> int:
        if not self.moduli:
            raise ValueError("empty basis has no largest modulus")
        return self.moduli[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.moduli)

    def __len__(self) -> int:
        return len(self.moduli)

    def __contains__(self, m: object) -> bool:
        return m in self.moduli


@dataclass(frozen=True)
class Wheel:
    """One full period of the survivor pattern, fully materialized.

    ``residues`` lists, in increasing order, every r in [0, period) that no
    basis modulus divides.  The empty basis gives the trivial wheel with
    period 1 and the single residue 0 (nothing is ever struck).
    """

    basis: CoprimeBasis
    period: int
    residues: tuple[int, ...]
    count: int

    def has_residue(self, r: int) -> bool:
        i = bisect_left(self.residues, r)
        return i < len(self.residues) and self.residues[i] == r


def _first_primes(n: int) -> tuple[int, ...]:
    """First n primes via a small bootstrap sieve."""
    if n == 0:
        return ()
    # Growing upper bound; n log n overshoot is cheap at bootstrap scale.
    limit = 16
    while True:
        flags = bytearray([1]) * (limit + 1)
        flags[0] = flags[1] = 0
        for p in range(2, isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
        primes = [i for i, f in enumerate(flags) if f]
        if len(primes) >= n:
            return tuple(primes[:n])
        limit *= 4


def make_prime_basis(n: int) -> CoprimeBasis:
    """Basis of the first ``n`` primes (n = 0 gives the empty basis).

    Practical cap: n in the thousands is instant; beyond ~10**6 the
    bootstrap sieve's memory dominates.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return CoprimeBasis(_first_primes(n))


def make_basis(moduli) -> CoprimeBasis:
    """Validated basis from arbitrary moduli: sorted, deduplicated.

    Rejects any modulus below 2 and any pair sharing a factor, naming the
    offending pair.
    """
    return CoprimeBasis(tuple(sorted(set(moduli))))


def is_survivor(basis: CoprimeBasis, x: int) -> bool:
    """True iff no basis modulus divides ``x`` (x >= 0)."""
    if x < 0:
        raise ValueError("x must be non-negative")
    return all(x % m != 0 for m in basis.moduli)


def build_wheel(basis: CoprimeBasis, *, cap: int = DEFAULT_WHEEL_CAP) -> Wheel:
    """Materialize one period by striking multiples of every modulus.

    Refuses when the period exceeds ``cap`` candidates; the counting module
    evaluates arbitrarily large bases without materializing anything.
    """
    period = basis.period
    if period > cap:
        raise CapacityError(
            f"period {period} exceeds the wheel cap of {cap} residue candidates"
        )
    alive = bytearray([1]) * period
    for m in basis.moduli:
        alive[0::m] = b"\x00" * len(range(0, period, m))
    residues = tuple(r for r in range(period) if alive[r])
    count = len(residues)
    assert count == basis.survivor_count
    return Wheel(basis=basis, period=period, residues=residues, count=count)


def killer_index(wheel: Wheel, m: int, a: int) -> int:
    """Row index K in [0, m) at which ``m`` strikes the residue-``a`` row.

    Rolling the wheel m times covers [0, m * period); of the m survivors
    K * period + a in that range, exactly one is divisible by m, namely the
    one with K = -a / period (mod m).  Requires gcd(m, period) = 1 and that
    ``a`` is a residue of the wheel.
    """
    if gcd(m, wheel.period) != 1:
        raise ValueError(f"{m} shares a factor with the period {wheel.period}")
    if not wheel.has_residue(a):
        raise ValueError(f"{a} is not a survivor residue of this wheel")
    return (-a * pow(wheel.period, -1, m)) % m


def extend_wheel(wheel: Wheel, m: int, *, cap: int = DEFAULT_WHEEL_CAP) -> Wheel:
    """Wheel for the basis extended by ``m`` (coprime to the period).

    Rolls m copies of the current wheel and deletes, per residue row, the
    single entry that m divides.  Equivalent to rebuilding from scratch but
    shows the one-kill-per-row transition explicitly.
    """
    if m < 2:
        raise ValueError(f"modulus {m} is smaller than 2")
    if gcd(m, wheel.period) != 1:
        raise ValueError(f"{m} shares a factor with the period {wheel.period}")
    new_period = wheel.period * m
    if new_period > cap:
        raise CapacityError(
            f"period {new_period} exceeds the wheel cap of {cap} residue candidates"
        )
    new_basis = make_basis(wheel.basis.moduli + (m,))
    survivors = []
    for a in wheel.residues:
        dead = killer_index(wheel, m, a)
        for k in range(m):
            if k != dead:
                survivors.append(k * wheel.period + a)
    residues = tuple(sorted(survivors))
    return Wheel(basis=new_basis, period=new_period, residues=residues,
                 count=len(residues))


def iter_survivors(wheel: Wheel, lo: int, hi: int) -> Iterator[int]:
    """Yield every survivor in [lo, hi] in increasing order, lazily.

    Translates the wheel period by period, so the range may span many
    waves without materializing anything beyond the wheel itself.
    """
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    period, residues = wheel.period, wheel.residues
    for k in range(lo // period, hi // period + 1):
        base = k * period
        start = bisect_left(residues, lo - base) if base < lo else 0
        for r in residues[start:]:
            x = base + r
            if x > hi:
                return
            yield x
