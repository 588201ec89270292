"""Exact survivor counts at exact rational boundaries.

The central quantity is f(x): how many survivors a satisfy 1 <= a <= x.
With this convention f(period) equals the per-period survivor count, and
f(x) = 0 for x < 1.  Boundaries are exact rationals (`fractions.Fraction`),
never floats: the interesting boundaries are points like 52.5 or
231060472.5 where a float's rounding could move the floor.

Five interchangeable evaluation routes are provided, each returning the
same exact integer:

* ``count_by_sieve``       -- mark multiples up to floor(x); the oracle.
* ``count_legendre``       -- signed sum of floor(x / d) over squarefree
                              divisor products d (inclusion-exclusion).
* ``count_meissel``        -- peel off the largest modulus m via
                              f(x) = f'(x) - f'(x / m), recursing to the
                              empty basis where f(x) = floor(x).
* ``count_generalized_meissel`` -- same peel for *any* chosen modulus.
* ``count_periodic``       -- reduce x modulo the period first; cheap for
                              astronomically large x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .basis import CoprimeBasis
from .errors import CapacityError

DEFAULT_ORACLE_CAP = 10**7
DEFAULT_FACTOR_CAP = 10**12

METHOD_ORACLE = "oracle"
METHOD_LEGENDRE = "legendre"
METHOD_MEISSEL = "meissel"
METHOD_GENERALIZED_MEISSEL = "generalized_meissel"
METHOD_PERIODIC = "periodic_reduction"
METHODS = (
    METHOD_ORACLE,
    METHOD_LEGENDRE,
    METHOD_MEISSEL,
    METHOD_GENERALIZED_MEISSEL,
    METHOD_PERIODIC,
)

# Accepted spellings of an exact non-negative rational: "35", "52.5", "105/2".
_BOUNDARY_RE = re.compile(r"^(\d+)(?:\.(\d+)|/(\d+))?$")


def exact_boundary(x) -> Fraction:
    """Normalize a boundary to an exact non-negative Fraction.

    Accepts int, Fraction, or a string of the form ``<int>``,
    ``<int>.<digits>``, or ``<int>/<int>``.  Floats are rejected: 52.5
    would survive the round trip but most decimals would not, and a
    silently shifted floor is exactly the failure this type exists to
    prevent.
    """
    if isinstance(x, bool):
        raise TypeError("boundary must be int, Fraction, or str")
    if isinstance(x, int):
        value = Fraction(x)
    elif isinstance(x, Fraction):
        value = x
    elif isinstance(x, float):
        raise TypeError(
            "float boundaries are not accepted; pass an int, Fraction, or "
            "a string like '52.5' or '105/2'"
        )
    elif isinstance(x, str):
        m = _BOUNDARY_RE.match(x.strip())
        if m is None:
            raise ValueError(
                f"cannot parse {x!r} as an exact rational "
                "(<int>, <int>.<digits>, or <int>/<int>)"
            )
        whole, decimals, denom = m.groups()
        if decimals is not None:
            value = Fraction(int(whole + decimals), 10 ** len(decimals))
        elif denom is not None:
            if int(denom) == 0:
                raise ValueError("denominator must be positive")
            value = Fraction(int(whole), int(denom))
        else:
            value = Fraction(int(whole))
    else:
        raise TypeError("boundary must be int, Fraction, or str")
    if value < 0:
        raise ValueError("boundary must be non-negative")
    return value


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str


def count_by_sieve(basis: CoprimeBasis, x, *, cap: int = DEFAULT_ORACLE_CAP) -> CountResult:
    """Oracle count: strike multiples of every modulus in [1, floor(x)]."""
    n = floor(exact_boundary(x))
    if n > cap:
        raise CapacityError(f"floor(x) = {n} exceeds the oracle cap of {cap}")
    if n < 1:
        return CountResult(0, METHOD_ORACLE)
    alive = bytearray([1]) * (n + 1)
    for m in basis.moduli:
        alive[0::m] = b"\x00" * len(range(0, n + 1, m))
    return CountResult(sum(alive[1:]), METHOD_ORACLE)


def _legendre(moduli: tuple[int, ...], x: Fraction) -> int:
    """Signed divisor-product sum with pruning once products exceed x."""

    def signed_tail(start: int, product: int) -> int:
        total = floor(x / product)
        for i in range(start, len(moduli)):
            d = product * moduli[i]
            if d > x:
                break  # moduli ascend, so every later product exceeds x too
            total -= signed_tail(i + 1, d)
        return total

    if x < 1:
        return 0
    return signed_tail(0, 1)


def count_legendre(basis: CoprimeBasis, x) -> CountResult:
    """Inclusion-exclusion count; exact for any basis, 2^k terms at worst.

    Pruning keeps the effective term count far below 2^k for small x, but
    a basis much beyond ~25 moduli with x near the period stops being
    practical.
    """
    return CountResult(_legendre(basis.moduli, exact_boundary(x)), METHOD_LEGENDRE)


def _meissel(moduli: tuple[int, ...], x: Fraction, memo: dict) -> int:
    if x < 1:
        return 0
    if not moduli:
        return floor(x)
    key = (len(moduli), x)
    hit = memo.get(key)
    if hit is not None:
        return hit
    rest, m = moduli[:-1], moduli[-1]
    value = _meissel(rest, x, memo) - _meissel(rest, x / m, memo)
    memo[key] = value
    return value


def count_meissel(basis: CoprimeBasis, x) -> CountResult:
    """Recursive count peeling off the largest modulus at each level.

    Striking multiples of m removes exactly the previous-level survivors
    that are <= x/m.  Memoized per call on (prefix length, boundary).
    """
    return CountResult(_meissel(basis.moduli, exact_boundary(x), {}), METHOD_MEISSEL)


def count_generalized_meissel(basis: CoprimeBasis, drop: int, x) -> CountResult:
    """Peel off an arbitrary chosen modulus instead of the largest.

    The survivor set does not depend on the order the moduli were applied,
    so f(x) = f_without_drop(x) - f_without_drop(x / drop) for any member.
    """
    xf = exact_boundary(x)
    reduced = basis.without(drop)  # raises if drop is absent
    memo: dict = {}
    value = _meissel(reduced.moduli, xf, memo) - _meissel(reduced.moduli, xf / drop, memo)
    return CountResult(value, METHOD_GENERALIZED_MEISSEL)


def count_periodic(basis: CoprimeBasis, x) -> CountResult:
    """Reduce x into one period, then count the remainder by Legendre.

    f(K * period + r) = K * survivor_count + f(r), so only r in [0, period)
    ever needs direct evaluation.  Asymptotically cheap for huge x.
    """
    xf = exact_boundary(x)
    period = basis.period
    k = floor(xf / period)
    r = xf - k * period
    value = k * basis.survivor_count + _legendre(basis.moduli, r)
    return CountResult(value, METHOD_PERIODIC)


def count_strictly_below(basis: CoprimeBasis, x) -> int:
    """Survivors a with 1 <= a < x (the half-open variant).

    Differs from f(x) only when x is itself a survivor integer.  This is
    the form that makes the reflection law exact for every nonempty basis:
    f(period - x) = survivor_count - count_strictly_below(x) for
    0 < x <= period, with no off-by-one at survivor boundaries.  (The
    empty basis alone escapes: there 0 itself survives, so the reflection
    would have to count it.)
    """
    xf = exact_boundary(x)
    if xf.denominator == 1:
        return _legendre(basis.moduli, xf - 1)
    return _legendre(basis.moduli, xf)


def distinct_prime_factors(x: int, *, cap: int = DEFAULT_FACTOR_CAP) -> tuple[int, ...]:
    """Distinct prime divisors of x >= 1 by trial division."""
    if x < 1:
        raise ValueError("x must be positive")
    if x > cap:
        raise CapacityError(f"{x} exceeds the factorization cap of {cap}")
    primes = []
    n = x
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return tuple(primes)


def euler_phi(x: int, *, cap: int = DEFAULT_FACTOR_CAP) -> int:
    """Euler's totient via the distinct-prime-divisor product formula."""
    result = x
    for p in distinct_prime_factors(x, cap=cap):
        result = result // p * (p - 1)
    return result


def phi_identity_check(x: int, *, cap: int = DEFAULT_FACTOR_CAP) -> bool:
    """Totient bridge: phi(x) equals the survivor count <= x for the basis
    of x's own prime divisors."""
    basis = CoprimeBasis(distinct_prime_factors(x, cap=cap))
    return euler_phi(x, cap=cap) == count_legendre(basis, x).value
