"""Self-verification suites: every structural law, checked at runtime.

Each named check exercises one invariant against an independent route
(exhaustive scan, direct sieve, or a second formula).  Checks are
deterministic for a given seed and scale with the chosen depth, so the
same suite doubles as a quick smoke test and an overnight grind.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import floor, prod

from .basis import (
    CoprimeBasis,
    build_wheel,
    extend_wheel,
    is_survivor,
    killer_index,
    make_basis,
    make_prime_basis,
)
from .counting import (
    count_by_sieve,
    count_generalized_meissel,
    count_legendre,
    count_meissel,
    count_periodic,
    count_strictly_below,
    phi_identity_check,
)
from .cycles import cycle_table, subdivision, subdivision_boundary_check, total_intervals
from .pairs import PairSpec, enumerate_pair_centers, pair_count
from .ring import (
    decompose,
    identity,
    inverse,
    is_survivor_vector,
    is_unit_vector,
    multiply,
    reconstruct,
)

DEPTHS = ("small", "standard", "deep")


@dataclass(frozen=True)
class DepthParams:
    samples: int          # random repetitions per check
    max_primes: int       # prime-basis sizes drawn from [0, max_primes]
    exhaustive_cap: int   # periods up to this get full scans
    pair_cap: int         # largest period for center enumeration
    boundary_cap: int     # ceiling for random boundaries


_PARAMS = {
    "small": DepthParams(samples=40, max_primes=5, exhaustive_cap=10**4,
                         pair_cap=10**4, boundary_cap=10**3),
    "standard": DepthParams(samples=200, max_primes=8, exhaustive_cap=6 * 10**4,
                            pair_cap=3 * 10**4, boundary_cap=10**5),
    "deep": DepthParams(samples=1000, max_primes=8, exhaustive_cap=6 * 10**5,
                        pair_cap=3 * 10**5, boundary_cap=10**6),
}

# Pairwise-coprime composite bases exercising the non-prime generality.
_COMPOSITE_POOL = (
    (20, 2783),
    (4, 9, 25),
    (6, 35),
    (8, 15, 77),
    (9, 10, 77),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_prime_basis(rng: random.Random, p: DepthParams, *,
                        min_size: int = 0) -> CoprimeBasis:
    primes = make_prime_basis(p.max_primes).moduli
    size = rng.randint(min_size, len(primes))
    return make_basis(rng.sample(primes, size))


def _random_basis(rng: random.Random, p: DepthParams, *,
                  min_size: int = 0) -> CoprimeBasis:
    if rng.random() < 0.25:
        pool = [c for c in _COMPOSITE_POOL if len(c) >= max(min_size, 1)]
        return make_basis(rng.choice(pool))
    return _random_prime_basis(rng, p, min_size=min_size)


def _random_boundary(rng: random.Random, cap: int) -> Fraction:
    den = rng.choice((1, 1, 2, 2, 3, 4, 5, 7, 10))
    return Fraction(rng.randint(0, cap * den), den)


# --- wheel structure ---------------------------------------------------------


def check_wheel_periodicity(rng, p):
    for _ in range(p.samples):
        basis = _random_basis(rng, p)
        period = basis.period
        x = rng.randint(0, 4 * period)
        k = rng.randint(0, 5)
        assert is_survivor(basis, x) == is_survivor(basis, k * period + x), \
            f"period shift changed survivorship at x={x}, K={k}, basis={basis.moduli}"
    return f"{p.samples} random shifts"


def check_wheel_symmetry(rng, p):
    exhaustive = 0
    for basis in (make_prime_basis(4), make_prime_basis(5),
                  make_basis((20, 2783)), make_basis((4, 9, 25))):
        period = basis.period
        if period <= p.exhaustive_cap:
            for a in range(1, period):
                assert is_survivor(basis, a) == is_survivor(basis, period - a), \
                    f"asymmetry at a={a}, basis={basis.moduli}"
            exhaustive += 1
    for _ in range(p.samples):
        basis = _random_basis(rng, p, min_size=1)
        a = rng.randint(1, basis.period - 1)
        assert is_survivor(basis, a) == is_survivor(basis, basis.period - a)
    return f"{exhaustive} bases exhaustively, {p.samples} samples"


def check_wheel_count_product(rng, p):
    checked = 0
    for _ in range(p.samples // 4):
        basis = _random_basis(rng, p)
        if basis.period > p.exhaustive_cap:
            continue
        wheel = build_wheel(basis)
        expected = prod(m - 1 for m in basis)
        assert wheel.count == len(wheel.residues) == expected, \
            f"count mismatch for basis={basis.moduli}"
        checked += 1
    assert checked > 0
    return f"{checked} wheels"


def check_wheel_one_kill_per_row(rng, p):
    cases = 0
    for moduli, extras in (((2, 3, 5), (7, 11, 13)), ((2, 3, 5, 7), (11, 13))):
        wheel = build_wheel(make_basis(moduli))
        for m in extras:
            for a in wheel.residues:
                hits = [k for k in range(m) if (k * wheel.period + a) % m == 0]
                assert hits == [killer_index(wheel, m, a)], \
                    f"row a={a} hit at K={hits}, modulus {m}"
                cases += 1
    return f"{cases} rows scanned"


def check_wheel_order_independence(rng, p):
    rounds = max(4, p.samples // 10)
    for _ in range(rounds):
        basis = _random_basis(rng, p, min_size=1)
        if basis.period > p.exhaustive_cap:
            continue
        direct = build_wheel(basis)
        order = list(basis.moduli)
        rng.shuffle(order)
        wheel = build_wheel(make_basis(()))
        for m in order:
            wheel = extend_wheel(wheel, m)
        assert wheel.residues == direct.residues, \
            f"order {order} gave different residues"
    return f"{rounds} shuffled rebuilds"


def check_wheel_composite_moduli(rng, p):
    basis = make_basis((20, 2783))
    period = basis.period
    count = count_legendre(basis, period).value
    assert count == 19 * 2782 == 52858, f"composite survivor count {count}"
    for a in range(1, period):
        assert is_survivor(basis, a) == is_survivor(basis, period - a)
    for _ in range(p.samples):
        x = rng.randint(0, period - 1)
        assert is_survivor(basis, x) == is_survivor(basis, x + period)
    return "count 52858; symmetry exhaustive over one period"


# --- counting routes ---------------------------------------------------------


def check_count_method_agreement(rng, p):
    for _ in range(p.samples):
        basis = _random_basis(rng, p)
        x = _random_boundary(rng, p.boundary_cap)
        values = {
            count_by_sieve(basis, x).value,
            count_legendre(basis, x).value,
            count_meissel(basis, x).value,
            count_periodic(basis, x).value,
        }
        for drop in basis:
            values.add(count_generalized_meissel(basis, drop, x).value)
        assert len(values) == 1, \
            f"methods disagree at x={x}, basis={basis.moduli}: {values}"
    return f"{p.samples} (basis, boundary) pairs, all routes equal"


def check_count_peel_largest(rng, p):
    for _ in range(p.samples):
        basis = _random_basis(rng, p, min_size=1)
        x = _random_boundary(rng, p.boundary_cap)
        m = basis.largest()
        rest = basis.without(m)
        lhs = count_meissel(basis, x).value
        rhs = count_meissel(rest, x).value - count_meissel(rest, x / m).value
        assert lhs == rhs, f"peel failed at x={x}, basis={basis.moduli}"
    return f"{p.samples} peels of the largest modulus"


def check_count_peel_any(rng, p):
    for _ in range(p.samples // 2):
        basis = _random_basis(rng, p, min_size=1)
        x = _random_boundary(rng, p.boundary_cap)
        reference = count_meissel(basis, x).value
        for drop in basis:
            got = count_generalized_meissel(basis, drop, x).value
            assert got == reference, \
                f"dropping {drop} gave {got} != {reference} at x={x}"
    return f"{p.samples // 2} boundaries, every drop choice"


def check_count_monotone_steps(rng, p):
    for _ in range(p.samples // 4):
        basis = _random_basis(rng, p)
        start = rng.randint(0, p.boundary_cap)
        previous = count_legendre(basis, start).value
        for x in range(start + 1, start + 30):
            current = count_legendre(basis, x).value
            step = current - previous
            assert step in (0, 1)
            assert step == (1 if is_survivor(basis, x) else 0)
            previous = current
    return f"{p.samples // 4} windows of 30 consecutive integers"


def check_count_period_shift(rng, p):
    for _ in range(p.samples):
        basis = _random_basis(rng, p)
        x = _random_boundary(rng, p.boundary_cap)
        k = rng.randint(0, 4)
        lhs = count_legendre(basis, k * basis.period + x).value
        rhs = k * basis.survivor_count + count_legendre(basis, x).value
        assert lhs == rhs, f"shift failed at x={x}, K={k}, basis={basis.moduli}"
    return f"{p.samples} shifted boundaries"


def check_count_reflection(rng, p):
    # Nonempty bases only: the empty basis keeps 0 as a survivor, which the
    # strict count below x deliberately excludes.
    for _ in range(p.samples):
        basis = _random_basis(rng, p, min_size=1)
        period = basis.period
        den = rng.choice((1, 1, 2, 3, 4))
        x = Fraction(rng.randint(1, period * den), den)
        lhs = count_legendre(basis, period - x).value
        rhs = basis.survivor_count - count_strictly_below(basis, x)
        assert lhs == rhs, f"reflection failed at x={x}, basis={basis.moduli}"
    return f"{p.samples} reflected boundaries (strict form)"


def check_count_pruning(rng, p):
    for _ in range(p.samples // 4):
        basis = _random_basis(rng, p)
        if len(basis) > 6:
            continue
        x = _random_boundary(rng, min(p.boundary_cap, 10**4))
        full = 0
        for r in range(len(basis) + 1):
            for subset in combinations(basis.moduli, r):
                full += (-1) ** r * floor(x / prod(subset))
        assert count_legendre(basis, x).value == full, \
            f"pruned result differs from full subset sum at x={x}"
    return f"{p.samples // 4} unpruned subset sums matched"


def check_count_totient_bridge(rng, p):
    limit = min(2000 + p.samples * 10, 10**4)
    for x in range(1, 200):
        assert phi_identity_check(x), f"totient bridge broke at x={x}"
    for _ in range(p.samples):
        x = rng.randint(1, limit)
        assert phi_identity_check(x), f"totient bridge broke at x={x}"
    return f"x in [1, 200] exhaustively, {p.samples} samples up to {limit}"


# --- cycle subdivisions ------------------------------------------------------


def check_cycles_uniform_counts(rng, p):
    rounds = max(6, p.samples // 10)
    for _ in range(rounds):
        basis = _random_basis(rng, p, min_size=1)
        while len(basis) > 6:
            basis = basis.without(basis.largest())
        expected_total = basis.survivor_count
        chosen = rng.choice(basis.moduli)
        step = basis.without(chosen).survivor_count
        for k in range(1, chosen):
            boundary = Fraction(k * basis.period, chosen - 1)
            if boundary <= 10**5:
                got = count_by_sieve(basis, boundary).value
            else:
                got = count_legendre(basis, boundary).value
            assert got == k * step, \
                f"boundary K={k} of modulus {chosen} holds {got}, wanted {k * step}"
        assert (chosen - 1) * step == expected_total
        assert subdivision_boundary_check(basis)
    return f"{rounds} (basis, modulus) subdivisions"


def check_cycles_row_consistency(rng, p):
    rounds = max(6, p.samples // 10)
    for _ in range(rounds):
        basis = _random_basis(rng, p)
        rows = cycle_table(basis)
        for row in rows:
            assert row.interval_count * row.interval_size == basis.period
            assert row.interval_count * row.survivors_per_interval == basis.survivor_count
        assert total_intervals(basis) == sum(r.interval_count for r in rows)
    return f"{rounds} cycle tables"


def check_cycles_degenerate_two(rng, p):
    for basis in (make_prime_basis(1), make_prime_basis(4),
                  make_basis((2, 9, 25))):
        report = subdivision(basis, 2)
        assert len(report.intervals) == 1
        only = report.intervals[0]
        assert only.boundary == basis.period
        assert only.per_interval_count == basis.survivor_count
    return "3 bases, single whole-wave interval"


def check_cycles_fractional_boundaries(rng, p):
    hits = 0
    for basis in (make_prime_basis(3), make_prime_basis(4), make_prime_basis(5)):
        for chosen in basis:
            report = subdivision(basis, chosen)
            for iv in report.intervals:
                if iv.boundary.denominator != 1:
                    flat = count_legendre(basis, Fraction(floor(iv.boundary))).value
                    assert iv.cumulative_count == flat, \
                        f"survivor sits on fractional boundary {iv.boundary}"
                    hits += 1
    assert hits > 0
    return f"{hits} fractional boundaries, none occupied"


# --- pair censuses -----------------------------------------------------------


def check_pairs_census_exact(rng, p):
    rounds = max(8, p.samples // 8)
    for _ in range(rounds):
        basis = _random_basis(rng, p)
        while basis.period > p.pair_cap:
            basis = basis.without(basis.largest())
        spec = PairSpec(rng.randint(0, 50), rng.randint(0, 50))
        census = pair_count(basis, spec)
        centers = enumerate_pair_centers(basis, spec)
        assert len(centers) == census.predicted_count, \
            f"{len(centers)} centers vs predicted {census.predicted_count} " \
            f"for spec={spec}, basis={basis.moduli}"
    return f"{rounds} random censuses, enumeration matches prediction"


def check_pairs_twin_product(rng, p):
    for n in range(1, p.max_primes + 1):
        basis = make_prime_basis(n)
        predicted = pair_count(basis, PairSpec(1, 1)).predicted_count
        expected = prod(m - 2 for m in basis if m != 2)
        assert predicted == expected, f"twin product wrong for n={n}"
    return f"prime bases n=1..{p.max_primes}"


def check_pairs_merged_offsets(rng, p):
    for _ in range(p.samples):
        basis = _random_basis(rng, p)
        spec = PairSpec(rng.randint(0, 100), rng.randint(0, 100))
        census = pair_count(basis, spec)
        for f in census.per_modulus_factors:
            merged = (spec.left_offset + spec.right_offset) % f.modulus == 0
            assert f.factor == f.modulus - (1 if merged else 2), \
                f"factor at modulus {f.modulus} for spec={spec}"
    return f"{p.samples} specs, per-modulus factors"


def check_pairs_center_shift(rng, p):
    basis = make_prime_basis(4)
    period = basis.period
    for _ in range(p.samples):
        a, b = rng.randint(0, 20), rng.randint(0, 20)
        centers = set(enumerate_pair_centers(basis, PairSpec(a, b)))
        x = rng.randint(a + 1, 5 * period)
        direct = is_survivor(basis, x - a) and is_survivor(basis, x + b)
        folded = (x - 1) % period + 1
        assert direct == (folded in centers), \
            f"shifted center mismatch at x={x}, spec=({a},{b})"
    return f"{p.samples} off-wave integers vs folded centers"


def check_pairs_center_mirror(rng, p):
    for _ in range(max(8, p.samples // 8)):
        basis = _random_basis(rng, p)
        while basis.period > p.pair_cap:
            basis = basis.without(basis.largest())
        a, b = rng.randint(0, 30), rng.randint(0, 30)
        period = basis.period
        forward = set(enumerate_pair_centers(basis, PairSpec(a, b)))
        backward = set(enumerate_pair_centers(basis, PairSpec(b, a)))
        mirrored = {period - x if x < period else period for x in forward}
        assert mirrored == backward, f"mirror failed for spec=({a},{b})"
    return "mirrored center sets coincide"


# --- residue-vector ring -----------------------------------------------------


def check_ring_bijection(rng, p):
    for basis in (make_prime_basis(3), make_prime_basis(4), make_basis((4, 9, 25))):
        for x in range(basis.period):
            assert reconstruct(decompose(basis, x)) == x
    basis = make_prime_basis(p.max_primes)
    for _ in range(p.samples):
        x = rng.randint(0, basis.period - 1)
        assert reconstruct(decompose(basis, x)) == x
    return "3 bases exhaustively, large basis sampled"


def check_ring_survivor_vs_unit(rng, p):
    prime = make_prime_basis(4)
    for x in range(prime.period):
        v = decompose(prime, x)
        assert is_survivor_vector(v) == is_unit_vector(v) == is_survivor(prime, x)
    composite = make_basis((4, 9, 25))
    split = 0
    for x in range(composite.period):
        v = decompose(composite, x)
        assert is_survivor_vector(v) == is_survivor(composite, x)
        if is_unit_vector(v):
            assert is_survivor_vector(v)
        elif is_survivor_vector(v):
            split += 1
    assert split > 0, "expected survivor non-units over composite moduli"
    return f"prime basis: notions coincide; composite: {split} survivor non-units"


def check_ring_group_axioms(rng, p):
    basis = make_prime_basis(3)
    units = [decompose(basis, x) for x in range(basis.period)
             if is_survivor(basis, x)]
    assert len(units) == basis.survivor_count
    one = identity(basis)
    for u in units:
        assert multiply(u, one) == u
        assert multiply(u, inverse(u)) == one
        for v in units:
            w = multiply(u, v)
            assert is_unit_vector(w)
            assert w == multiply(v, u)
            for t in units:
                assert multiply(multiply(u, v), t) == multiply(u, multiply(v, t))
    big = make_prime_basis(p.max_primes)
    for _ in range(p.samples):
        u = decompose(big, rng.randint(0, big.period - 1))
        if not is_unit_vector(u):
            continue
        assert multiply(u, inverse(u)) == identity(big)
    return "full axiom table on one small basis; sampled inverses on a large one"


def check_ring_product_map(rng, p):
    for _ in range(p.samples):
        basis = _random_basis(rng, p)
        period = basis.period
        x, y = rng.randint(0, period - 1), rng.randint(0, period - 1)
        assert decompose(basis, x * y % period) == \
            multiply(decompose(basis, x), decompose(basis, y)), \
            f"product map failed at x={x}, y={y}, basis={basis.moduli}"
    return f"{p.samples} random products"


CHECKS = (
    ("wheel.periodicity", check_wheel_periodicity),
    ("wheel.symmetry", check_wheel_symmetry),
    ("wheel.count_product", check_wheel_count_product),
    ("wheel.one_kill_per_row", check_wheel_one_kill_per_row),
    ("wheel.order_independence", check_wheel_order_independence),
    ("wheel.composite_moduli", check_wheel_composite_moduli),
    ("count.method_agreement", check_count_method_agreement),
    ("count.peel_largest", check_count_peel_largest),
    ("count.peel_any", check_count_peel_any),
    ("count.monotone_steps", check_count_monotone_steps),
    ("count.period_shift", check_count_period_shift),
    ("count.reflection", check_count_reflection),
    ("count.pruning", check_count_pruning),
    ("count.totient_bridge", check_count_totient_bridge),
    ("cycles.uniform_counts", check_cycles_uniform_counts),
    ("cycles.row_consistency", check_cycles_row_consistency),
    ("cycles.degenerate_two", check_cycles_degenerate_two),
    ("cycles.fractional_boundaries", check_cycles_fractional_boundaries),
    ("pairs.census_exact", check_pairs_census_exact),
    ("pairs.twin_product", check_pairs_twin_product),
    ("pairs.merged_offsets", check_pairs_merged_offsets),
    ("pairs.center_shift", check_pairs_center_shift),
    ("pairs.center_mirror", check_pairs_center_mirror),
    ("ring.bijection", check_ring_bijection),
    ("ring.survivor_vs_unit", check_ring_survivor_vs_unit),
    ("ring.group_axioms", check_ring_group_axioms),
    ("ring.product_map", check_ring_product_map),
)


def run_checks(depth: str = "standard", seed: int = 0,
               names: list[str] | None = None) -> list[CheckResult]:
    """Run the named checks (all by default) and collect results."""
    if depth not in _PARAMS:
        raise ValueError(f"depth must be one of {DEPTHS}")
    params = _PARAMS[depth]
    selected = [(n, f) for n, f in CHECKS if names is None or n in names]
    if names is not None:
        known = {n for n, _ in CHECKS}
        unknown = [n for n in names if n not in known]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
    results = []
    for name, fn in selected:
        rng = random.Random(f"{seed}:{name}")
        try:
            detail = fn(rng, params)
            results.append(CheckResult(name, True, detail))
        except AssertionError as exc:
            results.append(CheckResult(name, False, str(exc) or "assertion failed"))
    return results
