"""Exact structure of sieve survivors: wheels, counts, cycles, pairs, units.

Everything is arbitrary-precision integer and exact-rational arithmetic;
nothing here rounds.  See the README for a tour and the ``sievecycles``
command for the CLI surface.
"""

from .basis import (
    DEFAULT_WHEEL_CAP,
    CoprimeBasis,
    Wheel,
    build_wheel,
    extend_wheel,
    is_survivor,
    iter_survivors,
    killer_index,
    make_basis,
    make_prime_basis,
)
from .counting import (
    DEFAULT_FACTOR_CAP,
    DEFAULT_ORACLE_CAP,
    METHODS,
    CountResult,
    count_by_sieve,
    count_generalized_meissel,
    count_legendre,
    count_meissel,
    count_periodic,
    count_strictly_below,
    distinct_prime_factors,
    euler_phi,
    exact_boundary,
    phi_identity_check,
)
from .cycles import (
    CycleTableRow,
    SubdivisionInterval,
    SubdivisionReport,
    cycle_table,
    subdivision,
    subdivision_boundary_check,
    total_intervals,
)
from .errors import CapacityError
from .pairs import PairCensus, PairFactor, PairSpec, enumerate_pair_centers, pair_count
from .render import format_exact
from .ring import (
    ResidueVector,
    decompose,
    identity,
    inverse,
    is_survivor_vector,
    is_unit_vector,
    multiply,
    reconstruct,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CheckResult",
    "CoprimeBasis",
    "CountResult",
    "CycleTableRow",
    "DEFAULT_FACTOR_CAP",
    "DEFAULT_ORACLE_CAP",
    "DEFAULT_WHEEL_CAP",
    "METHODS",
    "PairCensus",
    "PairFactor",
    "PairSpec",
    "ResidueVector",
    "SubdivisionInterval",
    "SubdivisionReport",
    "Wheel",
    "build_wheel",
    "count_by_sieve",
    "count_generalized_meissel",
    "count_legendre",
    "count_meissel",
    "count_periodic",
    "count_strictly_below",
    "cycle_table",
    "decompose",
    "distinct_prime_factors",
    "enumerate_pair_centers",
    "euler_phi",
    "exact_boundary",
    "extend_wheel",
    "format_exact",
    "identity",
    "inverse",
    "is_survivor",
    "is_survivor_vector",
    "is_unit_vector",
    "iter_survivors",
    "killer_index",
    "make_basis",
    "make_prime_basis",
    "multiply",
    "pair_count",
    "phi_identity_check",
    "reconstruct",
    "run_checks",
    "subdivision",
    "subdivision_boundary_check",
    "total_intervals",
]
