"""Exceptions shared across the package."""


class CapacityError(Exception):
    """A requested computation exceeds a configured size cap.

    Raised instead of silently attempting work that would exhaust memory or
    run unboundedly (oversized wheels, oracle counts, factorizations).  The
    message names the cap so callers can raise it deliberately.
    """
