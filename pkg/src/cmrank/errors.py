"""Exception hierarchy. Every domain failure raises a CMRankError subclass,
so callers (and the CLI) can separate domain errors from genuine bugs."""


class CMRankError(Exception):
    """Base class for all domain errors raised by this package."""


class UnknownCurveError(CMRankError):
    """Curve label outside the nine-element catalog."""


class NotPrimeError(CMRankError):
    """An argument required to be prime is not."""


class BadReductionError(CMRankError):
    """The prime divides the curve conductor."""


class NotSelfConjugateError(CMRankError):
    """The prime splits in the CM field, so the primes above it are swapped
    by complex conjugation."""


class EllEqualsPError(CMRankError):
    """The residue characteristic coincides with p; the local-constant
    criterion only applies away from p."""


class InvalidDiscriminantError(CMRankError):
    """Not a discriminant of a positive-definite binary quadratic form."""


class SearchExhaustedError(CMRankError):
    """No conductor prime below the bound satisfies the recipe."""


class TowerInvariantError(CMRankError):
    """A dihedral tower specification violates its construction invariants."""


class ConsistencyError(CMRankError):
    """An internal cross-check failed; indicates corrupted data or a bug."""
