"""Exception hierarchy shared by all modules.

Every error raised on bad input or violated preconditions derives from
CSemigroupError, so callers (and the CLI) can distinguish validation
failures from genuine bugs, which surface as InternalInconsistency.
"""


class CSemigroupError(Exception):
    """Base class for all domain errors."""


class DimensionMismatch(CSemigroupError):
    pass


class NonPointedCone(CSemigroupError):
    pass


class NonSimplicialCone(CSemigroupError):
    pass


class SingularRays(CSemigroupError):
    pass


class NotASemigroup(CSemigroupError):
    """Gap-set closure violated; carries a witness triple (g, a, b) with g = a + b."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GapBoundExceeded(CSemigroupError):
    pass


class NotInSemigroup(CSemigroupError):
    pass


class ZeroShift(CSemigroupError):
    pass


class NoGaps(CSemigroupError):
    pass


class IncompleteGapSet(CSemigroupError):
    """The gap set is infinite (input is not a C-semigroup), so operations
    needing the full finite gap set are unavailable."""


class NotAnExtremalRay(CSemigroupError):
    pass


class InvalidGluingData(CSemigroupError):
    pass


class InvalidExtensionData(CSemigroupError):
    pass


class InvalidParameter(CSemigroupError):
    pass


class NotFullCone(CSemigroupError):
    pass


class NotAnAntichain(CSemigroupError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotOversemigroup(CSemigroupError):
    pass


class OutOfBox(CSemigroupError):
    pass


class BoxTooSmall(CSemigroupError):
    pass


class InternalInconsistency(CSemigroupError):
    """Two routes that a theorem makes equivalent disagreed; an implementation bug."""
