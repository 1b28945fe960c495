"""Exception hierarchy.

Everything a caller can trigger by passing out-of-contract data derives from
:class:`PreconditionError` (the CLI maps it to exit code 2).  Failures of an
internal cross-check derive from :class:`InconsistencyError` (exit code 3).
"""


class P2CohsysError(Exception):
    pass


class PreconditionError(P2CohsysError, ValueError):
    pass


class FeasibilityError(PreconditionError):
    """No rank-2 bundle with the requested Segre invariant exists."""


class NegativeDimensionError(PreconditionError):
    pass


class EmptyGrassmannianError(PreconditionError):
    pass


class RangeError(PreconditionError):
    """c2 lies outside every window covered by a closed form."""


class CriticalInputError(PreconditionError):
    pass


class GenerationError(P2CohsysError):
    pass


class InconsistencyError(P2CohsysError):
    pass
