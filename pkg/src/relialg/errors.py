"""Exception types shared across the package."""


class RelialgError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(RelialgError):
    """Two exponent tuples with different variable counts were combined."""


class InvalidCumulative(RelialgError):
    """A cumulative exponent vector must be non-increasing and non-negative."""


class EmptyIdeal(RelialgError):
    """An operation required at least one generator."""


class BoxTooLarge(RelialgError):
    """A state-space enumeration would exceed the configured cap."""


class NotSquarefree(RelialgError):
    """A squarefree-only operation received a generator with exponent > 1."""


class NotStable(RelialgError):
    """The ideal is not stable, so the requested construction does not apply."""


class NotSquarefreeStable(RelialgError):
    """The ideal is not squarefree stable."""


class NotStronglyStable(RelialgError):
    """The system is not strongly stable with respect to the given ordering."""


class NotQuasiStable(RelialgError):
    """Pommaret completion exceeded its degree cap (diagnostic, not a proof)."""


class CompletionOverflow(RelialgError):
    """An iterative completion or saturation exceeded its insertion cap."""


class TooManyGenerators(RelialgError):
    """Subset enumeration over the generators would be intractable."""


class TooManyComponents(RelialgError):
    """A factorial search over component orderings was refused."""


class NotBinarySystem(RelialgError):
    """The operation is defined for binary systems only."""


class SystemFileError(RelialgError):
    """A system file could not be parsed into a valid specification."""
