"""Exception types raised by the cogs package."""


class CogError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(CogError, ValueError):
    pass


class InvalidDimensionError(InvalidArgumentError):
    pass


class InvalidShiftError(InvalidArgumentError):
    pass


class InvalidParamsError(InvalidArgumentError):
    """Free phase parameters have the wrong shape for their dimension."""


class NotACogError(CogError):
    """The input vector is not a cog at the requested tolerance.

    The :class:`~cogs.verify.VerificationReport` that failed, when there is
    one, is kept on ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CorruptedCogError(CogError):
    """A vector claimed to be a cog violates a property every cog has."""


class PhaseConstraintError(CogError, ValueError):
    """A phase list violates one of the constraints on cog phases.

    ``kind`` is one of ``'theta0'``, ``'pair_sum'`` or ``'half_index'``;
    ``index`` is the offending phase index.
    """

    def __init__(self, message, kind, index):
        super().__init__(message)
        self.kind = kind
        self.index = index


class AmbiguousProjectionError(CogError):
    def __init__(self, message, bin):
        super().__init__(message)
        self.bin = bin


class EnumerationTooLargeError(CogError):
    pass


class InvariantBreachError(CogError):
    """An internal invariant failed; this indicates a bug, not bad input."""
