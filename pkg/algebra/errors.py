"""
Exception hierarchy for the Hecke algebra toolkit.

Every error subclasses a builtin as well, so callers that only know
about ValueError / RuntimeError keep working.
"""


class HeckeError(Exception):
    """Root of all toolkit errors."""


class RankMismatchError(HeckeError, ValueError):
    """Operands live in symmetric groups of different rank."""


class PreconditionError(HeckeError, ValueError):
    """A stated precondition of an operation does not hold."""


class RankBoundError(HeckeError, ValueError):
    """A full-basis computation was requested above the configured rank bound."""


class VerificationError(HeckeError, RuntimeError):
    """A proven identity failed to verify."""
