"""Exception types shared across the package."""


class FlagcalcError(Exception):
    """Base class for all library errors."""


class PreconditionError(FlagcalcError):
    """An operation was called outside its stated domain."""


class DegenerateConicError(PreconditionError):
    """The conic parameters satisfy q.m = 0, so the curve is a line pair."""


class EmptySystemError(PreconditionError):
    """A member of a linear system was requested but the system is empty."""


class SchemaError(FlagcalcError):
    """A JSON document does not match the documented schema."""
