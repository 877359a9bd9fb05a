class CPlacticError(Exception):
    """Base class for every error raised by cplactic."""


class InvalidInput(CPlacticError, ValueError):
    """The caller handed in a malformed word, column or tableau."""


class InvariantViolation(CPlacticError):
    """A structural guarantee of the algorithms failed to hold.

    These should never surface on a correct build; they exist so that a
    broken invariant is loud rather than silently producing garbage.
    """


class ComponentOverflow(CPlacticError):
    """An enumeration exceeded its configured size cap."""
