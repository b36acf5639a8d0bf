"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: precondition-type errors exit with 2,
resource caps with 3 and parse errors with 4.
"""


class PortraitsError(Exception):
    """Base class for all library errors."""


class PreconditionError(PortraitsError, ValueError):
    """An operation was called outside its documented domain."""


class DegenerateInputError(PreconditionError):
    """Zero polynomial (or similar) where a nonzero one is required."""


class NotAMorphismError(PreconditionError):
    """The homogeneous pair has vanishing resultant."""


class ConstantMapError(PreconditionError):
    """The map collapses to a constant after cancelling common factors."""


class PoleAtPlaceError(PreconditionError):
    """Reduction of an element with negative valuation was requested."""


class ResourceLimitError(PortraitsError):
    """A configured degree cap would be exceeded."""


class ParseError(PortraitsError, ValueError):
    """Malformed expression text; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ZeroDivisorFound(PortraitsError):
    """A quotient ring turned out not to be a field.

    Raised with the ring and a proper monic factor of its modulus; callers
    working with "any root" semantics split the modulus and retry.
    """

    def __init__(self, field, factor):
        super().__init__("modulus splits")
        self.field = field
        self.factor = factor
