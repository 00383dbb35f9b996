"""Exception hierarchy.  Every error raised on purpose derives from ``BorelSegError``."""


class BorelSegError(Exception):
    """Base class for domain errors."""


class DimensionError(BorelSegError, ValueError):
    """Terms or ideals live in rings with different numbers of variables."""


class MoveError(BorelSegError, ValueError):
    """An elementary move was applied outside its domain."""


class IncomparableError(BorelSegError, ValueError):
    """Borel comparison of terms of different degrees."""


class OutOfRangeError(BorelSegError, ValueError):
    pass


class ConstantTermError(BorelSegError, ValueError):
    """min/max index requested for the constant term 1."""


class ValidationError(BorelSegError, ValueError):
    """Input does not satisfy a structural requirement (Borel, saturated, ...)."""


class DomainError(BorelSegError, ValueError):
    """The operation is undefined for this input."""


class ParseError(BorelSegError, ValueError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos} in {text!r}"
        super().__init__(message)


class StratumTooLarge(BorelSegError):
    pass


class InternalConsistencyError(BorelSegError, AssertionError):
    """A check that is guaranteed by theory failed."""
