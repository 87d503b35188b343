"""Exception types shared across the package."""


class CdlatError(Exception):
    """Base class for all cdlat errors."""


class InvalidParameterError(CdlatError, ValueError):
    """A constructor or operation received an out-of-contract parameter."""


class InvalidActionError(CdlatError, ValueError):
    """A semidirect-product action does not define a group automorphism."""


class InvalidStateError(CdlatError):
    """An operation was applied to an object outside its precondition."""


class SizeGuardError(CdlatError):
    """A construction would exceed the configured maximum group order."""


class LatticeExplosionError(CdlatError):
    """Subgroup enumeration exceeded the configured subgroup cap."""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


class SpecSyntaxError(CdlatError, ValueError):
    """Group-spec text failed to tokenize or parse."""

    def __init__(self, message: str, line: int, column: int, expected: tuple = ()):
        super().__init__(message)
        self.line = line
        self.column = column
        self.expected = tuple(expected)


class SpecSemanticError(CdlatError, ValueError):
    """Group-spec text parsed but carries invalid parameters."""

    def __init__(self, message: str, parameter: str = ""):
        super().__init__(message)
        self.parameter = parameter
