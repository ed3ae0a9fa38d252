"""Exception types raised by permhopf."""


class PermhopfError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class InvalidPermutation(PermhopfError, ValueError):
    pass


class InvalidComposition(PermhopfError, ValueError):
    pass


class DegreeMismatch(PermhopfError, ValueError):
    pass


class SpaceMismatch(PermhopfError, TypeError):
    """Two operands live in different (algebra, basis) spaces."""


class DegreeGuardError(PermhopfError):
    """A computation would enumerate a symmetric group above the configured guard."""


class ElementSyntaxError(PermhopfError, ValueError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
