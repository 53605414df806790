"""Exception hierarchy shared by all pisimp modules."""


class PisimpError(ValueError):
    """Base class for every error raised by pisimp."""


class NonMonotone(PisimpError):
    pass


class ValueOutOfRange(PisimpError):
    pass


class LengthMismatch(PisimpError):
    pass


class TypeMismatch(PisimpError):
    """Raised when composing maps whose codomain and domain disagree."""


class IndexOutOfRange(PisimpError):
    pass


class SizeLimitExceeded(PisimpError):
    pass


class WordSyntaxError(PisimpError):
    pass


class IllTyped(PisimpError):
    """A generator word whose inferred superscripts fall out of range."""

    def __init__(self, message, position=None, size=None):
        super().__init__(message)
        self.position = position
        self.size = size


class NonTermination(PisimpError):
    pass


class NotTotal(PisimpError):
    pass


class WrongFlavor(PisimpError):
    pass


class ShapeMismatch(PisimpError):
    pass


class NotDeltaWord(PisimpError):
    pass


class SearchSpaceTooLarge(PisimpError):
    pass


class InvalidStructure(PisimpError):
    """Raised when a category, functor, transformation or monad fails validation.

    ``problems`` holds the list returned by the matching ``validate_*`` call.
    """

    def __init__(self, what, problems):
        self.problems = list(problems)
        head = "; ".join(self.problems[:3])
        more = f" (+{len(self.problems) - 3} more)" if len(self.problems) > 3 else ""
        super().__init__(f"invalid {what}: {head}{more}")


class FixtureError(PisimpError):
    pass
