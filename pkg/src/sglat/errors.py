"""Exception types used across the package."""


class SglatError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(SglatError):
    """A table entry or element index is outside [0, order)."""


class NotAssociative(SglatError):
    """A multiplication table violates associativity."""

    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        i, j, k = self.triple
        super().__init__(
            message
            or f"associativity fails at ({i}, {j}, {k}): ({i}*{j})*{k} != {i}*({j}*{k})"
        )


class InvalidParams(SglatError):
    """Construction parameters are malformed."""


class NotRectangularBand(SglatError):
    """The semigroup is not a rectangular band (xyx = x fails)."""

    def __init__(self, pair=None, message=None):
        self.pair = tuple(pair) if pair is not None else None
        if message is None and self.pair is not None:
            x, y = self.pair
            message = f"not a rectangular band: ({x}*{y})*{x} != {x}"
        super().__init__(message or "not a rectangular band")


class NotChainLR(SglatError):
    """The semigroup is not a chain of left-zero / right-zero components."""

    def __init__(self, pair=None, message=None):
        self.pair = tuple(pair) if pair is not None else None
        if message is None and self.pair is not None:
            x, y = self.pair
            message = f"not a chain of left/right-zero components: {x}*{y} is neither {x} nor {y}"
        super().__init__(message or "not a chain of left/right-zero components")


class ParseError(SglatError):
    """Input text does not match the inclusion-system grammar."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"position {position}: {message}")


class UnboundVariable(SglatError):
    """A word mentions a variable the substitution does not cover."""


class UnknownClass(SglatError):
    """The class name is not in the registry."""


class NoStructuralForm(SglatError):
    """The class has no structural table predicate, only an identity system."""


class CharacterizationMismatch(SglatError):
    """The identity route and the structural route disagree on a membership."""


class OrderTooLarge(SglatError):
    """Enumeration is capped at order 6."""


class FormatError(SglatError):
    """A catalog or semigroup file is malformed."""


class ValidationError(SglatError):
    """A catalog file parsed but its contents fail validation."""
