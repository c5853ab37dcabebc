"""Exception hierarchy.

``SuperheapError`` covers bad input (usage-level problems); ``NonUnitError``
is raised when an operation needs an invertible even element and does not
get one.
"""


class SuperheapError(ValueError):
    pass


class GeneratorMismatch(SuperheapError):
    """Operands live in Grassmann algebras with different generator counts."""


class IndexRangeError(SuperheapError):
    pass


class ParityError(SuperheapError):
    pass


class ParseError(SuperheapError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class PointError(SuperheapError):
    """A tuple of components does not form a valid T-point."""


class UnknownNameError(SuperheapError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NonUnitError(ArithmeticError):
    """An even element with zero body was used where an inverse is needed."""
