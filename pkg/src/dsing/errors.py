"""Exception types raised across the package."""


class DsingError(Exception):
    """Base class for all library errors."""


class OrderMismatchError(DsingError, ValueError):
    """Two group elements (or matrices) of different order were combined."""


class ConnectingSetError(DsingError, ValueError):
    """A connecting set violates one of the defining conditions.

    ``condition`` is one of ``"i"`` (not closed under inverses), ``"ii"``
    (contains the identity), ``"iii"`` (does not generate the group) or
    ``"parse"`` for malformed text.
    """

    def __init__(self, condition: str, message: str, offending=None):
        super().__init__(message)
        self.condition = condition
        self.offending = offending


class InvalidDivisorError(DsingError, ZeroDivisionError):
    pass


class NotReducedError(DsingError, ValueError):
    """Polynomial degree is too large for the requested circulant size."""


class ShapeError(DsingError, ValueError):
    pass


class StructureError(DsingError, ValueError):
    """Block structure of a dihedral adjacency matrix is not as expected."""


class PreconditionError(DsingError, ValueError):
    pass
