"""Exception hierarchy shared by every module."""


class PolyshellError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(PolyshellError, ValueError):
    """Monomials of different arity were combined."""


class DomainError(PolyshellError, ValueError):
    """An operation was called outside its domain (non-divisor, empty ideal, ...)."""


class MembershipError(PolyshellError, ValueError):
    """A monomial expected to lie in an order ideal does not."""


class SizeError(PolyshellError):
    """A configured size cap would be exceeded."""

    def __init__(self, message: str, cap: int, requested: int):
        super().__init__(message)
        self.cap = cap
        self.requested = requested


class InvariantError(PolyshellError, RuntimeError):
    """An internal invariant failed. Always indicates a bug."""


class PathError(PolyshellError, ValueError):
    """Malformed lattice path, or a pair of paths with incompatible shape."""
