class CatdetError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CatdetError, ValueError):
    """Structurally invalid input (shape, Hessenberg pattern, boundary order)."""


class DomainError(CatdetError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class RangeError(CatdetError, ValueError):
    """Size or index argument out of the accepted range."""


class CapacityError(CatdetError):
    """Result would exceed a caller-supplied capacity."""

    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} results exceed capacity {cap}")
