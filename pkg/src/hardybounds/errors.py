"""Exception types shared across the package."""


class MeasureError(ValueError):
    """Invalid measure construction or malformed interval query."""


class QuadratureError(RuntimeError):
    """Numeric integration failed to meet the requested tolerance."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class ResourceError(RuntimeError):
    """A resource cap (atom count, recursion budget) would be exceeded."""


class SpecParseError(ValueError):
    """Measure spec rejected; `path` points at the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
