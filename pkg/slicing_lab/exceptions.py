class SlicingLabError(Exception):
    """Base class for every error raised by the simulator."""


class ConfigurationError(SlicingLabError):
    """A scenario or parameter set violates its invariants."""

    def __init__(self, message, errors=None):
        super().__init__(message)
        self.errors = errors or {}


class GeometryError(SlicingLabError):
    """Singular or uncovered geometry (e.g. zero 3-D distance)."""


class ShapeMismatchError(SlicingLabError):
    pass


class StaleCacheError(SlicingLabError):
    """backward() called without a matching forward() cache."""


class ConstraintViolation(SlicingLabError):
    """One of the per-slot slicing constraints or reward conservation failed."""


class ScenarioMismatchError(SlicingLabError):
    """Runs handed to a comparison differ outside the varied axis."""
