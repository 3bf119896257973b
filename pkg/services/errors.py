"""
Exception hierarchy shared by all services. The CLI maps these to exit codes.
"""


class TilingError(Exception):
    """Root of every error raised by this package."""


class RangeError(TilingError, ValueError):
    pass


class PlacementError(TilingError):
    """A tile placement that breaks the black/white corner rules."""

    def __init__(self, message, orientation=None, anchor=None):
        super().__init__(message)
        self.orientation = orientation
        self.anchor = anchor


class TilingValidationError(TilingError):
    def __init__(self, report):
        super().__init__(f"invalid tiling: {len(report.violations)} violation(s), first: {report.violations[0]}")
        self.report = report


class ModeError(TilingError):
    pass


class DomainError(TilingError, ValueError):
    pass


class BudgetError(TilingError):
    pass


class AccuracyError(TilingError):
    pass


class BoundaryWeightError(TilingError):
    pass


class InvariantError(TilingError):
    pass


class ConfigError(TilingError):
    pass
