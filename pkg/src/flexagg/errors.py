"""Exception hierarchy shared by all flexagg modules."""


class FlexaggError(Exception):
    """Base class for all errors raised by this package."""


class ValidationFailure(FlexaggError):
    """Base class for input/domain validation errors (CLI exit code 2)."""


class InfeasibleRequest(ValidationFailure):
    """Requested energy is negative or exceeds what the window can deliver."""


class BadWindow(ValidationFailure):
    """Arrival/departure pair is not a valid window within the horizon."""


class NonpositivePower(ValidationFailure):
    """Charging power cap must be strictly positive."""


class ParseError(ValidationFailure):
    """A fleet or series file could not be parsed."""


class LengthMismatch(ValidationFailure):
    """Vector lengths do not agree."""


class DimensionMismatch(LengthMismatch):
    """Objective dimensions do not match the aggregate's horizon."""


class WindowMismatch(ValidationFailure):
    """Operands belong to different arrival/departure windows."""


class BadSubset(ValidationFailure):
    """Facet bounds are defined only for nonempty proper subsets of the horizon."""


class HorizonTooLarge(ValidationFailure):
    """Exhaustive membership is guarded to small horizons."""


class TooLarge(ValidationFailure):
    """Brute-force enumeration would exceed its guard."""


class EmptyCloud(ValidationFailure):
    """Support of an empty point cloud is undefined."""


class FleetMismatch(ValidationFailure):
    """Fleet does not match the population a solution was computed for."""


class SolverFailure(FlexaggError):
    """The solver could not produce a usable answer (CLI exit code 3)."""
