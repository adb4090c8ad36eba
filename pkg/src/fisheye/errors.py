"""Exception hierarchy.

Every error raised by the library derives from :class:`FisheyeError`, which
is itself a :class:`ValueError` so callers that only care about bad input can
catch the builtin.
"""


class FisheyeError(ValueError):
    """Base class for all library errors."""


class PoleAtNonPositiveInteger(FisheyeError):
    """Gamma-type function evaluated at 0, -1, -2, ..."""


class ParameterPole(FisheyeError):
    """A Gamma factor inside a closed form hits a pole."""


class NonConvergent(FisheyeError):
    """A series did not reach the requested tolerance within the term cap."""


class PoleInC(FisheyeError):
    """Hypergeometric lower parameter is a non-positive integer."""


class DimensionParity(FisheyeError):
    """Formula family requires the other parity of the dimension N."""


class DimensionMismatch(FisheyeError):
    """Point dimension does not match the medium dimension."""


class BadDimension(FisheyeError):
    """Dimension N outside the supported range (N >= 2)."""


class CenterSingularity(FisheyeError):
    """Inversion evaluated at its own center."""


class ResonantDegree(FisheyeError):
    """Degree lies on a resonance where the Green's function does not exist."""


class CoincidentPoints(FisheyeError):
    """Observation point equals the source point."""


class OriginSingularity(FisheyeError):
    """Central Green's function evaluated at the origin."""


class OriginSource(FisheyeError):
    """Representation or construction undefined for a source at the origin."""


class RepresentationDimensionMismatch(FisheyeError):
    """Representation only valid for a different dimension."""


class TooCloseToSingularity(FisheyeError):
    """Finite-difference stencil would straddle a singular point."""


class FieldEvaluationFailure(FisheyeError):
    """Field returned a non-finite value or raised on the stencil."""
