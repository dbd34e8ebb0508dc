"""Exception types shared across the toolkit.

Every error carries a stable ``code`` string so the CLI can report
failures uniformly.
"""


class TslabError(Exception):
    """Base class for all toolkit errors."""

    code = "ERROR"


class AmbientMismatchError(TslabError):
    code = "AMBIENT_MISMATCH"


class NotDecomposableError(TslabError):
    code = "NOT_DECOMPOSABLE"


class OffGeodesicError(TslabError):
    code = "OFF_GEODESIC"


class DistanceMismatchError(TslabError):
    code = "DIST_MISMATCH"


class InvalidConfigError(TslabError):
    code = "INVALID_CONFIG"


class NumericalFailureError(TslabError):
    code = "NUMERICAL_FAILURE"


class ContinuationStallError(TslabError):
    code = "CONTINUATION_STALL"


class HypothesisViolatedError(TslabError):
    code = "HYPOTHESIS_VIOLATED"


class EqualPointsError(TslabError):
    code = "EQUAL_POINTS"


class NotDistinctError(TslabError):
    code = "NOT_DISTINCT"


class SingularPointError(TslabError):
    code = "SINGULAR_POINT"


class UnsupportedError(TslabError):
    code = "UNSUPPORTED"
