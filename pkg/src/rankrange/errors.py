"""Exception hierarchy shared by all modules."""


class RankRangeError(Exception):
    """Base class for every error raised by this package."""


class DegenerateLine(RankRangeError, ValueError):
    """Two points too close to define a directed line."""


class UnboundedRegion(RankRangeError, ValueError):
    """A half-plane family whose intersection is nonempty but unbounded."""


class DegenerateScale(RankRangeError, ValueError):
    """Scaling factor of an affine transform is (numerically) zero."""


class BadRank(RankRangeError, ValueError):
    """Requested rank k lies outside the admissible range."""


class TooLarge(RankRangeError, ValueError):
    """Instance exceeds the size guard of an exhaustive routine."""


class NotOneRegular(RankRangeError, ValueError):
    """Direction set is not 1-regular, so no polygon has these normals."""


class NotPolygon(RankRangeError, ValueError):
    """Operation requires a non-degenerate polygon."""


class NotConvex(RankRangeError, ValueError):
    """Vertex list is not strictly convex."""


class CollinearPolygon(RankRangeError, ValueError):
    """All vertices lie on one line."""


class VerificationFailed(RankRangeError, RuntimeError):
    """Internal self-check failed. Indicates a bug or severe ill-conditioning."""
