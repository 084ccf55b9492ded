"""Rank-k numerical ranges of normal matrices.

The rank-k numerical range of a normal matrix depends only on its
eigenvalues and is a convex polygon, a segment, a point or empty.  This
package computes it exactly as a finite half-plane intersection, checks it
against two independent reference computations, and solves the inverse
problem: the smallest normal matrix with a prescribed polygonal range.
"""

from .errors import (
    BadRank,
    CollinearPolygon,
    DegenerateLine,
    DegenerateScale,
    NotConvex,
    NotOneRegular,
    NotPolygon,
    RankRangeError,
    TooLarge,
    UnboundedRegion,
    VerificationFailed,
)
from .estimators import KRegularExtender, PolygonSynthesizer, RankKNumericalRange
from .geometry import ConvexRegion, HalfPlane, Kind, convex_hull, intersect_half_planes, region_equal
from .kregular import (
    DirectionSet,
    ExtensionResult,
    brute_force_min_extension,
    count_antipodal,
    is_k_regular,
    minimal_extension,
    regular_lower_bound,
)
from .oracle import angle_sweep, brute_force_12, sweep_region
from .rank_range import CandidateSet, build_s0, lambda_k, minimal_half_planes
from .spectrum import NormalSpectrum, from_values, transform
from .synthesis import (
    PolygonSpec,
    SynthesisOutput,
    dimension_bound,
    polygon_to_support,
    prune_spectrum,
    synthesize,
    synthesize_degenerate,
)
from .tolerance import tolerances

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
