"""Arithmetic local constants and rank-growth towers for the nine CM
elliptic curves over Q."""

from .arith import is_prime, kronecker, valuation
from .catalog import CMCurve, LABELS, Rank, curve, curves, validate_catalog
from .constants import (
    Delta,
    DeltaSum,
    Prediction,
    PredictionBranch,
    SHAFAREVICH_TATE_CAVEAT,
    TowerSpec,
    delta_good_selfconj,
    delta_sum_for_tower,
    make_tower,
    predict_rank_growth,
)
from .errors import (
    BadReductionError,
    CMRankError,
    ConsistencyError,
    EllEqualsPError,
    InvalidDiscriminantError,
    NotPrimeError,
    NotSelfConjugateError,
    SearchExhaustedError,
    TowerInvariantError,
    UnknownCurveError,
)
from .pointcount import (
    CountResult,
    ReducedCurve,
    count_points,
    count_points_enumeration,
    is_supersingular,
    reduce_curve,
)
from .ringclass import (
    OrderData,
    RamifiedPrime,
    SplitType,
    class_number_by_forms,
    class_number_order,
    p_part_degree,
    ramified_primes,
    split_type,
    unit_index,
)
from .search import (
    RecipeCase,
    SearchResult,
    TableCell,
    Tables,
    generate_tables,
    search_m0,
    search_m1,
    search_m2,
)

__version__ = "0.1.0"
