"""h-fold sumsets of finite integer sets: enumeration of the cardinality
range R(h,k) with certified gap windows, and the explicit constructions
(filling sets, dense/sparse blocks, disjoint unions, truncated generating
functions) that witness it."""

from ._kernels import BACKEND
from .core import (
    Diameter,
    diameter,
    disjoint_union,
    flatten,
    iterated_sumset,
    lattice_sumset,
    normalize,
    profile,
    restricted_sumset,
    sumset_size,
)
from .series import (
    RationalSeriesSpec,
    TruncatedSeries,
    binomial_series,
    closed_form_S,
    closed_form_T,
    expand_rational,
    series_multiply,
    series_of_set,
)
from .constructions import (
    DeltaSet,
    FamilyParams,
    FillingInfeasibleError,
    bounding_interval,
    build_filling_set,
    delta_set,
    dense_B,
    family_Ab_member,
    g_formula,
    h3_path_sets,
    phi_extend,
    shifted_filling_family,
    sparse_S,
    sparse_T,
)
from .enumeration import (
    RangeReport,
    TupleAtlas,
    achieved_sizes,
    certify_gaps,
    check_interval_image,
    conjecture51_scan,
    enumerate_normalized,
    find_witness,
    graph_connectivity,
    restricted_range,
    tuple_atlas,
    verify_diameter_lemmas,
    verify_range,
)

__version__ = "0.1.0"
