"""Exact censuses of distinct triangles and distances in finite point sets."""
from .bounds import (
    CoverInstance,
    CoverSolution,
    ResourceError,
    lemma_distinct_bound,
    lemma_max_dds_bound,
    lemma_repeat_bound,
    min_cover_with_repeats,
    min_triple_cover,
)
from .census import CensusReport, PointCensus, TriangleClass, census, point_census, point_censuses
from .exactnum import ContractError, MixedRadicandError, QuadExt, parse, render
from .generators import (
    GeneratorSpec,
    fig1_config,
    lattice_configuration,
    lattice_points,
    orthoplex,
    pentagon,
    simplex,
    square_center,
)
from .geometry import (
    Configuration,
    DegenerateInputError,
    DistanceMatrix,
    EmptyLocusError,
    NotEuclideanError,
    circumcenter,
    embedding_rank,
)
from .kernels import BACKEND
from .search import (
    SearchResult,
    SearchSpec,
    augment_orthoplex,
    case_predicates,
    is_orthoplex,
    lattice_enumerate,
    perturb_orthoplex,
)

__version__ = "0.1.0"
