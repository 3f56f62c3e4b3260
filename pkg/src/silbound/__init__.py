"""Data-dependent ceilings on silhouette quality.

Given any dissimilarity matrix, this package computes a sharp upper bound on
every point's silhouette width and on the best average silhouette width any
clustering can reach, plus the machinery around that number: silhouette
evaluation, an exact small-n optimum oracle, baseline clusterers, and an
early-stopping model-selection loop certified by the bound.
"""

from ._kernels import backend
from .baselines import (
    Dendrogram,
    KMeansConfig,
    MedoidState,
    cut_dendrogram,
    hac,
    kmeans,
    kmedoids_asw,
    make_blobs,
)
from .bounds import BoundReport, bound_report, lambda_quotient, pointwise_bound, witness_clustering
from .errors import (
    AlgorithmFailure,
    AllZeroRow,
    Asymmetric,
    EmptyCluster,
    InputFormatError,
    KappaOutOfRange,
    KOutOfRange,
    KTooLarge,
    LabelOutOfRange,
    LambdaOutOfRange,
    NegativeEntry,
    NonBinaryInput,
    NonFiniteEntry,
    NonFiniteInput,
    NonPositiveUB,
    NonzeroDiagonal,
    NotSquare,
    SilboundError,
    SizeMismatch,
    TooFewPoints,
    TooLarge,
    ValidationError,
    ZeroVector,
)
from .matrix import (
    METRICS,
    DissimilarityMatrix,
    PointSet,
    SortedDissimilarity,
    build_matrix,
    sort_rows,
    validate_matrix,
)
from .oracle import (
    MAX_ENUM_N,
    KBest,
    OptimalResult,
    PartitionConstraints,
    PartitionIterator,
    best_per_k,
    enumerate_partitions,
    optimal_asw,
)
from .selection import (
    NOT_CLUSTERABLE,
    SELECTED,
    EarlyStopConfig,
    SelectionResult,
    SweepEntry,
    no_stop_sweep,
    select,
    worst_case_relative_error,
)
from .silhouette import Clustering, SilhouetteReport, asw, silhouette_report

__version__ = "0.1.0"

__all__ = [
    "AlgorithmFailure",
    "AllZeroRow",
    "Asymmetric",
    "BoundReport",
    "Clustering",
    "Dendrogram",
    "DissimilarityMatrix",
    "EarlyStopConfig",
    "EmptyCluster",
    "InputFormatError",
    "KBest",
    "KMeansConfig",
    "KOutOfRange",
    "KTooLarge",
    "KappaOutOfRange",
    "LabelOutOfRange",
    "LambdaOutOfRange",
    "MAX_ENUM_N",
    "METRICS",
    "MedoidState",
    "NOT_CLUSTERABLE",
    "NegativeEntry",
    "NonBinaryInput",
    "NonFiniteEntry",
    "NonFiniteInput",
    "NonPositiveUB",
    "NonzeroDiagonal",
    "NotSquare",
    "OptimalResult",
    "PartitionConstraints",
    "PartitionIterator",
    "PointSet",
    "SELECTED",
    "SelectionResult",
    "SilboundError",
    "SilhouetteReport",
    "SizeMismatch",
    "SortedDissimilarity",
    "SweepEntry",
    "TooFewPoints",
    "TooLarge",
    "ValidationError",
    "ZeroVector",
    "asw",
    "backend",
    "best_per_k",
    "bound_report",
    "build_matrix",
    "cut_dendrogram",
    "enumerate_partitions",
    "hac",
    "kmeans",
    "kmedoids_asw",
    "lambda_quotient",
    "make_blobs",
    "no_stop_sweep",
    "optimal_asw",
    "pointwise_bound",
    "select",
    "silhouette_report",
    "sort_rows",
    "validate_matrix",
    "witness_clustering",
    "worst_case_relative_error",
]
