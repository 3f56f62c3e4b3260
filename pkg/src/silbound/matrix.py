"""Dissimilarity matrices: construction from points, validation, row sorting.

A valid dissimilarity matrix is square, nonnegative, zero on the diagonal,
symmetric, finite, and has no all-zero row.  The triangle inequality is not
required, so arbitrary precomputed matrices are accepted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AllZeroRow,
    Asymmetric,
    NegativeEntry,
    NonBinaryInput,
    NonFiniteEntry,
    NonFiniteInput,
    NonzeroDiagonal,
    NotSquare,
    TooFewPoints,
    ValidationError,
    ZeroVector,
)

METRICS = ("euclidean", "cosine", "correlation", "jaccard")

# |d_ij - d_ji| <= SYMMETRY_RTOL * max(1, |d_ij|) is accepted and averaged away;
# CSV round-trips routinely introduce last-ulp asymmetry.
SYMMETRY_RTOL = 1e-9


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PointSet:
    """n observations of m real features, all finite."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 2 or v.shape[1] < 1:
            raise ValidationError(f"points must form an n x m matrix with m >= 1, got shape {v.shape}")
        if v.shape[0] < 2:
            raise TooFewPoints(v.shape[0], 2)
        bad = np.argwhere(~np.isfinite(v))
        if bad.size:
            raise NonFiniteInput(int(bad[0, 0]), int(bad[0, 1]))
        object.__setattr__(self, "values", _frozen(v))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class DissimilarityMatrix:
    """Validated pairwise dissimilarities.  Construct via ``validate_matrix``
    or ``build_matrix``; the array is read-only and safe to share."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class SortedDissimilarity:
    """Each row's off-diagonal distances sorted ascending, plus prefix sums.

    ``rows`` has shape (n, n-1); ``prefix[i][k]`` is the sum of the k smallest
    distances from point i, with ``prefix[i][0] = 0``, so any contiguous range
    sum is one subtraction.
    """

    rows: np.ndarray
    prefix: np.ndarray

    @property
    def n(self) -> int:
        return self.rows.shape[0]


def build_matrix(points, metric: str = "euclidean") -> DissimilarityMatrix:
    """Compute the pairwise dissimilarity matrix of a point set.

    Metrics: ``euclidean`` (L2 norm of coordinate differences), ``cosine``
    (1 - x.y / |x||y|), ``correlation`` (1 - Pearson(x, y)), ``jaccard``
    (1 - |x AND y| / |x OR y|, binary data only).

    Raises ``ZeroVector`` for cosine on an all-zero point or correlation on a
    constant point, ``NonBinaryInput`` for non-binary jaccard data, and
    ``AllZeroRow`` when some point has zero dissimilarity to every other.
    """
    if not isinstance(points, PointSet):
        points = PointSet(np.asarray(points, dtype=np.float64))
    if metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; choose from {METRICS}")
    x = points.values

    if metric == "euclidean":
        sq = np.einsum("ij,ij->i", x, x)
        d = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
        np.maximum(d, 0.0, out=d)
        np.sqrt(d, out=d)
    elif metric == "cosine":
        norms = np.linalg.norm(x, axis=1)
        zero = np.flatnonzero(norms == 0)
        if zero.size:
            raise ZeroVector(int(zero[0]), "cosine")
        d = 1.0 - (x @ x.T) / np.outer(norms, norms)
    elif metric == "correlation":
        centered = x - x.mean(axis=1, keepdims=True)
        norms = np.linalg.norm(centered, axis=1)
        zero = np.flatnonzero(norms == 0)
        if zero.size:
            raise ZeroVector(int(zero[0]), "correlation")
        d = 1.0 - (centered @ centered.T) / np.outer(norms, norms)
    else:
        bad = np.argwhere((x != 0.0) & (x != 1.0))
        if bad.size:
            i, j = int(bad[0, 0]), int(bad[0, 1])
            raise NonBinaryInput(i, j, float(x[i, j]))
        ones = x.sum(axis=1)
        inter = x @ x.T
        union = ones[:, None] + ones[None, :] - inter
        with np.errstate(invalid="ignore"):
            d = 1.0 - inter / union
        d[union == 0] = 0.0  # two empty binary points count as identical

    d = (d + d.T) / 2.0
    np.fill_diagonal(d, 0.0)
    np.maximum(d, 0.0, out=d)
    return validate_matrix(d)


def validate_matrix(raw) -> DissimilarityMatrix:
    """Check the dissimilarity-matrix contract and return the validated matrix.

    Requirements: square with n >= 2, finite, nonnegative, zero diagonal,
    symmetric within ``SYMMETRY_RTOL`` (then symmetrized by averaging), and no
    all-zero row.  Each violation raises the error naming the broken rule and
    the first offending entry.
    """
    d = np.array(raw, dtype=np.float64)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise NotSquare(d.shape)
    n = d.shape[0]
    if n < 2:
        raise TooFewPoints(n, 2)

    bad = np.argwhere(~np.isfinite(d))
    if bad.size:
        i, j = int(bad[0, 0]), int(bad[0, 1])
        raise NonFiniteEntry(i, j, float(d[i, j]))
    bad = np.argwhere(d < 0)
    if bad.size:
        i, j = int(bad[0, 0]), int(bad[0, 1])
        raise NegativeEntry(i, j, float(d[i, j]))
    diag = np.flatnonzero(np.diagonal(d) != 0)
    if diag.size:
        i = int(diag[0])
        raise NonzeroDiagonal(i, float(d[i, i]))
    gap = np.abs(d - d.T)
    tol = SYMMETRY_RTOL * np.maximum(1.0, np.abs(d))
    bad = np.argwhere(gap > tol)
    if bad.size:
        i, j = int(bad[0, 0]), int(bad[0, 1])
        raise Asymmetric(i, j, float(d[i, j]), float(d[j, i]))
    d = (d + d.T) / 2.0

    zero_rows = np.flatnonzero(~(d > 0).any(axis=1))
    if zero_rows.size:
        raise AllZeroRow(int(zero_rows[0]))
    return DissimilarityMatrix(_frozen(d))


def sort_rows(delta: DissimilarityMatrix) -> SortedDissimilarity:
    """Sort each row's off-diagonal entries ascending and attach prefix sums."""
    n = delta.n
    rows = delta.values[~np.eye(n, dtype=bool)].reshape(n, n - 1)
    rows.sort(axis=1)
    prefix = np.zeros((n, n))
    np.cumsum(rows, axis=1, out=prefix[:, 1:])
    return SortedDissimilarity(_frozen(rows), _frozen(prefix))
