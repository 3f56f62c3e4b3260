"""Sharp upper bounds on silhouette widths and on the achievable ASW.

For point i and window size L in 1..n-1, the quotient q(i, L) compares the
mean of i's L-1 nearest distances against the mean of its n-L farthest ones,
scaled by (n-L)/(L-1); q(i, 1) = 1 by convention.  No clustering can give
point i a silhouette above 1 - min_L q(i, L), and the bound is attained by the
2-clustering that groups i with its L-1 nearest neighbors.  Averaging the
per-point ceilings bounds the ASW of every possible clustering; restricting
L to kappa..n-kappa bounds clusterings whose smallest cluster has >= kappa
members.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import KappaOutOfRange, LambdaOutOfRange, TooFewPoints
from .matrix import DissimilarityMatrix, SortedDissimilarity, _frozen, sort_rows
from .silhouette import Clustering


@dataclass(frozen=True)
class BoundReport:
    """Per-point silhouette ceilings for minimum cluster size ``kappa``.

    ``bounds[i]`` is the largest silhouette point i can attain; ``lambda_star[i]``
    is the smallest window size achieving it.  ``ub`` is the mean of ``bounds``
    and caps the ASW of every admissible clustering; ``min_ub``/``max_ub`` are
    its extremes.
    """

    kappa: int
    bounds: np.ndarray
    lambda_star: np.ndarray
    ub: float
    min_ub: float
    max_ub: float


def _check_window(n: int, kappa: int) -> None:
    if n < 4:
        raise TooFewPoints(n, 4)
    if not 1 <= kappa <= n // 2:
        raise KappaOutOfRange(kappa, n)


def lambda_quotient(i: int, sorted_delta: SortedDissimilarity, lam: int) -> float:
    """Quotient of point i for window size ``lam`` (1 exactly when lam == 1).

    Computed from the prefix-sum table, so each evaluation is O(1).  The
    denominator is positive for every valid matrix: rows are sorted ascending
    and all-zero rows are excluded.
    """
    n = sorted_delta.n
    if not 1 <= lam <= n - 1:
        raise LambdaOutOfRange(lam, n)
    if lam == 1:
        return 1.0
    p = sorted_delta.prefix[i]
    near = p[lam - 1]
    far = p[n - 1] - p[lam - 1]
    return float((n - lam) / (lam - 1) * (near / far))


def pointwise_bound(i: int, sorted_delta: SortedDissimilarity, kappa: int) -> tuple[float, int]:
    """Silhouette ceiling of point i and the smallest window size attaining it."""
    n = sorted_delta.n
    _check_window(n, kappa)
    bounds, lam_star = _kernels.bound_scan(sorted_delta.rows[i : i + 1], kappa)
    return float(bounds[0]), int(lam_star[0])


def bound_report(delta: DissimilarityMatrix, kappa: int = 1) -> BoundReport:
    """Per-point ceilings and their aggregates for the whole dataset.

    One streaming scan per sorted row; the row sort dominates, so the total
    cost is O(n^2 log n).
    """
    _check_window(delta.n, kappa)
    sorted_delta = sort_rows(delta)
    bounds, lam_star = _kernels.bound_scan(sorted_delta.rows, kappa)
    return BoundReport(
        kappa=kappa,
        bounds=_frozen(bounds),
        lambda_star=lam_star,
        ub=float(bounds.mean()),
        min_ub=float(bounds.min()),
        max_ub=float(bounds.max()),
    )


def witness_clustering(i: int, delta: DissimilarityMatrix, lambda_star: int) -> Clustering:
    """The 2-clustering at which point i attains its ceiling.

    Cluster 1 is i together with its ``lambda_star - 1`` nearest neighbors
    (ties broken by index); cluster 2 is everything else.  For lambda_star = 1
    the witness isolates i as a singleton.  Whenever the minimizing quotient is
    below 1, the silhouette of i in this clustering equals its bound exactly.
    """
    n = delta.n
    if not 1 <= lambda_star <= n - 1:
        raise LambdaOutOfRange(lambda_star, n)
    order = np.argsort(delta.values[i], kind="stable")
    order = order[order != i]
    labels = np.full(n, 2, dtype=np.int64)
    labels[order[: lambda_star - 1]] = 1
    labels[i] = 1
    return Clustering(labels, 2)
