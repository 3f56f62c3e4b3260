"""Baseline clusterers: Lloyd k-means, ASW-swap k-medoids, agglomerative
hierarchical clustering (single / weighted linkage), and a blob generator.

The medoid search optimizes exact ASW directly: greedy BUILD initialization
followed by first-improvement medoid/non-medoid swaps.  It is a deterministic
stand-in for silhouette-optimizing PAM variants, not a reimplementation of any
particular package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import KOutOfRange, KTooLarge, ValidationError
from .matrix import DissimilarityMatrix, PointSet
from .silhouette import Clustering, _asw_labels0

LINKAGES = ("single", "weighted")


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    max_iter: int = 300
    n_init: int = 10
    seed: Optional[int] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError("k must be >= 1")
        if self.max_iter < 1 or self.n_init < 1:
            raise ValidationError("max_iter and n_init must be >= 1")


@dataclass(frozen=True)
class Dendrogram:
    """n-1 merges of node ids (leaves 0..n-1, merge t creates node n+t).

    Single-linkage heights are nondecreasing; weighted linkage may invert.
    """

    left: np.ndarray
    right: np.ndarray
    height: np.ndarray
    n: int


@dataclass(frozen=True)
class MedoidState:
    """Medoid indices plus the nearest-medoid assignment they induce."""

    medoids: np.ndarray
    assignment: np.ndarray


def _kmeanspp(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    closest = ((x - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = closest.sum()
        if total > 0:
            probs = closest / total
            idx = rng.choice(n, p=probs)
        else:
            idx = rng.integers(n)
        centers[c] = x[idx]
        closest = np.minimum(closest, ((x - centers[c]) ** 2).sum(axis=1))
    return centers


def _sq_dists(x: np.ndarray, centers: np.ndarray) -> np.ndarray:
    d = ((x[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
    return np.maximum(d, 0.0)


def _lloyd(x: np.ndarray, centers: np.ndarray, max_iter: int) -> tuple[np.ndarray, float]:
    n, k = x.shape[0], centers.shape[0]
    labels = np.full(n, -1)
    for _ in range(max_iter):
        d = _sq_dists(x, centers)
        new_labels = d.argmin(axis=1)
        # empty-cluster repair: reseed at the point farthest from its center
        for c in range(k):
            if not (new_labels == c).any():
                far = d[np.arange(n), new_labels].argmax()
                centers[c] = x[far]
                d[:, c] = ((x - centers[c]) ** 2).sum(axis=1)
                new_labels = d.argmin(axis=1)
        if (new_labels == labels).all():
            break
        labels = new_labels
        for c in range(k):
            centers[c] = x[labels == c].mean(axis=0)
    inertia = float(((x - centers[labels]) ** 2).sum())
    return labels, inertia


def kmeans(points: PointSet, config: KMeansConfig) -> Clustering:
    """Lloyd k-means on raw vectors; best of ``n_init`` seeded restarts."""
    x = points.values
    if config.k > points.n:
        raise KTooLarge(config.k, points.n)
    rng = np.random.default_rng(config.seed)
    best_labels, best_inertia = None, np.inf
    for _ in range(config.n_init):
        centers = _kmeanspp(x, config.k, rng)
        labels, inertia = _lloyd(x, centers.copy(), config.max_iter)
        if inertia < best_inertia:
            best_labels, best_inertia = labels, inertia
    return Clustering(best_labels + 1, config.k)


def _assign_medoids(values: np.ndarray, medoids: np.ndarray) -> np.ndarray:
    # ties go to the earliest medoid in the (sorted) list
    return values[:, medoids].argmin(axis=1)


def _pam_build(values: np.ndarray, k: int) -> list[int]:
    n = values.shape[0]
    first = int(values.sum(axis=1).argmin())
    medoids = [first]
    nearest = values[:, first].copy()
    while len(medoids) < k:
        gains = np.maximum(nearest[:, None] - values, 0.0).sum(axis=0)
        gains[medoids] = -np.inf
        h = int(gains.argmax())
        medoids.append(h)
        np.minimum(nearest, values[:, h], out=nearest)
    return sorted(medoids)


def kmedoids_asw(delta: DissimilarityMatrix, k: int, seed: Optional[int] = None) -> Clustering:
    """Medoid local search whose objective is the exact ASW of the
    nearest-medoid assignment.

    BUILD initialization, then first-improvement swaps scanned in index order
    until a full pass finds no strictly better ASW.  Fully deterministic; the
    seed is accepted for interface symmetry with the other baselines.
    """
    n = delta.n
    if k > n:
        raise KTooLarge(k, n)
    if k < 2:
        raise KOutOfRange(k, 2, n)
    values = delta.values

    def score(meds: np.ndarray) -> tuple[float, MedoidState]:
        state = MedoidState(meds, _assign_medoids(values, meds))
        sizes = np.bincount(state.assignment, minlength=k)
        if (sizes == 0).any():  # duplicate points can starve a medoid
            return -np.inf, state
        return _asw_labels0(values, state.assignment, k), state

    best_val, best = score(np.array(_pam_build(values, k)))

    improved = True
    while improved:
        improved = False
        non_medoids = np.setdiff1d(np.arange(n), best.medoids)
        for mi in range(k):
            for h in non_medoids:
                cand = best.medoids.copy()
                cand[mi] = h
                cand.sort()
                val, state = score(cand)
                if val > best_val:
                    best_val, best = val, state
                    improved = True
                    break
            if improved:
                break
    return Clustering(best.assignment + 1, k)


def hac(delta: DissimilarityMatrix, linkage: str = "single") -> Dendrogram:
    """Agglomerative clustering via Lance-Williams updates.

    single:   D(A+B, C) = min(D(A,C), D(B,C))
    weighted: D(A+B, C) = (D(A,C) + D(B,C)) / 2
    Nearest pairs are chosen with ties broken by the smallest index pair.
    """
    if linkage not in LINKAGES:
        raise ValidationError(f"unknown linkage {linkage!r}; choose from {LINKAGES}")
    n = delta.n
    work = delta.values.copy()
    np.fill_diagonal(work, np.inf)
    alive = np.ones(n, dtype=bool)
    node_id = np.arange(n)
    left = np.empty(n - 1, dtype=np.int64)
    right = np.empty(n - 1, dtype=np.int64)
    height = np.empty(n - 1)

    masked = work.copy()
    for t in range(n - 1):
        i, j = np.unravel_index(int(masked.argmin()), masked.shape)
        if i > j:
            i, j = j, i
        left[t], right[t], height[t] = node_id[i], node_id[j], work[i, j]

        if linkage == "single":
            merged = np.minimum(work[i], work[j])
        else:
            merged = (work[i] + work[j]) / 2.0
        work[i] = merged
        work[:, i] = merged
        work[i, i] = np.inf
        alive[j] = False
        node_id[i] = n + t

        masked[i] = work[i]
        masked[:, i] = work[:, i]
        masked[i, ~alive] = np.inf
        masked[~alive, i] = np.inf
        masked[i, i] = np.inf
        masked[j, :] = np.inf
        masked[:, j] = np.inf
    return Dendrogram(left, right, height, n)


def cut_dendrogram(dendrogram: Dendrogram, k: int) -> Clustering:
    """Undo the last k-1 merges; the surviving components are the clusters,
    numbered 1..k by smallest member."""
    n = dendrogram.n
    if not 1 <= k <= n:
        raise KOutOfRange(k, 1, n)
    parent = list(range(2 * n - 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t in range(n - k):
        node = n + t
        parent[find(int(dendrogram.left[t]))] = node
        parent[find(int(dendrogram.right[t]))] = node

    roots: dict[int, int] = {}
    labels = np.empty(n, dtype=np.int64)
    for p in range(n):
        r = find(p)
        if r not in roots:
            roots[r] = len(roots) + 1
        labels[p] = roots[r]
    return Clustering(labels, k)


def make_blobs(
    n_samples: int,
    n_features: int,
    centers: int,
    cluster_std: float,
    seed: Optional[int] = None,
) -> tuple[PointSet, np.ndarray]:
    """Isotropic Gaussian blobs around centers drawn uniformly in a side-20
    box at the origin; samples are split as evenly as possible.

    Returns the points and ground-truth labels 1..centers.
    """
    if min(n_samples, n_features, centers) < 1 or cluster_std <= 0:
        raise ValidationError("blob parameters must be positive")
    if centers > n_samples:
        raise KTooLarge(centers, n_samples)
    rng = np.random.default_rng(seed)
    locs = rng.uniform(-10.0, 10.0, (centers, n_features))
    base, extra = divmod(n_samples, centers)
    sizes = [base + (1 if c < extra else 0) for c in range(centers)]
    chunks = [locs[c] + rng.normal(0.0, cluster_std, (sizes[c], n_features)) for c in range(centers)]
    labels = np.repeat(np.arange(1, centers + 1), sizes)
    return PointSet(np.vstack(chunks)), labels
