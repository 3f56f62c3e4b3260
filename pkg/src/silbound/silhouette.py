"""Per-point silhouette widths and the average silhouette width (ASW).

For point i in cluster C, cohesion a(i) is the mean dissimilarity to the other
members of C, separation b(i) is the smallest mean dissimilarity to any rival
cluster, and s(i) = (b - a) / max(a, b).  Singletons score 0, as does the
exact tie a == b.  ASW is the mean of s over all points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import EmptyCluster, KOutOfRange, LabelOutOfRange, SizeMismatch
from .matrix import DissimilarityMatrix, _frozen


@dataclass(frozen=True)
class Clustering:
    """Assignment of points to clusters 1..k, every cluster nonempty."""

    labels: np.ndarray
    k: int

    def __post_init__(self):
        labels = np.asarray(self.labels, dtype=np.int64).ravel()
        if self.k < 1:
            raise KOutOfRange(self.k, 1, len(labels))
        seen = np.zeros(self.k, dtype=bool)
        for idx, lab in enumerate(labels):
            if not 1 <= lab <= self.k:
                raise LabelOutOfRange(idx, int(lab), self.k)
            seen[lab - 1] = True
        missing = np.flatnonzero(~seen)
        if missing.size:
            raise EmptyCluster(int(missing[0]) + 1)
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_labels(cls, labels) -> "Clustering":
        """Relabel arbitrary integer identifiers to 1..k by first appearance."""
        raw = np.asarray(labels, dtype=np.int64).ravel()
        if raw.size == 0:
            raise SizeMismatch(1, 0)
        uniq, first = np.unique(raw, return_index=True)
        order = uniq[np.argsort(first, kind="stable")]
        remap = {int(v): i + 1 for i, v in enumerate(order)}
        return cls(np.array([remap[int(v)] for v in raw], dtype=np.int64), len(order))

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class SilhouetteReport:
    """Arrays a, b, s plus their mean.  ``a`` is NaN for singleton points
    (serialized as null); s is 0 there."""

    a: np.ndarray
    b: np.ndarray
    s: np.ndarray
    asw: float


def _checked_labels0(delta: DissimilarityMatrix, clustering: Clustering) -> np.ndarray:
    if clustering.n != delta.n:
        raise SizeMismatch(delta.n, clustering.n)
    if clustering.k < 2:
        raise KOutOfRange(clustering.k, 2, delta.n)
    return clustering.labels - 1


def silhouette_report(delta: DissimilarityMatrix, clustering: Clustering) -> SilhouetteReport:
    """Evaluate a, b and s for every point and their mean."""
    labels0 = _checked_labels0(delta, clustering)
    a, b, s = _kernels.silhouette_parts(delta.values, labels0, clustering.k)
    return SilhouetteReport(_frozen(a), _frozen(b), _frozen(s), float(s.mean()))


def asw(delta: DissimilarityMatrix, clustering: Clustering) -> float:
    """Average silhouette width of ``clustering`` on ``delta``."""
    labels0 = _checked_labels0(delta, clustering)
    return _asw_labels0(delta.values, labels0, clustering.k)


def _asw_labels0(values: np.ndarray, labels0: np.ndarray, k: int) -> float:
    # Shared fast path: same kernel and same mean as silhouette_report, so
    # every caller (oracle, medoid search, selection) sees identical values.
    return float(_kernels.silhouette_parts(values, labels0, k)[2].mean())
