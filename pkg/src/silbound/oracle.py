"""Exhaustive search for silhouette-optimal clusterings of small datasets.

Set partitions are enumerated as restricted-growth strings in lexicographic
order, each exactly once, so the total count follows the Bell numbers.  The
enumeration prunes on cluster-count and minimum-size constraints instead of
post-filtering.  Every candidate is scored with the same single-pass ASW the
rest of the library uses; no incremental shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import KOutOfRange, TooFewPoints, TooLarge, ValidationError
from .matrix import DissimilarityMatrix
from .silhouette import Clustering, _asw_labels0

# Bell(15) ~ 1.38e9 is the practical ceiling for full enumeration.
MAX_ENUM_N = 15


@dataclass(frozen=True)
class PartitionConstraints:
    """Filters applied during enumeration: minimum cluster size and bounds on
    the number of clusters (``k`` fixes it exactly)."""

    min_size: int = 1
    k: Optional[int] = None
    k_min: int = 1
    k_max: Optional[int] = None

    def limits(self, n: int) -> tuple[int, int]:
        lo = self.k if self.k is not None else self.k_min
        hi = self.k if self.k is not None else (self.k_max if self.k_max is not None else n)
        return max(lo, 1), min(hi, n)


@dataclass(frozen=True)
class OptimalResult:
    """Exact maximizer over the enumerated space, with tie bookkeeping."""

    best: Clustering
    best_asw: float
    ties: int
    evaluated: int


def _check_n(n: int) -> None:
    if n < 2:
        raise TooFewPoints(n, 2)
    if n > MAX_ENUM_N:
        raise TooLarge(n, MAX_ENUM_N)


def _growth_strings(n: int, min_size: int, k_lo: int, k_hi: int) -> Iterator[tuple[np.ndarray, int]]:
    """Yield (labels, k) for every admissible partition, reusing one buffer.

    Labels are the 0-based restricted-growth string; callers must copy before
    storing.  Subtrees that cannot reach ``k_lo`` clusters or fill every opened
    cluster to ``min_size`` are pruned.
    """
    labels = np.zeros(n, dtype=np.int64)
    counts = [0] * (n + 1)

    def rec(pos: int, used: int, deficit: int):
        # deficit = total shortfall of opened clusters against min_size; a
        # subtree is viable only if the remaining points can absorb it plus
        # min_size apiece for every cluster still needed to reach k_lo.
        if pos == n:
            if deficit == 0 and used >= k_lo:
                yield labels, used
            return
        after = n - pos - 1
        for c in range(used):
            counts[c] += 1
            d = deficit - 1 if counts[c] <= min_size else deficit
            if d + max(0, k_lo - used) * min_size <= after:
                labels[pos] = c
                yield from rec(pos + 1, used, d)
            counts[c] -= 1
        if used < k_hi:
            counts[used] = 1
            d = deficit + min_size - 1
            if d + max(0, k_lo - used - 1) * min_size <= after:
                labels[pos] = used
                yield from rec(pos + 1, used + 1, d)
            counts[used] = 0

    yield from rec(0, 0, 0)


class PartitionIterator:
    """Iterates every admissible set partition exactly once, as ``Clustering``
    values, in lexicographic restricted-growth order."""

    def __init__(self, n: int, constraints: PartitionConstraints):
        self.n = n
        self.constraints = constraints
        k_lo, k_hi = constraints.limits(n)
        self._gen = _growth_strings(n, constraints.min_size, k_lo, k_hi)

    def __iter__(self):
        return self

    def __next__(self) -> Clustering:
        labels, k = next(self._gen)
        return Clustering(labels + 1, k)


def enumerate_partitions(n: int, constraints: Optional[PartitionConstraints] = None) -> PartitionIterator:
    """All set partitions of n points meeting ``constraints``."""
    _check_n(n)
    return PartitionIterator(n, constraints or PartitionConstraints())


def optimal_asw(delta: DissimilarityMatrix, constraints: Optional[PartitionConstraints] = None) -> OptimalResult:
    """Exact ASW maximizer over all partitions with K >= 2 meeting ``constraints``.

    Ties are broken by enumeration order and counted (exact float equality),
    so uniqueness claims are checkable.
    """
    n = delta.n
    _check_n(n)
    cons = constraints or PartitionConstraints()
    k_lo, k_hi = cons.limits(n)
    k_lo = max(k_lo, 2)
    if k_lo > k_hi:
        raise KOutOfRange(k_lo, 2, k_hi)

    values = delta.values
    best_val = -np.inf
    best_labels: Optional[np.ndarray] = None
    best_k = 0
    ties = 0
    evaluated = 0
    for labels, k in _growth_strings(n, cons.min_size, k_lo, k_hi):
        val = _asw_labels0(values, labels, k)
        evaluated += 1
        if val > best_val:
            best_val = val
            best_labels = labels.copy()
            best_k = k
            ties = 1
        elif val == best_val:
            ties += 1
    if best_labels is None:
        raise ValidationError(
            f"no partition of {n} points satisfies min_size={cons.min_size} with {k_lo}..{k_hi} clusters"
        )
    return OptimalResult(Clustering(best_labels + 1, best_k), float(best_val), ties, evaluated)


@dataclass(frozen=True)
class KBest:
    """Best clustering among partitions with exactly ``k`` clusters."""

    k: int
    clustering: Clustering
    asw: float


def best_per_k(delta: DissimilarityMatrix, k_range) -> list[KBest]:
    """Exact per-K maxima of ASW, one enumeration pass over all K in range."""
    n = delta.n
    _check_n(n)
    ks = sorted(set(int(k) for k in k_range))
    if not ks or ks[0] < 2 or ks[-1] > n:
        raise KOutOfRange(ks[0] if ks else 0, 2, n)

    values = delta.values
    best: dict[int, tuple[float, np.ndarray]] = {}
    wanted = set(ks)
    for labels, k in _growth_strings(n, 1, ks[0], ks[-1]):
        if k not in wanted:
            continue
        val = _asw_labels0(values, labels, k)
        cur = best.get(k)
        if cur is None or val > cur[0]:
            best[k] = (val, labels.copy())
    return [KBest(k, Clustering(best[k][1] + 1, k), float(best[k][0])) for k in ks]
