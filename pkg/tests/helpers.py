"""Independent brute-force oracles and small utilities for the test suite.

Everything here recomputes results straight from the definitions (plain loops,
``math.fsum``), deliberately sharing no code with the library paths it checks.
"""

import math

import numpy as np


def brute_silhouette(values, labels):
    """Definitional two-loop silhouette evaluation.

    ``labels`` uses any hashable cluster ids.  Returns (a, b, s, asw) with
    ``a[i] = None`` for singletons.
    """
    n = len(labels)
    clusters = {}
    for idx, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(idx)

    a, b, s = [], [], []
    for i in range(n):
        own = clusters[labels[i]]
        rival_means = []
        for lab, members in clusters.items():
            if lab != labels[i]:
                rival_means.append(math.fsum(values[i][j] for j in members) / len(members))
        bi = min(rival_means)
        if len(own) == 1:
            a.append(None)
            b.append(bi)
            s.append(0.0)
            continue
        ai = math.fsum(values[i][j] for j in own if j != i) / (len(own) - 1)
        a.append(ai)
        b.append(bi)
        if ai == bi:
            s.append(0.0)
        else:
            s.append((bi - ai) / max(ai, bi))
    return a, b, s, math.fsum(s) / n


def brute_quotient(values, i, lam):
    """Definitional quotient from a fresh sort and exact slice sums."""
    row = sorted(values[i][j] for j in range(len(values)) if j != i)
    n = len(row) + 1
    if lam == 1:
        return 1.0
    near = math.fsum(row[: lam - 1])
    far = math.fsum(row[lam - 1 :])
    return (n - lam) / (lam - 1) * near / far


def brute_pointwise_bound(values, i, kappa):
    """1 - min quotient over the admissible window, smallest minimizer."""
    n = len(values)
    best, best_lam = None, None
    for lam in range(kappa, n - kappa + 1):
        q = brute_quotient(values, i, lam)
        if best is None or q < best:
            best, best_lam = q, lam
    return 1.0 - best, best_lam


def bell_triangle(n):
    """Bell number via the Bell triangle recurrence."""
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def stirling2(n, k):
    if k == 0:
        return 1 if n == 0 else 0
    if n == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def all_partitions(n):
    """Every set partition of range(n) as a frozenset of frozensets.

    Built by inserting each element into every existing block or a new one;
    an algorithm unrelated to restricted-growth strings.
    """
    parts = [[[0]]]
    for element in range(1, n):
        grown = []
        for p in parts:
            for b in range(len(p)):
                q = [list(block) for block in p]
                q[b].append(element)
                grown.append(q)
            grown.append([list(block) for block in p] + [[element]])
        parts = grown
    return {frozenset(frozenset(block) for block in p) for p in parts}


def canonical(labels):
    """Partition induced by a label array, as a frozenset of frozensets."""
    blocks = {}
    for idx, lab in enumerate(labels):
        blocks.setdefault(int(lab), []).append(idx)
    return frozenset(frozenset(b) for b in blocks.values())


def random_delta(rng, n, low=0.05, high=10.0):
    """Random valid dissimilarity matrix (no structure, not metric)."""
    d = rng.uniform(low, high, (n, n))
    d = (d + d.T) / 2.0
    np.fill_diagonal(d, 0.0)
    return d


def agreement_after_alignment(a, b):
    """Best label-matching agreement fraction between two labelings."""
    from scipy.optimize import linear_sum_assignment

    ua, ub = np.unique(a), np.unique(b)
    cost = np.zeros((len(ua), len(ub)))
    for i, va in enumerate(ua):
        for j, vb in enumerate(ub):
            cost[i, j] = -np.sum((a == va) & (b == vb))
    rows, cols = linear_sum_assignment(cost)
    return -cost[rows, cols].sum() / len(a)
