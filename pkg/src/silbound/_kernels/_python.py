"""Pure-numpy implementations of the hot kernels.

Semantics match ``_native`` (the Cython build); the compiled version uses
compensated summation in its inner accumulations, this one relies on numpy's
pairwise summation, so results agree to roundoff rather than bit-for-bit.
"""

import numpy as np


def silhouette_parts(delta, labels, k):
    """Cohesion a, separation b and silhouette s for 0-based ``labels``.

    ``a`` is NaN for singleton points; ``s`` is 0 there and wherever a == b
    exactly.  ``delta`` must be a validated dissimilarity matrix and ``k`` the
    number of clusters (>= 2).
    """
    n = delta.shape[0]
    onehot = np.zeros((n, k))
    onehot[np.arange(n), labels] = 1.0
    counts = onehot.sum(axis=0)
    sums = delta @ onehot

    rows = np.arange(n)
    own_sum = sums[rows, labels]
    own_size = counts[labels]
    singleton = own_size == 1
    with np.errstate(invalid="ignore", divide="ignore"):
        a = np.where(singleton, np.nan, own_sum / (own_size - 1))

    means = sums / counts[None, :]
    means[rows, labels] = np.inf
    b = means.min(axis=1)

    s = np.zeros(n)
    live = ~singleton & (a != b)
    s[live] = (b[live] - a[live]) / np.maximum(a[live], b[live])
    return a, b, s


# rows are processed in blocks to keep the cumsum/quotient temporaries inside
# the cache; one full (m, n) set of temporaries turns the scan superquadratic
_BLOCK_ROWS = 128


def bound_scan(rows, kappa):
    """Minimum quotient scan over window sizes kappa..n-kappa per sorted row.

    ``rows`` holds ascending off-diagonal distances, shape (m, n-1); the m rows
    may be any subset of a dataset of n points.  Returns (bounds, lam_star)
    where bounds = 1 - min quotient and lam_star is the smallest minimizer.
    """
    m, width = rows.shape
    n = width + 1
    lams = np.arange(2, n)
    scale = ((n - lams) / (lams - 1))[None, :]

    bounds = np.empty(m)
    lam_star = np.empty(m, dtype=np.int64)
    for start in range(0, m, _BLOCK_ROWS):
        block = rows[start : start + _BLOCK_ROWS]
        csum = np.cumsum(block, axis=1)
        x = csum[:, lams - 2]
        y = csum[:, -1:] - x
        quotients = np.empty((block.shape[0], n - 1))
        quotients[:, 0] = 1.0
        quotients[:, 1:] = scale * (x / y)

        window = quotients[:, kappa - 1 : n - kappa]
        j = np.argmin(window, axis=1)
        bounds[start : start + _BLOCK_ROWS] = 1.0 - window[np.arange(block.shape[0]), j]
        lam_star[start : start + _BLOCK_ROWS] = j + kappa
    return bounds, lam_star
