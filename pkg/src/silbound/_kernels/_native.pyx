# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels: silhouette evaluation and the per-point quotient scan.

Inner accumulations use Neumaier compensated summation, written inline: a
helper taking element pointers defeats the C compiler's inlining and costs an
order of magnitude on these loops.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.float64_t f64
ctypedef cnp.int64_t i64

cdef extern from "math.h":
    double fabs(double x) nogil
    double NAN
    double INFINITY


def silhouette_parts(const f64[:, ::1] delta, const i64[::1] labels, Py_ssize_t k):
    """Cohesion a, separation b and silhouette s for 0-based ``labels``."""
    cdef Py_ssize_t n = delta.shape[0]
    cdef cnp.ndarray[f64, ndim=2] sums = np.zeros((n, k))
    cdef cnp.ndarray[f64, ndim=2] comp = np.zeros((n, k))
    cdef cnp.ndarray[i64, ndim=1] counts = np.zeros(k, dtype=np.int64)
    cdef cnp.ndarray[f64, ndim=1] a = np.empty(n)
    cdef cnp.ndarray[f64, ndim=1] b = np.empty(n)
    cdef cnp.ndarray[f64, ndim=1] s = np.empty(n)
    cdef f64[:, ::1] sv = sums
    cdef f64[:, ::1] cv = comp
    cdef i64[::1] cnt = counts
    cdef f64[::1] av = a, bv = b, stv = s
    cdef Py_ssize_t i, j, c, own
    cdef f64 v, acc, t, ai, bi, mean, mx

    with nogil:
        for j in range(n):
            cnt[labels[j]] += 1
        for i in range(n):
            for j in range(n):
                v = delta[i, j]
                c = labels[j]
                acc = sv[i, c]
                t = acc + v
                if fabs(acc) >= fabs(v):
                    cv[i, c] += (acc - t) + v
                else:
                    cv[i, c] += (v - t) + acc
                sv[i, c] = t
        for i in range(n):
            own = labels[i]
            if cnt[own] > 1:
                ai = (sv[i, own] + cv[i, own]) / (cnt[own] - 1)
            else:
                ai = NAN
            bi = INFINITY
            for c in range(k):
                if c != own:
                    mean = (sv[i, c] + cv[i, c]) / cnt[c]
                    if mean < bi:
                        bi = mean
            av[i] = ai
            bv[i] = bi
            if cnt[own] == 1 or ai == bi:
                stv[i] = 0.0
            else:
                mx = ai if ai > bi else bi
                stv[i] = (bi - ai) / mx
    return a, b, s


def bound_scan(const f64[:, ::1] rows, Py_ssize_t kappa):
    """Minimum quotient scan over window sizes kappa..n-kappa per sorted row."""
    cdef Py_ssize_t m = rows.shape[0]
    cdef Py_ssize_t width = rows.shape[1]
    cdef Py_ssize_t n = width + 1
    cdef cnp.ndarray[f64, ndim=1] bounds = np.empty(m)
    cdef cnp.ndarray[i64, ndim=1] lam_star = np.empty(m, dtype=np.int64)
    cdef f64[::1] bd = bounds
    cdef i64[::1] ls = lam_star
    cdef Py_ssize_t r, j, lam, best_lam
    cdef f64 x, y, cx, cy, q, best, d, t

    with nogil:
        for r in range(m):
            x = 0.0
            cx = 0.0
            y = 0.0
            cy = 0.0
            for j in range(kappa - 1, width):
                d = rows[r, j]
                t = y + d
                if fabs(y) >= fabs(d):
                    cy += (y - t) + d
                else:
                    cy += (d - t) + y
                y = t
            if kappa > 1:
                for j in range(kappa - 1):
                    d = rows[r, j]
                    t = x + d
                    if fabs(x) >= fabs(d):
                        cx += (x - t) + d
                    else:
                        cx += (d - t) + x
                    x = t
                best = ((x + cx) / (kappa - 1)) / ((y + cy) / (n - kappa))
            else:
                best = 1.0
            best_lam = kappa
            for lam in range(kappa + 1, n - kappa + 1):
                d = rows[r, lam - 2]
                t = x + d
                if fabs(x) >= fabs(d):
                    cx += (x - t) + d
                else:
                    cx += (d - t) + x
                x = t
                t = y - d
                if fabs(y) >= fabs(d):
                    cy += (y - t) - d
                else:
                    cy += (-d - t) + y
                y = t
                q = ((x + cx) / (lam - 1)) / ((y + cy) / (n - lam))
                if q < best:
                    best = q
                    best_lam = lam
            bd[r] = 1.0 - best
            ls[r] = best_lam
    return bounds, lam_star
