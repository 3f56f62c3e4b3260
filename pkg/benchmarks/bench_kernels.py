"""Compare the compiled kernels against the numpy fallback.

Covers the two hot paths: the per-row quotient scan on large matrices and the
silhouette evaluation that the exhaustive optimum search calls once per
partition.  Run:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import importlib
import time

import numpy as np

from silbound import validate_matrix, sort_rows
from silbound._kernels import _python
from silbound.oracle import _growth_strings


def random_delta(rng, n):
    d = rng.uniform(0.05, 10.0, (n, n))
    d = (d + d.T) / 2.0
    np.fill_diagonal(d, 0.0)
    return validate_matrix(d)


def best_of(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_bound_scan(impls, sizes, repeats):
    rng = np.random.default_rng(0)
    print("\nbound_scan (full matrix, kappa=1)")
    print(f"{'n':>6} " + "".join(f"{name:>12}" for name in impls) + f"{'speedup':>10}")
    for n in sizes:
        rows = sort_rows(random_delta(rng, n)).rows
        times = {name: best_of(lambda m=mod: m.bound_scan(rows, 1), repeats) for name, mod in impls.items()}
        ratio = times["python"] / times["native"] if "native" in times else float("nan")
        print(f"{n:>6} " + "".join(f"{times[name]*1e3:>10.2f}ms" for name in impls) + f"{ratio:>9.1f}x")


def bench_silhouette(impls, sizes, repeats):
    rng = np.random.default_rng(1)
    print("\nsilhouette_parts (single call)")
    print(f"{'n':>6} " + "".join(f"{name:>12}" for name in impls) + f"{'speedup':>10}")
    for n in sizes:
        delta = random_delta(rng, n)
        k = max(2, n // 50)
        labels = rng.integers(0, k, n).astype(np.int64)
        labels[:k] = np.arange(k)
        times = {
            name: best_of(lambda m=mod: m.silhouette_parts(delta.values, labels, k), repeats)
            for name, mod in impls.items()
        }
        ratio = times["python"] / times["native"] if "native" in times else float("nan")
        print(f"{n:>6} " + "".join(f"{times[name]*1e3:>10.2f}ms" for name in impls) + f"{ratio:>9.1f}x")


def bench_enumeration(impls, n, repeats):
    rng = np.random.default_rng(2)
    delta = random_delta(rng, n)
    print(f"\nexhaustive ASW search, all partitions of n={n} (the oracle hot loop)")
    print(f"{'':>6} " + "".join(f"{name:>12}" for name in impls) + f"{'speedup':>10}")

    def sweep(mod):
        best = -np.inf
        for labels, k in _growth_strings(n, 1, 2, n):
            value = mod.silhouette_parts(delta.values, labels, k)[2].mean()
            if value > best:
                best = value
        return best

    times = {name: best_of(lambda m=mod: sweep(m), repeats) for name, mod in impls.items()}
    ratio = times["python"] / times["native"] if "native" in times else float("nan")
    print(f"{'':>6} " + "".join(f"{times[name]*1e3:>10.0f}ms" for name in impls) + f"{ratio:>9.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="200,500,1000,2000")
    parser.add_argument("--enum-n", type=int, default=9)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    impls = {"python": _python}
    try:
        impls["native"] = importlib.import_module("silbound._kernels._native")
    except ImportError:
        print("compiled kernels not built; benchmarking the fallback only")

    sizes = [int(s) for s in args.sizes.split(",")]
    bench_bound_scan(impls, sizes, args.repeats)
    bench_silhouette(impls, sizes, args.repeats)
    bench_enumeration(impls, args.enum_n, args.repeats)


if __name__ == "__main__":
    main()
