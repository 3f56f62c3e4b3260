"""Command-line interface.

Commands: ``bound`` (per-point ceilings and UB), ``silhouette`` (evaluate a
labeling), ``optimal`` (exhaustive small-n optimum), ``sweep`` (per-K ASW
table), ``select`` (early-stopping model selection), ``gen`` (synthetic
blobs).  Exit codes: 0 ok, 1 I/O, 2 validation or algorithm failure, 3 not
clusterable.  Identical flags and seed produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import os
import shlex
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from . import io as sio
from .baselines import KMeansConfig, cut_dendrogram, hac, kmeans, kmedoids_asw, make_blobs
from .bounds import bound_report
from .errors import AlgorithmFailure, InputFormatError, ValidationError
from .matrix import METRICS, build_matrix, validate_matrix
from .oracle import PartitionConstraints, best_per_k, optimal_asw
from .selection import NOT_CLUSTERABLE, EarlyStopConfig, no_stop_sweep, select
from .silhouette import Clustering, silhouette_report

ALGORITHMS = ("kmeans", "kmedoids", "hac", "hac-single", "hac-weighted", "exhaustive")


def _workers() -> int:
    raw = os.environ.get("SILBOUND_WORKERS", "")
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return os.cpu_count() or 1


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="points or matrix CSV")
    p.add_argument("--input-kind", required=True, choices=("points", "matrix"))
    p.add_argument("--metric", default="euclidean", choices=METRICS)
    p.add_argument("--header", action="store_true", help="points CSV has a header row")


def _add_output_flags(p: argparse.ArgumentParser, formats=("json",)) -> None:
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--format", default=formats[0], choices=formats)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="silbound", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="per-point silhouette ceilings and the ASW upper bound")
    _add_input_flags(p)
    _add_output_flags(p, formats=("json", "csv"))
    p.add_argument("--kappa", type=int, default=1, help="minimum allowed cluster size")

    p = sub.add_parser("silhouette", help="evaluate a labeling against a matrix")
    _add_input_flags(p)
    _add_output_flags(p)
    p.add_argument("--labels", required=True, help="single-column labels CSV")

    p = sub.add_parser("optimal", help="exact silhouette-optimal clustering (small n)")
    _add_input_flags(p)
    _add_output_flags(p)
    p.add_argument("--k", type=int, help="restrict to exactly K clusters")
    p.add_argument("--kappa", type=int, default=1, help="minimum cluster size constraint")

    p = sub.add_parser("sweep", help="ASW per K for one algorithm, with bound reference columns")
    _add_input_flags(p)
    _add_output_flags(p, formats=("csv",))
    p.add_argument("--algorithm", required=True)
    p.add_argument("--linkage", choices=("single", "weighted"), help="for --algorithm hac")
    p.add_argument("--k-range", required=True, help="A:B inclusive range of K")
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--seed", type=int)

    p = sub.add_parser("select", help="early-stopping ASW model selection")
    _add_input_flags(p)
    _add_output_flags(p)
    p.add_argument("--algorithm", required=True)
    p.add_argument("--linkage", choices=("single", "weighted"), help="for --algorithm hac")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--kappa", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument(
        "--no-stop-sweep",
        action="store_true",
        help="evaluate every K and report each K's worst-case relative error",
    )

    p = sub.add_parser("gen", help="generate blob data; tag is n_samples-n_features-centers-cluster_std")
    p.add_argument("tag")
    p.add_argument("--seed", type=int)
    p.add_argument("--output", required=True, help="points CSV path; labels go next to it")

    return parser


def _load(args):
    if args.input_kind == "points":
        points = sio.read_points_csv(args.input, header=args.header)
        return build_matrix(points, args.metric), points
    return validate_matrix(sio.read_matrix_csv(args.input)), None


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _make_algorithm(name, delta, points, seed, input_path, linkage=None, metric="euclidean"):
    if name == "kmeans":
        if points is None:
            raise ValidationError("--algorithm kmeans needs --input-kind points")
        if metric != "euclidean":
            raise ValidationError(f"kmeans assumes euclidean geometry, not {metric}")
        return lambda k: kmeans(points, KMeansConfig(k=k, seed=seed))
    if name == "kmedoids":
        return lambda k: kmedoids_asw(delta, k, seed=seed)
    if name == "hac" or name in ("hac-single", "hac-weighted"):
        if name != "hac":
            linkage = name.split("-")[1]
        elif linkage is None:
            raise ValidationError("--algorithm hac needs --linkage single|weighted")
        dendrogram = hac(delta, linkage=linkage)
        return lambda k: cut_dendrogram(dendrogram, k)
    if name == "exhaustive":
        return lambda k: best_per_k(delta, [k])[0].clustering
    if name.startswith("cmd:"):
        template = name[4:]

        def run_external(k: int) -> Clustering:
            cmd = [part.format(k=k, input=input_path) for part in shlex.split(template)]
            proc = subprocess.run(cmd, capture_output=True, text=True)
            if proc.returncode != 0:
                raise ValidationError(f"external command failed ({proc.returncode}): {proc.stderr.strip()}")
            labels = [int(tok) for tok in proc.stdout.split()]
            return Clustering.from_labels(np.array(labels, dtype=np.int64))

        return run_external
    raise ValidationError(f"unknown algorithm {name!r}; choose from {ALGORITHMS} or cmd:<template>")


def _cmd_bound(args) -> int:
    delta, _ = _load(args)
    report = bound_report(delta, args.kappa)
    if args.format == "csv":
        _emit(args, sio.bound_report_csv(report))
    else:
        _emit(args, sio.dump_json(sio.bound_report_dict(report)))
    print(f"UB={report.ub:.4f} minUB={report.min_ub:.4f} maxUB={report.max_ub:.4f} kappa={report.kappa}")
    return 0


def _cmd_silhouette(args) -> int:
    delta, _ = _load(args)
    clustering = Clustering.from_labels(sio.read_labels_csv(args.labels))
    report = silhouette_report(delta, clustering)
    _emit(args, sio.dump_json(sio.silhouette_report_dict(report)))
    return 0


def _cmd_optimal(args) -> int:
    delta, _ = _load(args)
    constraints = PartitionConstraints(min_size=args.kappa, k=args.k, k_min=2)
    result = optimal_asw(delta, constraints)
    _emit(args, sio.dump_json(sio.optimal_result_dict(result)))
    return 0


def _parse_k_range(text: str) -> range:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise ValidationError(f"--k-range must be A:B, got {text!r}") from None
    if lo > hi:
        raise ValidationError(f"empty K range {text!r}")
    return range(lo, hi + 1)


def _cmd_sweep(args) -> int:
    delta, points = _load(args)
    ks = _parse_k_range(args.k_range)
    algorithm = _make_algorithm(args.algorithm, delta, points, args.seed, args.input, linkage=args.linkage, metric=args.metric)
    ub = bound_report(delta, 1).ub
    ub_kappa = ub if args.kappa == 1 else bound_report(delta, args.kappa).ub

    def run(k: int) -> tuple[int, float]:
        try:
            clustering = algorithm(k)
        except ValidationError as exc:
            raise AlgorithmFailure(k, exc) from exc
        return k, silhouette_report(delta, clustering).asw

    if args.algorithm == "exhaustive":
        rows = [(entry.k, entry.asw) for entry in best_per_k(delta, ks)]
    else:
        with ThreadPoolExecutor(max_workers=_workers()) as pool:
            rows = sorted(pool.map(run, ks))
    _emit(args, sio.sweep_csv(rows, ub, ub_kappa))
    return 0


def _cmd_select(args) -> int:
    delta, points = _load(args)
    config = EarlyStopConfig(epsilon=args.epsilon, tau=args.tau, k_max=args.k_max, kappa=args.kappa)
    algorithm = _make_algorithm(args.algorithm, delta, points, args.seed, args.input, linkage=args.linkage, metric=args.metric)
    if args.no_stop_sweep:
        result, entries = no_stop_sweep(delta, algorithm, config)
        _emit(args, sio.dump_json(sio.selection_result_dict(result, per_k=entries)))
    else:
        result = select(delta, algorithm, config)
        _emit(args, sio.dump_json(sio.selection_result_dict(result)))
    return 3 if result.outcome == NOT_CLUSTERABLE else 0


def _cmd_gen(args) -> int:
    parts = args.tag.split("-")
    if len(parts) != 4:
        raise ValidationError(f"tag must be n_samples-n_features-centers-cluster_std, got {args.tag!r}")
    n_samples, n_features, centers = (int(p) for p in parts[:3])
    cluster_std = float(parts[3])
    points, labels = make_blobs(n_samples, n_features, centers, cluster_std, seed=args.seed)
    sio.write_points_csv(args.output, points)
    base, ext = os.path.splitext(args.output)
    sio.write_labels_csv(f"{base}.labels{ext or '.csv'}", labels)
    print(args.tag)
    return 0


_HANDLERS = {
    "bound": _cmd_bound,
    "silhouette": _cmd_silhouette,
    "optimal": _cmd_optimal,
    "sweep": _cmd_sweep,
    "select": _cmd_select,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except AlgorithmFailure as exc:
        print(f"error:AlgorithmFailure:{exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error:{type(exc).__name__}:{exc}", file=sys.stderr)
        return 2
    except (OSError, InputFormatError) as exc:
        print(f"error:{type(exc).__name__}:{exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
