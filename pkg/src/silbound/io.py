"""CSV ingestion and JSON/CSV report serialization.

Points and matrices are plain numeric CSV (UTF-8, '.' decimal separator);
ragged rows and non-numeric tokens are hard errors naming the offending line.
CSV output uses 6 decimals, JSON keeps full precision, and NaN never appears
in serialized output (singleton cohesion becomes null).
"""

from __future__ import annotations

import csv
import json
import math
from typing import Optional

import numpy as np

from .bounds import BoundReport
from .errors import InputFormatError
from .matrix import PointSet
from .oracle import OptimalResult
from .selection import SelectionResult, SweepEntry
from .silhouette import SilhouetteReport


def _parse_rows(path: str, skip_first: bool = False) -> list[list[float]]:
    rows: list[list[float]] = []
    width: Optional[int] = None
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, record in enumerate(csv.reader(fh), start=1):
            if skip_first and lineno == 1:
                continue
            if not record or (len(record) == 1 and not record[0].strip()):
                continue
            try:
                row = [float(tok) for tok in record]
            except ValueError as exc:
                raise InputFormatError(f"{path}:{lineno}: non-numeric value ({exc})") from None
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise InputFormatError(f"{path}:{lineno}: expected {width} columns, got {len(row)}")
            rows.append(row)
    if not rows:
        raise InputFormatError(f"{path}: no data rows")
    return rows


def read_points_csv(path: str, header: bool = False) -> PointSet:
    """Observations as rows; set ``header`` to skip the first line."""
    return PointSet(np.array(_parse_rows(path, skip_first=header)))


def read_matrix_csv(path: str) -> np.ndarray:
    """Square numeric matrix, no header.  Validation happens downstream."""
    rows = _parse_rows(path)
    m = np.array(rows)
    if m.shape[0] != m.shape[1]:
        raise InputFormatError(f"{path}: expected a square matrix, got {m.shape[0]}x{m.shape[1]}")
    return m


def read_labels_csv(path: str) -> np.ndarray:
    """Single column of integer labels."""
    labels = []
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, record in enumerate(csv.reader(fh), start=1):
            if not record or (len(record) == 1 and not record[0].strip()):
                continue
            if len(record) != 1:
                raise InputFormatError(f"{path}:{lineno}: expected a single label column")
            tok = record[0].strip()
            try:
                value = int(tok)
            except ValueError:
                raise InputFormatError(f"{path}:{lineno}: non-integer label {tok!r}") from None
            labels.append(value)
    if not labels:
        raise InputFormatError(f"{path}: no labels")
    return np.array(labels, dtype=np.int64)


def write_points_csv(path: str, points: PointSet) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        for row in points.values:
            fh.write(",".join(f"{v:.6f}" for v in row) + "\n")


def write_labels_csv(path: str, labels) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        for v in labels:
            fh.write(f"{int(v)}\n")


def write_matrix_csv(path: str, values: np.ndarray) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        for row in values:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def _null_nan(x: float) -> Optional[float]:
    return None if math.isnan(x) else float(x)


def bound_report_dict(report: BoundReport) -> dict:
    return {
        "kappa": report.kappa,
        "ub": report.ub,
        "min_ub": report.min_ub,
        "max_ub": report.max_ub,
        "bounds": [float(v) for v in report.bounds],
        "lambda_star": [int(v) for v in report.lambda_star],
    }


def bound_report_csv(report: BoundReport) -> str:
    lines = ["point,bound,lambda_star"]
    for idx, (b, lam) in enumerate(zip(report.bounds, report.lambda_star), start=1):
        lines.append(f"{idx},{b:.6f},{int(lam)}")
    return "\n".join(lines) + "\n"


def silhouette_report_dict(report: SilhouetteReport) -> dict:
    return {
        "a": [_null_nan(v) for v in report.a],
        "b": [float(v) for v in report.b],
        "s": [float(v) for v in report.s],
        "asw": report.asw,
    }


def optimal_result_dict(result: OptimalResult) -> dict:
    return {
        "best_labels": [int(v) for v in result.best.labels],
        "best_asw": result.best_asw,
        "ties": result.ties,
        "evaluated": result.evaluated,
    }


def selection_result_dict(result: SelectionResult, per_k: Optional[list[SweepEntry]] = None) -> dict:
    out = {
        "outcome": result.outcome,
        "best_k": result.best_k,
        "best_asw": result.best_asw,
        "ub": result.ub,
        "tau": result.tau,
        "worst_case_rel_err": result.worst_case_rel_err,
        "stopped_early": result.stopped_early,
        "evaluated_ks": list(result.evaluated_ks),
        "labels": [int(v) for v in result.best.labels] if result.best is not None else None,
    }
    if per_k is not None:
        out["per_k"] = [
            {"k": e.k, "asw": e.asw, "worst_case_rel_err": e.worst_case_rel_err} for e in per_k
        ]
    return out


def sweep_csv(rows: list[tuple[int, float]], ub: float, ub_kappa: float) -> str:
    lines = ["k,asw,ub,ub_kappa"]
    for k, value in rows:
        lines.append(f"{k},{value:.6f},{ub:.6f},{ub_kappa:.6f}")
    return "\n".join(lines) + "\n"


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
