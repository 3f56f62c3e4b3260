"""ASW-based model selection over K with bound-certified early stopping.

The dataset ceiling is computed once up front.  If it does not exceed the
clusterability threshold tau the data is declared not clusterable and no
clustering runs at all.  Otherwise K is scanned ascending from 2; whenever a
new best ASW appears, the worst-case relative error (ub - best) / ub is
checked against epsilon, and the loop halts as soon as it certifies the
result.  With epsilon = 0 the loop degenerates to the plain exhaustive argmax.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .bounds import bound_report
from .errors import AlgorithmFailure, NonPositiveUB, SilboundError, ValidationError
from .matrix import DissimilarityMatrix
from .silhouette import Clustering, asw

NOT_CLUSTERABLE = "not_clusterable"
SELECTED = "selected"


@dataclass(frozen=True)
class EarlyStopConfig:
    """epsilon: relative error tolerance; tau: clusterability threshold;
    k_max: largest K to try; kappa: optional minimum cluster size, which
    switches the gate to the size-constrained ceiling."""

    epsilon: float
    tau: float
    k_max: int
    kappa: Optional[int] = None

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValidationError(f"epsilon must be in [0, 1], got {self.epsilon}")
        if not 0.0 <= self.tau <= 1.0:
            raise ValidationError(f"tau must be in [0, 1], got {self.tau}")
        if self.k_max < 2:
            raise ValidationError(f"k_max must be >= 2, got {self.k_max}")


@dataclass(frozen=True)
class SelectionResult:
    outcome: str
    ub: float
    tau: float
    best: Optional[Clustering] = None
    best_asw: Optional[float] = None
    best_k: Optional[int] = None
    worst_case_rel_err: Optional[float] = None
    stopped_early: bool = False
    evaluated_ks: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class SweepEntry:
    """One K of a no-stop sweep: its ASW and its own certified gap."""

    k: int
    asw: float
    worst_case_rel_err: float


def worst_case_relative_error(ub: float, s_hat: float) -> float:
    """(ub - s_hat) / ub: a certified overestimate of the true relative
    optimality gap.  Exceeds 1 when s_hat is negative."""
    if ub <= 0:
        raise NonPositiveUB(ub)
    return (ub - s_hat) / ub


def _gate(delta: DissimilarityMatrix, config: EarlyStopConfig) -> tuple[float, Optional[SelectionResult]]:
    ub = bound_report(delta, config.kappa or 1).ub
    if ub <= config.tau:
        return ub, SelectionResult(outcome=NOT_CLUSTERABLE, ub=ub, tau=config.tau)
    return ub, None


def _run(algorithm: Callable[[int], Clustering], k: int) -> Clustering:
    try:
        return algorithm(k)
    except SilboundError as exc:
        raise AlgorithmFailure(k, exc) from exc


def select(
    delta: DissimilarityMatrix,
    algorithm: Callable[[int], Clustering],
    config: EarlyStopConfig,
) -> SelectionResult:
    """Run ``algorithm`` for K = 2..k_max with certified early stopping.

    The stop check runs only when a new best ASW is found, so the returned
    best is always the maximum over the evaluated K values.
    """
    ub, gated = _gate(delta, config)
    if gated is not None:
        return gated

    best: Optional[Clustering] = None
    best_asw = -1.0
    best_k = 0
    evaluated: list[int] = []
    stopped = False
    for k in range(2, config.k_max + 1):
        clustering = _run(algorithm, k)
        value = asw(delta, clustering)
        evaluated.append(k)
        if value > best_asw:
            best, best_asw, best_k = clustering, value, k
            if worst_case_relative_error(ub, best_asw) < config.epsilon:
                stopped = True
                break
    return SelectionResult(
        outcome=SELECTED,
        ub=ub,
        tau=config.tau,
        best=best,
        best_asw=best_asw,
        best_k=best_k,
        worst_case_rel_err=worst_case_relative_error(ub, best_asw),
        stopped_early=stopped,
        evaluated_ks=evaluated,
    )


def no_stop_sweep(
    delta: DissimilarityMatrix,
    algorithm: Callable[[int], Clustering],
    config: EarlyStopConfig,
) -> tuple[SelectionResult, list[SweepEntry]]:
    """Reporting mode: evaluate every K and tabulate each K's own worst-case
    relative error.  The gate still applies; early stopping does not."""
    ub, gated = _gate(delta, config)
    if gated is not None:
        return gated, []

    entries: list[SweepEntry] = []
    best: Optional[Clustering] = None
    best_asw = -1.0
    best_k = 0
    for k in range(2, config.k_max + 1):
        clustering = _run(algorithm, k)
        value = asw(delta, clustering)
        entries.append(SweepEntry(k, value, worst_case_relative_error(ub, value)))
        if value > best_asw:
            best, best_asw, best_k = clustering, value, k
    result = SelectionResult(
        outcome=SELECTED,
        ub=ub,
        tau=config.tau,
        best=best,
        best_asw=best_asw,
        best_k=best_k,
        worst_case_rel_err=worst_case_relative_error(ub, best_asw),
        stopped_early=False,
        evaluated_ks=[e.k for e in entries],
    )
    return result, entries
