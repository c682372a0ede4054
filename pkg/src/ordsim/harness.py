"""Benchmark harness: score pair datasets and compare methods on a results table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import CoverageMismatchError
from .io import PairDataset, ResultsTable
from .metrics import MetricKind, similarity
from .ranks import spearman_rho
from .stats import (
    DescriptiveStats,
    PairedDiffs,
    TestResult,
    benjamini_hochberg,
    cohens_d_pooled,
    descriptive_stats,
    leave_one_dataset_out,
    paired_t_test,
    sign_test,
    wilcoxon_signed_rank,
)

__all__ = ["EvalReport", "ComparisonReport", "evaluate", "compare"]


@dataclass(frozen=True)
class EvalReport:
    """Rank-correlation score of one metric on one pair dataset."""

    dataset: str
    metric: MetricKind
    rho_x100: float
    n_pairs: int


def evaluate(dataset: PairDataset, metric: MetricKind | str) -> EvalReport:
    """Score every pair in record order, then rank-correlate with gold.

    Deterministic: same dataset and metric always give the same report.
    """
    kind = MetricKind(metric)
    sims = [similarity(kind, rec.u, rec.v) for rec in dataset.records]
    golds = [rec.gold for rec in dataset.records]
    rho = spearman_rho(sims, golds)
    return EvalReport(
        dataset=dataset.name,
        metric=kind,
        rho_x100=100.0 * rho,
        n_pairs=dataset.n,
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Full paired comparison of two methods over shared (model, dataset) cells."""

    method_a: str
    method_b: str
    descriptive: DescriptiveStats
    wilcoxon: TestResult
    sign: TestResult
    t_test: TestResult
    pooled_d: float
    bh_adjusted: Mapping[str, float]
    lodo: TestResult
    micro_avg_a: float
    micro_avg_b: float


def compare(
    results: ResultsTable, a: str, b: str, alternative: str = "greater"
) -> ComparisonReport:
    """Compare method ``a`` against method ``b`` cell by cell.

    Both methods must cover exactly the same (model, dataset) cells.  Scores
    are parsed from at most 2 fraction digits, so equal scores subtract to
    exactly 0.0 and are counted as ties; unequal scores are differenced in
    double precision.  Raises DegenerateInputError (from the rank tests)
    when every cell is tied.
    """
    cells_a = results.cells(a)
    cells_b = results.cells(b)
    if not cells_a:
        raise CoverageMismatchError(f"no cells for method {a!r}")
    if not cells_b:
        raise CoverageMismatchError(f"no cells for method {b!r}")
    missing_b = [k for k in cells_a if k not in cells_b]
    missing_a = [k for k in cells_b if k not in cells_a]
    if missing_a or missing_b:
        raise CoverageMismatchError(
            f"methods {a!r} and {b!r} cover different cells: "
            f"{len(missing_b)} only in {a!r}, {len(missing_a)} only in {b!r}"
        )
    keys = list(cells_a)
    scores_a = [cells_a[k].score for k in keys]
    scores_b = [cells_b[k].score for k in keys]
    diffs = PairedDiffs(
        tuple(sa - sb for sa, sb in zip(scores_a, scores_b)),
        tuple(keys),
    )
    wil = wilcoxon_signed_rank(diffs, alternative)
    sgn = sign_test(diffs, alternative)
    t = paired_t_test(diffs, alternative)
    adjusted = benjamini_hochberg([wil.p_value, sgn.p_value, t.p_value])
    return ComparisonReport(
        method_a=a,
        method_b=b,
        descriptive=descriptive_stats(diffs),
        wilcoxon=wil,
        sign=sgn,
        t_test=t,
        pooled_d=cohens_d_pooled(scores_a, scores_b),
        bh_adjusted={
            "wilcoxon": adjusted[0],
            "sign": adjusted[1],
            "t_test": adjusted[2],
        },
        lodo=leave_one_dataset_out(diffs, alternative),
        micro_avg_a=sum(scores_a) / len(scores_a),
        micro_avg_b=sum(scores_b) / len(scores_b),
    )
