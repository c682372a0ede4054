"""Paired-comparison statistics.

Conventions shared by every test in this module:

- Differences are paired (method A minus method B on the same cell) and the
  default alternative is one-sided "greater" (A beats B).
- Zero differences are discarded before the signed-rank and sign tests;
  ``n_used`` on the result records how many observations survived.
- The signed-rank statistic V is the sum of the ranks of the positive
  differences, with average ranks over tied absolute values.  Its p-value
  uses the normal approximation with tie-corrected variance and a 0.5
  continuity correction.
- The sign test is exact (binomial tail, integer arithmetic).
- The paired t-test evaluates its tail through the regularized incomplete
  beta function, accurate to ~1e-10 absolute for df <= 200.
- Quartiles interpolate linearly between order statistics (the default
  linear/"type 7" convention; see the file-format notes in the README).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import betainc

from .errors import DegenerateInputError
from .ranks import average_ranks

__all__ = [
    "PairedDiffs",
    "DescriptiveStats",
    "TestResult",
    "descriptive_stats",
    "wilcoxon_signed_rank",
    "sign_test",
    "paired_t_test",
    "cohens_d_pooled",
    "benjamini_hochberg",
    "leave_one_dataset_out",
]

_ALTERNATIVES = ("greater", "two-sided")


@dataclass(frozen=True)
class PairedDiffs:
    """Paired differences with a (model, dataset) label per entry."""

    diffs: tuple[float, ...]
    labels: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if len(self.diffs) != len(self.labels):
            raise DegenerateInputError(
                f"{len(self.diffs)} diffs but {len(self.labels)} labels"
            )
        if len(self.diffs) == 0:
            raise DegenerateInputError("need at least one paired difference")
        if not all(math.isfinite(d) for d in self.diffs):
            raise DegenerateInputError("differences must be finite")

    @classmethod
    def from_values(
        cls, values: Sequence[float], datasets: Sequence[str] | None = None
    ) -> "PairedDiffs":
        """Build from bare values, labeling each entry by position (or dataset)."""
        if datasets is None:
            labels = tuple(("", str(i)) for i in range(len(values)))
        else:
            labels = tuple(("", ds) for ds in datasets)
        return cls(tuple(float(v) for v in values), labels)

    @property
    def n(self) -> int:
        return len(self.diffs)


@dataclass(frozen=True)
class DescriptiveStats:
    """Location, spread, quartiles and win/tie/loss counts of paired diffs."""

    n: int
    mean: float
    sd: float
    se: float
    median: float
    q1: float
    q3: float
    iqr: float
    min: float
    max: float
    wins: int
    ties: int
    losses: int
    win_rate_excl_ties: float


@dataclass(frozen=True)
class TestResult:
    """Outcome of one hypothesis test.

    ``n_used`` is the number of observations the test actually consumed
    (zero differences discarded); degrees of freedom, where meaningful, are
    ``n_used - 1``.
    """

    statistic: float
    p_value: float
    effect_size: float
    n_used: int
    method_name: str

    def __post_init__(self) -> None:
        if not (0.0 <= self.p_value <= 1.0):
            raise DegenerateInputError(f"p-value outside [0, 1]: {self.p_value!r}")


def _check_alternative(alternative: str) -> str:
    if alternative not in _ALTERNATIVES:
        raise DegenerateInputError(
            f"alternative must be one of {_ALTERNATIVES}, got {alternative!r}"
        )
    return alternative


def descriptive_stats(d: PairedDiffs) -> DescriptiveStats:
    """Summary statistics of the differences; ties are exact zeros."""
    arr = np.asarray(d.diffs, dtype=np.float64)
    n = arr.size
    mean = float(arr.mean())
    sd = float(arr.std(ddof=1)) if n > 1 else 0.0
    q1, med, q3 = (float(q) for q in np.quantile(arr, (0.25, 0.5, 0.75)))
    wins = int(np.count_nonzero(arr > 0.0))
    ties = int(np.count_nonzero(arr == 0.0))
    losses = n - wins - ties
    decided = wins + losses
    return DescriptiveStats(
        n=n,
        mean=mean,
        sd=sd,
        se=sd / math.sqrt(n),
        median=med,
        q1=q1,
        q3=q3,
        iqr=q3 - q1,
        min=float(arr.min()),
        max=float(arr.max()),
        wins=wins,
        ties=ties,
        losses=losses,
        win_rate_excl_ties=wins / decided if decided else 0.0,
    )


def _norm_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _student_t_sf(t: float, df: int) -> float:
    # P(T > t) through the regularized incomplete beta function.
    x = df / (df + t * t)
    half_tail = 0.5 * float(betainc(df / 2.0, 0.5, x))
    return half_tail if t >= 0.0 else 1.0 - half_tail


def wilcoxon_signed_rank(
    d: PairedDiffs, alternative: str = "greater"
) -> TestResult:
    """Wilcoxon signed-rank test on paired differences.

    Zero differences are dropped.  Ranks are averaged over tied absolute
    values; V sums the ranks of the positive differences.  The p-value uses
    the normal approximation with tie correction and continuity correction;
    the effect size is r = |z| / sqrt(n_used).
    """
    _check_alternative(alternative)
    diffs = np.asarray(d.diffs, dtype=np.float64)
    nonzero = diffs[diffs != 0.0]
    n = nonzero.size
    if n == 0:
        raise DegenerateInputError("all differences are zero")
    magnitudes = np.abs(nonzero)
    ranks = average_ranks(magnitudes)
    v_stat = float(ranks[nonzero > 0.0].sum())
    mu = n * (n + 1) / 4.0
    _, tie_counts = np.unique(magnitudes, return_counts=True)
    tie_term = float(np.sum(tie_counts.astype(np.float64) ** 3 - tie_counts)) / 48.0
    sigma = math.sqrt(n * (n + 1) * (2 * n + 1) / 24.0 - tie_term)
    if alternative == "greater":
        z = (v_stat - mu - 0.5) / sigma
        p = _norm_sf(z)
    else:
        shift = 0.5 * float(np.sign(v_stat - mu))
        z = (v_stat - mu - shift) / sigma
        p = min(1.0, 2.0 * _norm_sf(abs(z)))
    return TestResult(
        statistic=v_stat,
        p_value=p,
        effect_size=abs(z) / math.sqrt(n),
        n_used=n,
        method_name="wilcoxon",
    )


def sign_test(d: PairedDiffs, alternative: str = "greater") -> TestResult:
    """Exact sign test: binomial tail at rate 1/2 over the nonzero diffs.

    The statistic is the number of positive differences; the effect size is
    the success rate among nonzero differences.
    """
    _check_alternative(alternative)
    nonzero = [x for x in d.diffs if x != 0.0]
    n = len(nonzero)
    if n == 0:
        raise DegenerateInputError("all differences are zero")
    k = sum(1 for x in nonzero if x > 0.0)
    total = 2**n
    upper = sum(math.comb(n, i) for i in range(k, n + 1))
    if alternative == "greater":
        p = upper / total
    else:
        lower = sum(math.comb(n, i) for i in range(0, k + 1))
        p = min(1.0, 2.0 * (min(upper, lower) / total))
    return TestResult(
        statistic=float(k),
        p_value=p,
        effect_size=k / n,
        n_used=n,
        method_name="sign",
    )


def paired_t_test(d: PairedDiffs, alternative: str = "greater") -> TestResult:
    """Paired t-test on the differences, df = n - 1.

    The effect size is Cohen's d_z = mean / sd of the differences.
    """
    _check_alternative(alternative)
    arr = np.asarray(d.diffs, dtype=np.float64)
    n = arr.size
    if n < 2:
        raise DegenerateInputError("paired t-test requires at least 2 differences")
    mean = float(arr.mean())
    sd = float(arr.std(ddof=1))
    if sd == 0.0:
        raise DegenerateInputError("paired t-test is undefined for constant differences")
    t_stat = mean / (sd / math.sqrt(n))
    df = n - 1
    if alternative == "greater":
        p = _student_t_sf(t_stat, df)
    else:
        p = min(1.0, 2.0 * _student_t_sf(abs(t_stat), df))
    return TestResult(
        statistic=t_stat,
        p_value=p,
        effect_size=mean / sd,
        n_used=n,
        method_name="paired-t",
    )


def cohens_d_pooled(a: Sequence[float], b: Sequence[float]) -> float:
    """Between-groups Cohen's d with the pooled standard deviation."""
    xa = np.asarray(a, dtype=np.float64)
    xb = np.asarray(b, dtype=np.float64)
    if xa.ndim != 1 or xb.ndim != 1 or xa.size < 2 or xb.size < 2:
        raise DegenerateInputError("cohens_d_pooled requires two samples of size >= 2")
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(xb))):
        raise DegenerateInputError("samples must be finite")
    na, nb = xa.size, xb.size
    var_a = float(xa.var(ddof=1))
    var_b = float(xb.var(ddof=1))
    pooled = ((na - 1) * var_a + (nb - 1) * var_b) / (na + nb - 2)
    if pooled == 0.0:
        raise DegenerateInputError("pooled variance is zero")
    return (float(xa.mean()) - float(xb.mean())) / math.sqrt(pooled)


def benjamini_hochberg(p_values: Sequence[float]) -> list[float]:
    """Benjamini-Hochberg step-up adjustment, returned in the input order.

    adjusted_i = min over j with p_j >= p_i of (m / rank_j) * p_j, capped at 1.
    Adjustment preserves the ordering of the raw p-values.
    """
    p = np.asarray(p_values, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise DegenerateInputError("need a non-empty 1-d sequence of p-values")
    if not np.all((p >= 0.0) & (p <= 1.0)):
        raise DegenerateInputError("p-values must lie in [0, 1]")
    m = p.size
    order = np.argsort(p, kind="stable")
    scaled = p[order] * m / np.arange(1, m + 1)
    adjusted_sorted = np.minimum.accumulate(scaled[::-1])[::-1]
    adjusted_sorted = np.minimum(adjusted_sorted, 1.0)
    out = np.empty(m, dtype=np.float64)
    out[order] = adjusted_sorted
    return [float(x) for x in out]


def leave_one_dataset_out(d: PairedDiffs, alternative: str = "greater") -> TestResult:
    """Robustness check: one-sample t over per-dataset exclusion means.

    For each dataset label, take the mean difference over all cells NOT from
    that dataset; then t-test those exclusion means against zero with
    df = (number of datasets) - 1.
    """
    _check_alternative(alternative)
    datasets: list[str] = []
    for _, ds in d.labels:
        if ds not in datasets:
            datasets.append(ds)
    if len(datasets) < 2:
        raise DegenerateInputError("leave-one-dataset-out requires >= 2 datasets")
    arr = np.asarray(d.diffs, dtype=np.float64)
    ds_labels = np.asarray([ds for _, ds in d.labels])
    exclusion_means = []
    for ds in datasets:
        kept = arr[ds_labels != ds]
        if kept.size == 0:
            raise DegenerateInputError(f"every cell belongs to dataset {ds!r}")
        exclusion_means.append(float(kept.mean()))
    result = paired_t_test(PairedDiffs.from_values(exclusion_means), alternative)
    return TestResult(
        statistic=result.statistic,
        p_value=result.p_value,
        effect_size=result.effect_size,
        n_used=result.n_used,
        method_name="lodo-t",
    )
