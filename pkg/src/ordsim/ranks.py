"""Fractional ranking and Spearman rank correlation."""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from .errors import DegenerateInputError, InvalidVectorError

__all__ = ["average_ranks", "spearman_rho"]

SequenceLike = Union[Sequence[float], np.ndarray]


def _as_array(x: SequenceLike, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidVectorError(f"{name} must be 1-d, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidVectorError(f"{name} must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidVectorError(f"{name} must contain only finite values")
    return arr


def average_ranks(x: SequenceLike) -> np.ndarray:
    """1-based ranks with ties assigned the average of their positions.

    The ranks of n values always sum to n(n+1)/2.
    """
    arr = _as_array(x, "x")
    n = arr.size
    order = np.argsort(arr, kind="stable")
    sorted_vals = arr[order]
    boundaries = np.concatenate(([True], sorted_vals[1:] != sorted_vals[:-1]))
    starts = np.flatnonzero(boundaries)
    counts = np.diff(np.append(starts, n))
    # Group occupying 1-based positions start+1 .. start+count averages to
    # start + (count + 1) / 2.
    group_rank = starts + (counts + 1) / 2.0
    ranks = np.empty(n, dtype=np.float64)
    ranks[order] = group_rank[np.cumsum(boundaries) - 1]
    return ranks


def spearman_rho(x: SequenceLike, y: SequenceLike) -> float:
    """Spearman correlation: Pearson correlation of the fractional ranks.

    Handles ties exactly (no sum-of-squared-rank-differences shortcut).
    Requires n >= 2 and at least two distinct values on each side.
    """
    ax = _as_array(x, "x")
    ay = _as_array(y, "y")
    if ax.size != ay.size:
        raise DegenerateInputError(f"length mismatch: {ax.size} vs {ay.size}")
    if ax.size < 2:
        raise DegenerateInputError("spearman_rho requires at least 2 observations")
    rx = average_ranks(ax)
    ry = average_ranks(ay)
    dx = rx - rx.mean()
    dy = ry - ry.mean()
    ssx = float(np.dot(dx, dx))
    ssy = float(np.dot(dy, dy))
    if ssx == 0.0 or ssy == 0.0:
        raise DegenerateInputError("spearman_rho is undefined for a constant sequence")
    rho = float(np.dot(dx, dy)) / float(np.sqrt(ssx * ssy))
    return float(min(1.0, max(-1.0, rho)))
