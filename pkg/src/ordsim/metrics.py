"""Similarity metrics over dense real vectors.

The central metric, ``recos``, normalizes the dot product by the largest
magnitude the dot product could reach under any permutation of one operand's
components: ``u.v / |sort_asc(u) . sort(v)|``, where ``v`` is sorted in the
same direction as ``u`` when ``u.v > 0`` and the opposite direction when
``u.v < 0``.  Siblings ``cosine``, ``decos`` and ``tanimoto`` normalize the
same numerator by the Cauchy-Schwarz, arithmetic-mean and union-style
denominators.  All four share sign and symmetry; the ordinal predicates at
the bottom of the module characterize when ``recos`` saturates at +/-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import DegenerateInputError, DimensionMismatchError, InvalidVectorError

__all__ = [
    "DenseVector",
    "OrderedViews",
    "MetricKind",
    "VectorLike",
    "ZERO_DENOMINATOR_GUARD",
    "as_dense",
    "dot",
    "norm",
    "ordered_views",
    "recos",
    "cosine",
    "decos",
    "tanimoto",
    "decos_from_tanimoto",
    "similarity",
    "is_similarly_ordered",
    "is_oppositely_ordered",
]

# Substituted for a sorted-product denominator that is exactly zero.  That
# can only happen when the numerator u.v is also zero, so the quotient is 0
# either way; the guard just avoids a 0/0.
ZERO_DENOMINATOR_GUARD = 1e-6


@dataclass(frozen=True, eq=False)
class DenseVector:
    """An immutable finite real vector of dimension >= 1.

    Components are held as a read-only float64 array.  Construction rejects
    empty, non-1d and non-finite input, so every metric can assume its
    operands are clean.
    """

    components: np.ndarray

    def __post_init__(self) -> None:
        try:
            arr = np.array(self.components, dtype=np.float64, copy=True)
        except (TypeError, ValueError) as exc:
            raise InvalidVectorError(f"not a numeric vector: {exc}") from exc
        if arr.ndim != 1:
            raise InvalidVectorError(f"expected a 1-d vector, got shape {arr.shape}")
        if arr.size == 0:
            raise InvalidVectorError("vector must have at least one component")
        if not np.all(np.isfinite(arr)):
            raise InvalidVectorError("vector components must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @property
    def dim(self) -> int:
        return int(self.components.size)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self) -> Iterator[float]:
        return iter(float(x) for x in self.components)

    def __getitem__(self, index: int) -> float:
        return float(self.components[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseVector):
            return NotImplemented
        return np.array_equal(self.components, other.components)

    def __hash__(self) -> int:
        return hash(self.components.tobytes())

    def __repr__(self) -> str:
        return f"DenseVector({self.components.tolist()!r})"


VectorLike = Union[DenseVector, Sequence[float], np.ndarray]


def as_dense(value: VectorLike) -> DenseVector:
    """Coerce a sequence or array to a DenseVector (validating it)."""
    if isinstance(value, DenseVector):
        return value
    return DenseVector(np.asarray(value))


@dataclass(frozen=True)
class OrderedViews:
    """A vector together with its ascending and descending rearrangements."""

    original: DenseVector
    ascending: DenseVector
    descending: DenseVector

    def __post_init__(self) -> None:
        a = self.ascending.components
        if not np.all(a[:-1] <= a[1:]):
            raise InvalidVectorError("ascending view is not sorted")
        if not np.array_equal(self.descending.components, a[::-1]):
            raise InvalidVectorError("descending view is not the reverse of ascending")
        if not np.array_equal(np.sort(self.original.components), a):
            raise InvalidVectorError("views are not rearrangements of the original")


class MetricKind(str, Enum):
    """Names of the four similarity metrics, as accepted by the CLI."""

    RECOS = "recos"
    COS = "cos"
    DECOS = "decos"
    TANIMOTO = "tanimoto"


def _pair(u: VectorLike, v: VectorLike) -> tuple[np.ndarray, np.ndarray]:
    a = as_dense(u)
    b = as_dense(v)
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a.components, b.components


def _clip_unit(x: float) -> float:
    # Rounding can push a quotient a few ulps past its mathematical range.
    return float(min(1.0, max(-1.0, x)))


def dot(u: VectorLike, v: VectorLike) -> float:
    """Dot product in float64."""
    a, b = _pair(u, v)
    return float(np.dot(a, b))


def norm(u: VectorLike) -> float:
    """Euclidean norm in float64.

    Falls back to a rescaled computation when the direct one underflows to
    zero on a nonzero input (all-subnormal components).
    """
    a = as_dense(u).components
    n = float(np.linalg.norm(a))
    if n == 0.0 and np.any(a != 0.0):
        scale = float(np.max(np.abs(a)))
        n = scale * float(np.linalg.norm(a / scale))
    return n


def ordered_views(u: VectorLike) -> OrderedViews:
    """The vector with its ascending and descending sorts, O(d log d)."""
    a = as_dense(u)
    asc = np.sort(a.components)
    return OrderedViews(a, DenseVector(asc), DenseVector(asc[::-1]))


def recos(u: VectorLike, v: VectorLike) -> float:
    """Rearrangement-normalized similarity in [-1, 1].

    ``u.v / |sort_asc(u) . sort_asc(v)|`` when ``u.v > 0``,
    ``u.v / |sort_asc(u) . sort_desc(v)|`` when ``u.v < 0``,
    and exactly 0 when ``u.v == 0``.
    """
    a, b = _pair(u, v)
    d = float(np.dot(a, b))
    if d == 0.0:
        return 0.0
    b_sorted = np.sort(b)
    if d < 0.0:
        b_sorted = b_sorted[::-1]
    den = abs(float(np.dot(np.sort(a), b_sorted)))
    if den == 0.0:  # unreachable when d != 0; kept as a division guard
        den = ZERO_DENOMINATOR_GUARD
    return _clip_unit(d / den)


def cosine(u: VectorLike, v: VectorLike) -> float:
    """Cosine similarity in [-1, 1].  Rejects zero vectors."""
    a, b = _pair(u, v)
    na = norm(a)
    nb = norm(b)
    if na == 0.0 or nb == 0.0:
        raise DegenerateInputError("cosine is undefined for a zero vector")
    return _clip_unit(float(np.dot(a, b)) / (na * nb))


def decos(u: VectorLike, v: VectorLike) -> float:
    """Dot product over the mean of the squared norms, in [-1, 1].

    Defined whenever at least one vector is nonzero.
    """
    a, b = _pair(u, v)
    sq = float(np.dot(a, a)) + float(np.dot(b, b))
    if sq == 0.0:
        raise DegenerateInputError("decos is undefined when both vectors are zero")
    return _clip_unit(float(np.dot(a, b)) / (0.5 * sq))


def tanimoto(u: VectorLike, v: VectorLike) -> float:
    """Continuous Tanimoto coefficient ``u.v / (|u|^2 + |v|^2 - u.v)``.

    Not clipped: the value can fall below -1 (down to -1/3) for strongly
    opposed vectors.  The denominator vanishes only when both vectors are
    zero, which is rejected.
    """
    a, b = _pair(u, v)
    d = float(np.dot(a, b))
    den = float(np.dot(a, a)) + float(np.dot(b, b)) - d
    if den == 0.0:
        raise DegenerateInputError("tanimoto is undefined when both vectors are zero")
    return d / den


def decos_from_tanimoto(t: float) -> float:
    """Map a Tanimoto value in [0, 1] to the equivalent decos value, 2t/(1+t)."""
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DegenerateInputError(f"tanimoto value outside [0, 1]: {t!r}")
    return 2.0 * t / (1.0 + t)


_METRIC_FUNCS = {
    MetricKind.RECOS: recos,
    MetricKind.COS: cosine,
    MetricKind.DECOS: decos,
    MetricKind.TANIMOTO: tanimoto,
}


def similarity(kind: MetricKind | str, u: VectorLike, v: VectorLike) -> float:
    """Dispatch to one of the four metrics by kind."""
    return _METRIC_FUNCS[MetricKind(kind)](u, v)


def _group_extrema(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Sort by a, then reduce b over each run of equal a-values.
    order = np.argsort(a, kind="stable")
    a_s = a[order]
    b_s = b[order]
    starts = np.flatnonzero(np.concatenate(([True], a_s[1:] != a_s[:-1])))
    gmax = np.maximum.reduceat(b_s, starts)
    gmin = np.minimum.reduceat(b_s, starts)
    return gmin, gmax


def is_similarly_ordered(u: VectorLike, v: VectorLike) -> bool:
    """Whether ``(u_i - u_j) * (v_i - v_j) >= 0`` for every index pair.

    Checked in O(d log d): after sorting by ``u``, every ``v`` value in a
    group of equal ``u`` components must be <= every ``v`` value in the next
    group.
    """
    a, b = _pair(u, v)
    gmin, gmax = _group_extrema(a, b)
    return bool(np.all(gmax[:-1] <= gmin[1:]))


def is_oppositely_ordered(u: VectorLike, v: VectorLike) -> bool:
    """Whether ``(u_i - u_j) * (v_i - v_j) <= 0`` for every index pair."""
    a, b = _pair(u, v)
    gmin, gmax = _group_extrema(a, b)
    return bool(np.all(gmin[:-1] >= gmax[1:]))
