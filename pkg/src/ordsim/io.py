"""Dataset file formats and bundled fixtures.

Two CSV schemas, both plain comma-separated UTF-8 with no quoting (fields
must not contain commas), LF or CRLF line endings, blank lines ignored:

Pair datasets -- header ``gold,u_0,...,u_{d-1},v_0,...,v_{d-1}`` for some
dimension d >= 1, one scored vector pair per row.  ``gold`` is the reference
similarity score for the pair; all values are decimal literals.

Results tables -- header ``model,method,dataset,score``, one benchmark cell
per row.  Scores carry at most two fraction digits and are stored internally
as integer hundredths, so equal published scores compare exactly equal and a
cell difference of zero is exactly zero.  A (model, method, dataset) triple
may appear only once.

Errors name the file and 1-based line number of the offending record.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Union

from .errors import DatasetFormatError, DegenerateInputError, InvalidVectorError
from .metrics import DenseVector

__all__ = [
    "PairRecord",
    "PairDataset",
    "ResultsRow",
    "ResultsTable",
    "parse_vector",
    "format_vector",
    "load_pairs",
    "save_pairs",
    "load_results",
    "save_results",
    "load_experts",
    "fixture_path",
]

PathLike = Union[str, Path]

_SCORE_RE = re.compile(r"^[+-]?\d+(?:\.(\d{1,2}))?$")


def parse_vector(text: str) -> DenseVector:
    """Parse a comma-separated list of decimal literals into a vector."""
    tokens = text.split(",")
    values = []
    for i, token in enumerate(tokens, start=1):
        stripped = token.strip()
        if not stripped:
            raise InvalidVectorError(f"empty component at position {i}")
        try:
            values.append(float(stripped))
        except ValueError:
            raise InvalidVectorError(
                f"component {i} is not a decimal literal: {stripped!r}"
            ) from None
    return DenseVector(values)


def format_vector(v: DenseVector) -> str:
    """Inverse of parse_vector; components in shortest round-trip form."""
    return ",".join(repr(float(c)) for c in v.components)


@dataclass(frozen=True)
class PairRecord:
    """One scored pair: a gold similarity and two vectors of equal dimension."""

    gold: float
    u: DenseVector
    v: DenseVector

    def __post_init__(self) -> None:
        gold = float(self.gold)
        if not math.isfinite(gold):
            raise DegenerateInputError("gold score must be finite")
        object.__setattr__(self, "gold", gold)
        if self.u.dim != self.v.dim:
            raise DegenerateInputError(
                f"pair dimensions differ: {self.u.dim} vs {self.v.dim}"
            )


@dataclass(frozen=True)
class PairDataset:
    """A named collection of pair records sharing one dimension, n >= 2."""

    name: str
    dim: int
    records: tuple[PairRecord, ...]

    def __post_init__(self) -> None:
        if len(self.records) < 2:
            raise DegenerateInputError("a pair dataset needs at least 2 records")
        for i, rec in enumerate(self.records):
            if rec.u.dim != self.dim:
                raise DegenerateInputError(
                    f"record {i} has dimension {rec.u.dim}, dataset declares {self.dim}"
                )

    @property
    def n(self) -> int:
        return len(self.records)


def _pair_header(dim: int) -> str:
    u_cols = ",".join(f"u_{i}" for i in range(dim))
    v_cols = ",".join(f"v_{i}" for i in range(dim))
    return f"gold,{u_cols},{v_cols}"


def _content_lines(path: Path) -> list[tuple[int, str]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetFormatError(f"{path}: cannot read: {exc}") from exc
    numbered = [(i, line) for i, line in enumerate(text.splitlines(), start=1)]
    return [(i, line) for i, line in numbered if line.strip()]


def load_pairs(path: PathLike, name: str | None = None) -> PairDataset:
    """Load a pair dataset, validating the header and every row."""
    path = Path(path)
    lines = _content_lines(path)
    if not lines:
        raise DatasetFormatError(f"{path}: empty file")
    header_no, header = lines[0]
    columns = header.split(",")
    if len(columns) < 3 or len(columns) % 2 == 0:
        raise DatasetFormatError(
            f"{path}:{header_no}: header must be gold,u_0..u_d-1,v_0..v_d-1",
            line=header_no,
        )
    dim = (len(columns) - 1) // 2
    if header != _pair_header(dim):
        raise DatasetFormatError(
            f"{path}:{header_no}: malformed header for dimension {dim}",
            line=header_no,
        )
    records = []
    for lineno, line in lines[1:]:
        fields = line.split(",")
        if len(fields) != 1 + 2 * dim:
            raise DatasetFormatError(
                f"{path}:{lineno}: expected {1 + 2 * dim} fields, got {len(fields)}",
                line=lineno,
            )
        try:
            values = [float(f) for f in fields]
        except ValueError:
            raise DatasetFormatError(
                f"{path}:{lineno}: non-numeric field", line=lineno
            ) from None
        try:
            record = PairRecord(
                gold=values[0],
                u=DenseVector(values[1 : 1 + dim]),
                v=DenseVector(values[1 + dim :]),
            )
        except (InvalidVectorError, DegenerateInputError) as exc:
            raise DatasetFormatError(f"{path}:{lineno}: {exc}", line=lineno) from exc
        records.append(record)
    if len(records) < 2:
        raise DatasetFormatError(f"{path}: need at least 2 data rows")
    return PairDataset(name=name or path.stem, dim=dim, records=tuple(records))


def save_pairs(dataset: PairDataset, path: PathLike) -> None:
    """Write a pair dataset in the documented schema (lossless round-trip)."""
    path = Path(path)
    rows = [_pair_header(dataset.dim)]
    for rec in dataset.records:
        rows.append(
            f"{rec.gold!r},{format_vector(rec.u)},{format_vector(rec.v)}"
        )
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def _parse_score_cents(text: str) -> int:
    match = _SCORE_RE.match(text)
    if match is None:
        raise ValueError(f"score must be a decimal with at most 2 fraction digits: {text!r}")
    sign = -1 if text.lstrip().startswith("-") else 1
    integer, _, fraction = text.strip().lstrip("+-").partition(".")
    cents = int(integer) * 100 + int(fraction.ljust(2, "0") or "0")
    return sign * cents


def _format_score_cents(cents: int) -> str:
    sign = "-" if cents < 0 else ""
    mag = abs(cents)
    return f"{sign}{mag // 100}.{mag % 100:02d}"


@dataclass(frozen=True)
class ResultsRow:
    """One benchmark cell; the score is held exactly as integer hundredths."""

    model: str
    method: str
    dataset: str
    score_cents: int

    def __post_init__(self) -> None:
        for fname in ("model", "method", "dataset"):
            value = getattr(self, fname)
            if not value or "," in value:
                raise DegenerateInputError(f"{fname} must be non-empty and comma-free")

    @property
    def score(self) -> float:
        return self.score_cents / 100.0


@dataclass(frozen=True)
class ResultsTable:
    """Benchmark cells with unique (model, method, dataset) triples."""

    rows: tuple[ResultsRow, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        seen: set[tuple[str, str, str]] = set()
        for row in self.rows:
            key = (row.model, row.method, row.dataset)
            if key in seen:
                raise DegenerateInputError(f"duplicate cell {key!r}")
            seen.add(key)

    def methods(self) -> tuple[str, ...]:
        return self._distinct("method")

    def models(self) -> tuple[str, ...]:
        return self._distinct("model")

    def datasets(self) -> tuple[str, ...]:
        return self._distinct("dataset")

    def _distinct(self, attr: str) -> tuple[str, ...]:
        out: list[str] = []
        for row in self.rows:
            value = getattr(row, attr)
            if value not in out:
                out.append(value)
        return tuple(out)

    def cells(self, method: str) -> Mapping[tuple[str, str], ResultsRow]:
        """(model, dataset) -> row for one method, in file order."""
        return {
            (row.model, row.dataset): row
            for row in self.rows
            if row.method == method
        }


_RESULTS_HEADER = "model,method,dataset,score"


def load_results(path: PathLike) -> ResultsTable:
    """Load a results table, enforcing the schema and triple uniqueness."""
    path = Path(path)
    lines = _content_lines(path)
    if not lines:
        raise DatasetFormatError(f"{path}: empty file")
    header_no, header = lines[0]
    if header != _RESULTS_HEADER:
        raise DatasetFormatError(
            f"{path}:{header_no}: header must be {_RESULTS_HEADER!r}, got {header!r}",
            line=header_no,
        )
    rows = []
    seen: dict[tuple[str, str, str], int] = {}
    for lineno, line in lines[1:]:
        fields = line.split(",")
        if len(fields) != 4:
            raise DatasetFormatError(
                f"{path}:{lineno}: expected 4 fields, got {len(fields)}", line=lineno
            )
        model, method, dataset, score_text = (f.strip() for f in fields)
        try:
            cents = _parse_score_cents(score_text)
        except ValueError as exc:
            raise DatasetFormatError(f"{path}:{lineno}: {exc}", line=lineno) from exc
        key = (model, method, dataset)
        if key in seen:
            raise DatasetFormatError(
                f"{path}:{lineno}: duplicate cell {key!r} (first on line {seen[key]})",
                line=lineno,
            )
        seen[key] = lineno
        try:
            rows.append(ResultsRow(model, method, dataset, cents))
        except DegenerateInputError as exc:
            raise DatasetFormatError(f"{path}:{lineno}: {exc}", line=lineno) from exc
    return ResultsTable(tuple(rows))


def save_results(table: ResultsTable, path: PathLike) -> None:
    """Write a results table; scores are rendered with 2 fraction digits."""
    path = Path(path)
    rows = [_RESULTS_HEADER]
    for row in table.rows:
        rows.append(
            f"{row.model},{row.method},{row.dataset},{_format_score_cents(row.score_cents)}"
        )
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def fixture_path(name: str) -> Path:
    """Absolute path of a bundled fixture CSV."""
    from importlib.resources import files

    resource = files(__package__) / "fixtures" / name
    path = Path(str(resource))
    if not path.is_file():
        raise DatasetFormatError(f"no bundled fixture named {name!r}")
    return path


def load_experts(path: PathLike | None = None) -> dict[str, DenseVector]:
    """Load a named-vector CSV (header ``name,c1,...,cK``); default fixture.

    The bundled ``experts.csv`` holds the six 4-component worked-example
    vectors used by the golden tests and the CLI examples.
    """
    if path is None:
        path = fixture_path("experts.csv")
    path = Path(path)
    lines = _content_lines(path)
    if not lines:
        raise DatasetFormatError(f"{path}: empty file")
    header_no, header = lines[0]
    columns = header.split(",")
    dim = len(columns) - 1
    if dim < 1 or columns != ["name"] + [f"c{i}" for i in range(1, dim + 1)]:
        raise DatasetFormatError(
            f"{path}:{header_no}: header must be name,c1,...,cK", line=header_no
        )
    out: dict[str, DenseVector] = {}
    for lineno, line in lines[1:]:
        fields = line.split(",")
        if len(fields) != dim + 1:
            raise DatasetFormatError(
                f"{path}:{lineno}: expected {dim + 1} fields, got {len(fields)}",
                line=lineno,
            )
        name = fields[0].strip()
        if not name or name in out:
            raise DatasetFormatError(
                f"{path}:{lineno}: vector name must be non-empty and unique",
                line=lineno,
            )
        try:
            out[name] = parse_vector(",".join(fields[1:]))
        except InvalidVectorError as exc:
            raise DatasetFormatError(f"{path}:{lineno}: {exc}", line=lineno) from exc
    return out
