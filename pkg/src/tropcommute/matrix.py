"""Dense tropical matrices and vectors.

Everything here is at most 4x4, so storage is a flat row-major tuple and the
products are written as plain loops.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from tropcommute.semiring import (
    BOTTOM,
    DEFAULT_TOL,
    Scalar,
    format_scalar,
    oplus,
    otimes,
    parse_scalar,
    scalar,
    trop_eq,
)


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class MatrixParseError(ValueError):
    """Matrix text could not be parsed; ``row`` and ``col`` are 1-based."""

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {col})" if col is not None else ")")
        super().__init__(message + where)
        self.row = row
        self.col = col


class TropVector(tuple):
    """Immutable vector of tropical scalars.

    Subclasses ``tuple`` so indexing, hashing and exact equality come for free.
    Entries are validated on construction.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable = ()):
        return tuple.__new__(cls, (scalar(e) for e in entries))

    @classmethod
    def _raw(cls, entries: Iterable[Scalar]) -> "TropVector":
        # entries already validated
        return tuple.__new__(cls, entries)

    @property
    def dim(self) -> int:
        return len(self)

    def __repr__(self):
        return f"TropVector({format_vector(self)})"

    def __str__(self):
        return format_vector(self)


def format_vector(v: Sequence[Scalar]) -> str:
    return "(" + ", ".join(format_scalar(e) for e in v) + ")"


def bottom_vector(dim: int) -> TropVector:
    return TropVector._raw((BOTTOM,) * dim)


def vec_oplus(u: TropVector, v: TropVector) -> TropVector:
    if len(u) != len(v):
        raise DimensionError(f"vector dims {len(u)} and {len(v)} differ")
    return TropVector._raw(oplus(a, b) for a, b in zip(u, v))


def vec_shift(lam: Scalar, v: TropVector) -> TropVector:
    """Scalar multiple ``lam ⊗ v``."""
    if lam is BOTTOM:
        return bottom_vector(len(v))
    return TropVector._raw(BOTTOM if e is BOTTOM else e + lam for e in v)


def vec_eq(u: Sequence[Scalar], v: Sequence[Scalar], tol: float = DEFAULT_TOL) -> bool:
    return len(u) == len(v) and all(trop_eq(a, b, tol) for a, b in zip(u, v))


@dataclass(frozen=True)
class TropMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "TropMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(scalar(e) for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls(n, n, tuple(0.0 if i == j else BOTTOM for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_finite(self) -> bool:
        return all(e is not BOTTOM for e in self.entries)

    def __str__(self):
        return format_matrix(self)


def mat_oplus(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    if A.shape != B.shape:
        raise DimensionError(f"cannot add {A.rows}x{A.cols} and {B.rows}x{B.cols}")
    return TropMatrix(A.rows, A.cols, tuple(oplus(a, b) for a, b in zip(A.entries, B.entries)))


def mat_otimes(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    n, m, p = A.rows, A.cols, B.cols
    a, b = A.entries, B.entries
    out = []
    for i in range(n):
        for j in range(p):
            acc = BOTTOM
            for k in range(m):
                acc = oplus(acc, otimes(a[i * m + k], b[k * p + j]))
            out.append(acc)
    return TropMatrix(n, p, tuple(out))


def mat_vec(A: TropMatrix, x: Sequence[Scalar]) -> TropVector:
    if A.cols != len(x):
        raise DimensionError(f"cannot apply {A.rows}x{A.cols} matrix to dim {len(x)}")
    m, a = A.cols, A.entries
    out = []
    for i in range(A.rows):
        acc = BOTTOM
        for k in range(m):
            acc = oplus(acc, otimes(a[i * m + k], x[k]))
        out.append(acc)
    return TropVector._raw(out)


def mat_eq(A: TropMatrix, B: TropMatrix, tol: float = DEFAULT_TOL) -> bool:
    return A.shape == B.shape and vec_eq(A.entries, B.entries, tol)


def vec_to_mat2(x: Sequence[Scalar]) -> TropMatrix:
    """``(b11, b12, b21, b22)`` to the 2x2 matrix it encodes, row-major."""
    if len(x) != 4:
        raise DimensionError(f"need a 4-vector, got dim {len(x)}")
    return TropMatrix(2, 2, tuple(scalar(e) for e in x))


def mat2_to_vec(B: TropMatrix) -> TropVector:
    if B.shape != (2, 2):
        raise DimensionError(f"need a 2x2 matrix, got {B.rows}x{B.cols}")
    return TropVector._raw(B.entries)


# --- text and JSON formats -------------------------------------------------

_ROW_SPLIT = re.compile(r"[;\n]")
_CELL_SPLIT = re.compile(r"[\s,]+")


def parse_matrix(text: str) -> TropMatrix:
    """Parse ``"0.166 0.861; -0.62 -0.76"`` style text, or a JSON array of rows.

    Rows are separated by ``;`` or newlines, cells by whitespace or commas.
    ``-inf`` (any case) denotes bottom; in JSON, ``null`` does.
    """
    stripped = text.strip()
    if not stripped:
        raise MatrixParseError("empty matrix")
    if stripped.startswith("["):
        return matrix_from_json(stripped)
    rows = []
    for r, line in enumerate(_ROW_SPLIT.split(stripped), start=1):
        line = line.strip()
        if not line:
            continue
        cells = []
        for c, tok in enumerate(t for t in _CELL_SPLIT.split(line) if t):
            try:
                cells.append(parse_scalar(tok))
            except ValueError as exc:
                raise MatrixParseError(f"bad entry {tok!r}: {exc}", len(rows) + 1, c + 1) from None
        rows.append(cells)
        if len(cells) != len(rows[0]):
            raise MatrixParseError(
                f"expected {len(rows[0])} entries, found {len(cells)}", len(rows)
            )
    return TropMatrix.from_rows(rows)


def matrix_from_json(data) -> TropMatrix:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise MatrixParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise MatrixParseError("JSON matrix must be an array of arrays")
    rows = []
    for r, row in enumerate(data, start=1):
        cells = []
        for c, e in enumerate(row, start=1):
            try:
                cells.append(scalar(e))
            except (TypeError, ValueError) as exc:
                raise MatrixParseError(f"bad entry {e!r}: {exc}", r, c) from None
        rows.append(cells)
    try:
        return TropMatrix.from_rows(rows)
    except DimensionError as exc:
        raise MatrixParseError(str(exc)) from None


def scalar_to_json(a: Scalar):
    return None if a is BOTTOM else a


def vector_to_json(v: Sequence[Scalar]) -> list:
    return [scalar_to_json(e) for e in v]


def matrix_to_json(A: TropMatrix) -> list:
    return [vector_to_json(A.row(i)) for i in range(A.rows)]


def format_matrix(A: TropMatrix) -> str:
    return "; ".join(" ".join(format_scalar(e) for e in A.row(i)) for i in range(A.rows))
