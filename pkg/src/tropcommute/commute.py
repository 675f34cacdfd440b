"""Matrices commuting with a finite 2x2 matrix ``A`` in max-plus algebra.

``B`` commutes with ``A`` exactly when ``x = (b11, b12, b21, b22)`` solves the
two-sided system ``C ⊗ x = D ⊗ x`` built from ``A``.  The solution set is a
cone whose basis depends only on how ``a11`` compares with ``a22``:

* ``a11 > a22``: four extremals, two of them governed by ``alpha1``/``alpha2``;
* ``a11 < a22``: the mirror image under swapping indices 1 and 2;
* ``a11 = a22``: six extremals, independent of any alpha.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from tropcommute.cone import combine, in_span, is_extremal, scale, support
from tropcommute.matrix import (
    DimensionError,
    TropMatrix,
    TropVector,
    format_vector,
    mat_eq,
    mat_otimes,
    mat_vec,
    matrix_from_json,
    matrix_to_json,
    scalar_to_json,
    vec_eq,
    vector_to_json,
)
from tropcommute.semiring import BOTTOM, DEFAULT_TOL, Scalar, format_scalar, to_float

B_ = BOTTOM

# Candidate formulas for alpha2 when a11 < a22.
SYMMETRIC_ALPHA2 = "symmetric"  # min(a21 - a22, a11 - a12): indices 1 <-> 2 swapped
PRINTED_ALPHA2 = "printed"  # min(a21 - a22, a11 - a21)

# Scales below 10 * tol that still classify as unequal are flagged.
_NEAR_DEGENERATE_FACTOR = 10.0


class CaseTag(str, enum.Enum):
    ABOVE = "AboveDiagonal"
    BELOW = "BelowDiagonal"
    EQUAL = "EqualDiagonal"

    def __str__(self):
        return self.value


class NonFiniteMatrixError(ValueError):
    """``A`` must be a finite 2x2 matrix."""


def _finite_entries(A: TropMatrix) -> tuple[float, float, float, float]:
    if A.shape != (2, 2):
        raise DimensionError(f"need a 2x2 matrix, got {A.rows}x{A.cols}")
    if not A.is_finite():
        raise NonFiniteMatrixError("A must have finite entries")
    return A.entries


@dataclass(frozen=True)
class TwoSidedSystem:
    C: TropMatrix
    D: TropMatrix

    def sides(self, x: Sequence[Scalar]) -> tuple[TropVector, TropVector]:
        return mat_vec(self.C, x), mat_vec(self.D, x)


def build_system(A: TropMatrix) -> TwoSidedSystem:
    a11, a12, a21, a22 = _finite_entries(A)
    C = TropMatrix(4, 4, (
        a11, B_, a12, B_,
        B_, a11, B_, a12,
        a21, B_, a22, B_,
        B_, a21, B_, a22,
    ))
    D = TropMatrix(4, 4, (
        a11, a21, B_, B_,
        a12, a22, B_, B_,
        B_, B_, a11, a21,
        B_, B_, a12, a22,
    ))
    return TwoSidedSystem(C, D)


def commutes(A: TropMatrix, B: TropMatrix, tol: float = DEFAULT_TOL) -> bool:
    return mat_eq(mat_otimes(A, B), mat_otimes(B, A), tol)


def is_solution(x: Sequence[Scalar], system: TwoSidedSystem, tol: float = DEFAULT_TOL) -> bool:
    left, right = system.sides(x)
    return vec_eq(left, right, tol)


def classify(A: TropMatrix, tol: float = DEFAULT_TOL) -> CaseTag:
    a11, _, _, a22 = _finite_entries(A)
    if abs(a11 - a22) <= tol:
        return CaseTag.EQUAL
    return CaseTag.ABOVE if a11 > a22 else CaseTag.BELOW


def alphas(A: TropMatrix, case: CaseTag, below_alpha2: str = SYMMETRIC_ALPHA2):
    """``(alpha1, alpha2)`` for the unequal-diagonal cases; ``(None, None)`` otherwise."""
    a11, a12, a21, a22 = _finite_entries(A)
    if case is CaseTag.ABOVE:
        return min(a12 - a11, a22 - a21), min(a21 - a11, a22 - a12)
    if case is CaseTag.BELOW:
        alpha1 = min(a12 - a22, a11 - a21)
        if below_alpha2 == SYMMETRIC_ALPHA2:
            alpha2 = min(a21 - a22, a11 - a12)
        elif below_alpha2 == PRINTED_ALPHA2:
            alpha2 = min(a21 - a22, a11 - a21)
        else:
            raise ValueError(f"unknown alpha2 form {below_alpha2!r}")
        return alpha1, alpha2
    return None, None


@dataclass(frozen=True)
class ConeBasis:
    """Basis of the commuting cone of ``matrix``.

    ``basis`` holds the scaled extremals; ``raw`` the same rays in their
    unscaled closed form (entries taken straight from ``A``).
    """

    matrix: TropMatrix
    case: CaseTag
    basis: tuple[TropVector, ...]
    raw: tuple[TropVector, ...]
    alpha1: float | None = None
    alpha2: float | None = None
    warnings: tuple[str, ...] = ()

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


def _diag_warning(A: TropMatrix, tol: float) -> tuple[str, ...]:
    gap = abs(A.entries[0] - A.entries[3])
    if 0 < gap <= _NEAR_DEGENERATE_FACTOR * tol:
        return (f"near-degenerate diagonal: |a11 - a22| = {gap:.3g} is within "
                f"{_NEAR_DEGENERATE_FACTOR:g} x tol; the basis shape changes across this boundary",)
    return ()


def basis_commuting_cone(
    A: TropMatrix,
    tol: float = DEFAULT_TOL,
    below_alpha2: str = SYMMETRIC_ALPHA2,
) -> ConeBasis:
    a11, a12, a21, a22 = _finite_entries(A)
    case = classify(A, tol)
    alpha1, alpha2 = alphas(A, case, below_alpha2)
    if case is CaseTag.ABOVE:
        raw = [(0, B_, B_, 0), (0, alpha1, B_, 0), (0, B_, alpha2, 0), (a11, a12, a21, B_)]
    elif case is CaseTag.BELOW:
        raw = [(0, B_, B_, 0), (0, alpha1, B_, 0), (0, B_, alpha2, 0), (B_, a12, a21, a22)]
    else:
        raw = [
            (0, B_, B_, 0),
            (a21, a11, B_, a21),
            (a12, B_, a11, a12),
            (a11, a12, a21, B_),
            (B_, a12, a21, a22),
            (B_, a12, a21, B_),
        ]
    raw_vecs = tuple(TropVector(v) for v in raw)
    return ConeBasis(
        matrix=A,
        case=case,
        basis=tuple(scale(v) for v in raw_vecs),
        raw=raw_vecs,
        alpha1=alpha1,
        alpha2=alpha2,
        warnings=_diag_warning(A, tol),
    )


# --- brute-force oracle ----------------------------------------------------

def default_grid(radius: int = 5) -> list[Scalar]:
    """Integers ``-radius..radius`` plus bottom."""
    if radius < 0:
        raise ValueError("grid radius must be non-negative")
    return [BOTTOM] + [float(k) for k in range(-radius, radius + 1)]


def _as_float_array(M: TropMatrix) -> np.ndarray:
    return np.array([to_float(e) for e in M.entries]).reshape(M.rows, M.cols)


def enumerate_commuting(
    A: TropMatrix, grid: Iterable[Scalar] | None = None, tol: float = DEFAULT_TOL
) -> list[TropVector]:
    """Every ``x`` in ``grid ** 4`` solving the system of ``A``, in product order.

    Vectorised over all candidates; bottom is carried as ``-inf`` inside the
    numpy arrays, which is safe because no ``+inf`` can arise.
    """
    values = list(default_grid() if grid is None else grid)
    if not values:
        return []
    system = build_system(A)
    C, D = _as_float_array(system.C), _as_float_array(system.D)
    g = np.array([to_float(v) for v in values])
    X = np.stack(np.meshgrid(g, g, g, g, indexing="ij"), axis=-1).reshape(-1, 4)
    left = np.max(C[None, :, :] + X[:, None, :], axis=2)
    right = np.max(D[None, :, :] + X[:, None, :], axis=2)
    ok = np.isclose(left, right, rtol=0.0, atol=tol).all(axis=1)
    idx = np.flatnonzero(ok)
    # rebuild from the grid values so bottom stays the sentinel object
    n = len(values)
    out = []
    for k in idx:
        i0, r = divmod(int(k), n ** 3)
        i1, r = divmod(r, n ** 2)
        i2, i3 = divmod(r, n)
        out.append(TropVector((values[i0], values[i1], values[i2], values[i3])))
    return out


def random_lambda(rng: random.Random, bottom_prob: float = 0.3, span: float = 5.0) -> Scalar:
    if rng.random() < bottom_prob:
        return BOTTOM
    return rng.uniform(-span, span)


# --- verification report ---------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: TropVector | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = vector_to_json(self.witness)
        return out


@dataclass
class VerificationReport:
    matrix: TropMatrix
    case: CaseTag
    basis: tuple[TropVector, ...]
    alpha1: float | None
    alpha2: float | None
    seed: int
    checks: list[Check] = field(default_factory=list)
    warnings: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "matrix": matrix_to_json(self.matrix),
            "case": self.case.value,
            "basis": [vector_to_json(v) for v in self.basis],
            "alpha1": None if self.alpha1 is None else scalar_to_json(self.alpha1),
            "alpha2": None if self.alpha2 is None else scalar_to_json(self.alpha2),
            "seed": self.seed,
            "checks": [c.to_json() for c in self.checks],
            "warnings": list(self.warnings),
        }

    def to_text(self) -> str:
        lines = [f"seed: {self.seed}", f"case: {self.case.value}"]
        if self.alpha1 is not None:
            lines.append(f"alpha1: {format_scalar(self.alpha1)}")
            lines.append(f"alpha2: {format_scalar(self.alpha2)}")
        for i, v in enumerate(self.basis, start=1):
            lines.append(f"beta{i} = {format_vector(v)}")
        for w in self.warnings:
            lines.append(f"WARNING: {w}")
        for c in self.checks:
            line = f"[{'PASS' if c.passed else 'FAIL'}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            if c.witness is not None:
                line += f" witness={format_vector(c.witness)}"
            lines.append(line)
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _first(items):
    return next(iter(items), None)


def verify_basis(
    A: TropMatrix,
    grid: Iterable[Scalar] | None = None,
    basis: Sequence[TropVector] | None = None,
    *,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
    trials: int = 200,
) -> VerificationReport:
    """Check a basis of the commuting cone of ``A`` against independent oracles.

    ``basis`` defaults to :func:`basis_commuting_cone`; passing another set
    lets callers test candidate or deliberately broken bases.  The checks are

    ``solutions``   every basis vector solves ``C ⊗ x = D ⊗ x``;
    ``cardinality`` 4 vectors off the equal diagonal, 6 on it;
    ``independent`` no vector lies in the span of the others;
    ``extremal``    each vector is extremal in the cone the set generates;
    ``coverage``    every grid solution lies in the span;
    ``closure``     random combinations of the basis are solutions.
    """
    cone = basis_commuting_cone(A, tol)
    vectors = tuple(cone.basis if basis is None else (TropVector(v) for v in basis))
    system = build_system(A)
    grid = list(default_grid() if grid is None else grid)
    report = VerificationReport(
        matrix=A,
        case=cone.case,
        basis=vectors,
        alpha1=cone.alpha1,
        alpha2=cone.alpha2,
        seed=seed,
        warnings=cone.warnings,
    )
    checks = report.checks

    bad = _first(v for v in vectors if not is_solution(v, system, tol))
    checks.append(Check("solutions", bad is None, witness=bad))

    expected = 6 if cone.case is CaseTag.EQUAL else 4
    checks.append(Check("cardinality", len(vectors) == expected,
                        detail=f"{len(vectors)} vectors, expected {expected}"))

    dependent = _first(
        v for i, v in enumerate(vectors) if in_span(v, vectors[:i] + vectors[i + 1:], tol)
    )
    checks.append(Check("independent", dependent is None, witness=dependent))

    non_extremal = _first(v for v in vectors if not support(v) or not is_extremal(v, vectors, tol))
    checks.append(Check("extremal", non_extremal is None, witness=non_extremal))

    solutions = enumerate_commuting(A, grid, tol)
    uncovered = [x for x in solutions if not in_span(x, vectors, tol)]
    witness = None
    if uncovered:
        witness = scale(min(uncovered, key=lambda x: len(support(x))))
    checks.append(Check(
        "coverage", not uncovered,
        detail=f"{len(solutions) - len(uncovered)}/{len(solutions)} grid solutions in span",
        witness=witness,
    ))

    rng = random.Random(seed)
    failed = None
    if vectors:
        for _ in range(trials):
            x = combine([random_lambda(rng) for _ in vectors], vectors)
            if not is_solution(x, system, tol):
                failed = x
                break
    checks.append(Check("closure", failed is None, detail=f"{trials} random combinations",
                        witness=failed))
    return report


def report_from_json(data: dict) -> tuple[TropMatrix, list[TropVector]]:
    """Recover ``(A, basis)`` from :meth:`VerificationReport.to_json` output."""
    return matrix_from_json(data["matrix"]), [TropVector(v) for v in data["basis"]]


def product_grid(values: Sequence[Scalar], dim: int = 4):
    return (TropVector(x) for x in itertools.product(values, repeat=dim))
