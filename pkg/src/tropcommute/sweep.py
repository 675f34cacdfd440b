"""Seeded batch verification across all three diagonal cases."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from tropcommute.bary import concurrency_check
from tropcommute.commute import (
    PRINTED_ALPHA2,
    SYMMETRIC_ALPHA2,
    CaseTag,
    basis_commuting_cone,
    build_system,
    default_grid,
    is_solution,
    verify_basis,
)
from tropcommute.cone import in_span
from tropcommute.matrix import TropMatrix, TropVector, format_vector
from tropcommute.semiring import BOTTOM, DEFAULT_TOL


def random_matrix(rng: random.Random, case: CaseTag, integer: bool = False,
                  lo: float = -10.0, hi: float = 10.0) -> TropMatrix:
    """Random finite 2x2 matrix in the requested diagonal case."""
    draw = (lambda: float(rng.randint(int(lo), int(hi)))) if integer else (lambda: rng.uniform(lo, hi))
    while True:
        a11, a12, a21, a22 = draw(), draw(), draw(), draw()
        if case is CaseTag.EQUAL:
            a22 = a11
        elif (a11 > a22) != (case is CaseTag.ABOVE) or a11 == a22:
            continue
        return TropMatrix(2, 2, (a11, a12, a21, a22))


def substitution_counterexample(A: TropMatrix, tol: float = DEFAULT_TOL) -> dict:
    """The vector that breaks the equal-diagonal basis if beta2/beta3 are swapped
    for their unequal-case lookalikes.

    Needs ``a11 = a22`` and ``2 a11 > a12 + a21``.
    """
    a11, a12, a21, a22 = A.entries
    if abs(a11 - a22) > tol or not 2 * a11 > a12 + a21:
        raise ValueError("need a11 = a22 and 2*a11 > a12 + a21")
    cone = basis_commuting_cone(A, tol)
    alpha1 = min(a12 - a11, a11 - a21)
    alpha2 = min(a21 - a11, a11 - a12)
    primed = list(cone.basis)
    primed[1] = TropVector((0.0, alpha1, BOTTOM, 0.0))
    primed[2] = TropVector((0.0, BOTTOM, alpha2, 0.0))
    b = TropVector((0.0, a11 - a21, a21 - a11, 0.0))
    return {
        "b": b,
        "primed": primed,
        "solves": is_solution(b, build_system(A), tol),
        "in_primed_span": in_span(b, primed, tol),
        "in_basis_span": in_span(b, cone.basis, tol),
    }


def below_alpha2_trial(A: TropMatrix, form: str, grid, tol: float = DEFAULT_TOL,
                       seed: int = 0, trials: int = 200):
    """Verification report for the ``a11 < a22`` basis built with one alpha2 form."""
    cone = basis_commuting_cone(A, tol, below_alpha2=form)
    return verify_basis(A, grid, cone.basis, tol=tol, seed=seed, trials=trials)


@dataclass
class SweepItem:
    name: str
    passed: bool
    detail: str = ""
    witness: str = ""


@dataclass
class SweepReport:
    seed: int
    items: list[SweepItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def to_text(self) -> str:
        lines = [f"seed: {self.seed}"]
        for i in self.items:
            line = f"[{'PASS' if i.passed else 'FAIL'}] {i.name}"
            if i.detail:
                line += f": {i.detail}"
            if i.witness:
                line += f" witness={i.witness}"
            lines.append(line)
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "pass": self.passed,
            "items": [
                {"name": i.name, "pass": i.passed, "detail": i.detail, "witness": i.witness or None}
                for i in self.items
            ],
        }


def run_sweep(seed: int = 0, matrices: int = 10, grid_radius: int = 5,
              tol: float = DEFAULT_TOL, mutate_basis: bool = False,
              geometry_trials: int = 100) -> SweepReport:
    """Run every oracle over seeded random inputs.

    ``mutate_basis`` drops the last basis vector before verification, which
    must make the coverage check fail.
    """
    report = SweepReport(seed)
    grid = default_grid(grid_radius)
    coeff = max(1, min(3, grid_radius))

    for c, case in enumerate(CaseTag):
        rng = random.Random(seed * 1009 + c)
        failures = []
        for k in range(matrices):
            A = random_matrix(rng, case, integer=True, lo=-coeff, hi=coeff)
            basis = basis_commuting_cone(A, tol).basis
            if mutate_basis:
                basis = basis[:-1]
            r = verify_basis(A, grid, basis, tol=tol, seed=seed * 7919 + k)
            if not r.passed:
                failures.append((A, r))
        detail = f"{matrices - len(failures)}/{matrices} matrices"
        witness = ""
        if failures:
            A, r = failures[0]
            bad = next((f for f in r.failures() if f.witness is not None), r.failures()[0])
            witness = f"A=[{A}] {bad.name}"
            if bad.witness is not None:
                witness += f" {format_vector(bad.witness)}"
        report.items.append(SweepItem(f"verify_basis {case.value}", not failures, detail, witness))

    # the "obvious" equal-diagonal substitute misses a solution
    fx = substitution_counterexample(TropMatrix(2, 2, (0.0, -2.0, -3.0, 0.0)), tol)
    ok = fx["solves"] and not fx["in_primed_span"] and fx["in_basis_span"]
    report.items.append(SweepItem(
        "equal-diagonal substitution counterexample", ok,
        f"b={format_vector(fx['b'])} solves={fx['solves']} "
        f"in primed span={fx['in_primed_span']} in basis span={fx['in_basis_span']}",
    ))

    # which alpha2 formula holds up when a11 < a22
    rng = random.Random(seed * 1009 + 17)
    mats = [random_matrix(rng, CaseTag.BELOW, integer=True, lo=-coeff, hi=coeff)
            for _ in range(matrices)]
    outcome = {}
    for form in (SYMMETRIC_ALPHA2, PRINTED_ALPHA2):
        outcome[form] = sum(below_alpha2_trial(A, form, grid, tol, seed).passed for A in mats)
    validated = outcome[SYMMETRIC_ALPHA2] == len(mats)
    report.items.append(SweepItem(
        "below-diagonal alpha2 form", validated,
        f"symmetric form {outcome[SYMMETRIC_ALPHA2]}/{len(mats)}, "
        f"printed form {outcome[PRINTED_ALPHA2]}/{len(mats)}; "
        f"validated: {'symmetric' if validated else 'none'}",
    ))

    rng = random.Random(seed * 1009 + 23)
    worst_ratio = worst_conc = 0.0
    for _ in range(geometry_trials):
        A = random_matrix(rng, CaseTag.ABOVE)
        cone = basis_commuting_cone(A, tol)
        a11, a12, a21, a22 = A.entries
        worst_ratio = max(worst_ratio, abs(cone.alpha2 - cone.alpha1 - (a21 - a12)))
        worst_conc = max(worst_conc, concurrency_check(cone, tol).residual)
    report.items.append(SweepItem("alpha2 - alpha1 = a21 - a12", worst_ratio <= 1e-12,
                                  f"max residual {worst_ratio:.3g} over {geometry_trials}"))
    report.items.append(SweepItem("cevian concurrency", worst_conc <= tol,
                                  f"max residual {worst_conc:.3g} over {geometry_trials}"))
    return report

