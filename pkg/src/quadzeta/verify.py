"""Oracle-versus-engine comparison over a grid of (n, k)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .base import QuadraticSetup
from .engine import (
    check_functional_equation,
    closed_form,
    dirichlet_coeffs,
    principal_part,
    solve_recurrence,
    unit_index,
)
from .oracle import (
    ideal_census,
    low_high_census,
    principal_by_search,
    traveling_report,
    unit_quotient_counts,
)
from .polyseries import specialize_q


@dataclass
class Check:
    name: str
    passed: bool
    expected: Any = None
    actual: Any = None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: expected {self.expected!r}, got {self.actual!r}"

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "expected": self.expected, "actual": self.actual}


@dataclass
class GridResult:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, expected, actual) -> Check:
        c = Check(name, expected == actual, expected, actual)
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def verify_symbolic(case, n_max: int, out: GridResult | None = None) -> GridResult:
    out = out or GridResult()
    for n in range(n_max + 1):
        cf = closed_form(case, n).P
        out.add(f"recurrence==closed_form n={n}", cf.nested(), solve_recurrence(case, n).P.nested())
        out.add(f"functional_equation n={n}", True, check_functional_equation(closed_form(case, n)))
    return out


def verify_grid(setup: QuadraticSetup, n_max: int, k_max: int, cross_k: int = 3,
                units: bool = True, workers: int = 1) -> GridResult:
    """Run every oracle check for 0 <= n <= n_max, 0 <= k <= k_max."""
    kind, p = setup.kind, setup.p
    out = verify_symbolic(kind, n_max)
    for n in range(n_max + 1):
        totals = specialize_q(dirichlet_coeffs(kind, n, k_max), p)
        principals = specialize_q(principal_part(kind, n, k_max), p)
        for k in range(k_max + 1):
            census = ideal_census(setup, n, k, keep_records=k <= cross_k, workers=workers)
            tag = f"n={n} k={k}"
            out.add(f"total {tag}", totals[k], census.total)
            out.add(f"principal {tag}", principals[k], census.principal)
            lh = low_high_census(setup, n, k, census)
            out.add(f"low/high types {tag}", [], lh.violations)
            if n >= 1 and k >= 1:
                tr = traveling_report(setup, n, k)
                out.add(f"traveling {tag}", [tr.previous_total, True],
                        [tr.nonprincipal, tr.image_is_nonprincipal_set])
            if k <= cross_k:
                disagree = [r.lattice.key() for r in census.records
                            if r.principal != principal_by_search(r.lattice)]
                out.add(f"principality cross-check {tag}", [], disagree)
        if units and n >= 1:
            big, small = unit_quotient_counts(setup, n)
            ratio = big // small if big % small == 0 else big / small
            out.add(f"unit index n={n}", unit_index(kind, n)(p), ratio)
    return out
