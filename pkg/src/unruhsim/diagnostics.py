"""Closed-form versus numeric-pipeline comparisons.

The reference closed forms are kept verbatim, defects included; the
numeric route (ket, wedge trace, partial transpose, eigensolve) is the
ground truth.  These helpers put both
values side by side so a disagreement is reported, never reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import boson, fermion
from .measures import QUANTITIES
from .states import Truncation

__all__ = ["OracleRecord", "fermion_record", "boson_record", "fermion_survey", "boson_survey"]

FERMION_TOL = 1e-9
BOSON_TOL_BASE = 1e-6


@dataclass(frozen=True)
class OracleRecord:
    """One closed-form / numeric comparison at a parameter point."""

    field: str
    state: str
    quantity: str
    p1: float
    p2: float
    closed_form: float
    numeric: float
    tolerance: float

    @property
    def delta(self) -> float:
        return self.numeric - self.closed_form

    @property
    def agrees(self) -> bool:
        return abs(self.delta) <= self.tolerance

    def describe(self) -> str:
        verdict = "ok" if self.agrees else "MISMATCH"
        return (
            f"{self.field} {self.state} {self.quantity} at ({self.p1:.6g}, {self.p2:.6g}): "
            f"closed={self.closed_form:.12g} numeric={self.numeric:.12g} "
            f"delta={self.delta:.3e} tol={self.tolerance:.3e} [{verdict}]"
        )


def fermion_record(state: str, quantity: str, u1: float, u2: float, tol: float = FERMION_TOL) -> OracleRecord | None:
    """Compare the reference fermionic closed form against the pipeline."""
    closed = fermion.closed_log_negativity(state, quantity, u1, u2)
    if closed is None:
        return None
    numeric = fermion.numeric_log_negativity(fermion.FermionScenario(state, u1, u2), quantity)
    return OracleRecord("fermion", state, quantity, u1, u2, closed, numeric.log_negativity, tol)


def boson_record(
    state: str,
    quantity: str,
    r1: float,
    r2: float,
    trunc: Truncation | None = None,
    tol_base: float = BOSON_TOL_BASE,
) -> OracleRecord | None:
    """Compare the reference block series against the truncated-matrix pipeline.

    The series is summed over the same index square the matrix holds
    (adaptivity off), and the tolerance is tol_base plus the matrix trace
    deficit, the honest truncation bound.
    """
    trunc = trunc if trunc is not None else Truncation()
    matched = Truncation(n_max=trunc.n_max, series_tol=trunc.series_tol, adaptive=False)
    closed = boson.series_log_negativity(state, quantity, r1, r2, matched)
    if closed is None:
        return None
    scenario = boson.BosonScenario(state, r1, r2, trunc)
    numeric = boson.numeric_log_negativity(scenario, quantity)
    tol = tol_base + numeric.tail_bound + closed.tail_bound
    return OracleRecord("boson", state, quantity, r1, r2, closed.log_negativity, numeric.log_negativity, tol)


def fermion_survey(state: str, grid, quantities=QUANTITIES, tol: float = FERMION_TOL) -> list[OracleRecord]:
    """All available fermionic comparisons over a parameter grid."""
    out = []
    for u1 in grid:
        for u2 in grid:
            for q in quantities:
                rec = fermion_record(state, q, u1, u2, tol)
                if rec is not None:
                    out.append(rec)
    return out


def boson_survey(
    state: str,
    grid,
    trunc: Truncation | None = None,
    quantities=QUANTITIES,
    tol_base: float = BOSON_TOL_BASE,
) -> list[OracleRecord]:
    """All available bosonic comparisons over a parameter grid."""
    out = []
    for r1 in grid:
        for r2 in grid:
            for q in quantities:
                rec = boson_record(state, q, r1, r2, trunc, tol_base)
                if rec is not None:
                    out.append(rec)
    return out
