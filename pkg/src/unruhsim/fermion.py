"""Fermionic pipeline: wedge-traced GHZ/W density matrices, closed-form
negativities, bipartite reductions, and the RS disentanglement curve.

The reference closed forms are kept verbatim.  The independent
oracle is the numeric pipeline (ket, wedge trace, partial transpose,
eigensolve); where the two disagree the comparison helpers in
``diagnostics`` report both values, and nothing is reconciled silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import SubsystemLayout, hermitian_eigenvalues, ket_partial_trace, partial_transpose
from .measures import BIPARTITE, NegativityResult, QUANTITIES, TRIPARTITE, from_spectrum
from .states import AccelParam, U_MAX, build_ghz, build_w

__all__ = [
    "FermionScenario",
    "rindler_density",
    "reduced_density",
    "numeric_log_negativity",
    "ghz_closed_negativity",
    "w_bipartite_closed_negativity",
    "closed_log_negativity",
    "rs_zero_curve",
    "rs_smallest_pt_eigenvalue",
]

#: Eigenvalues within EIG_CLAMP_SCALE * dimension of zero are treated as
#: zero before negativity summation, so roundoff cannot masquerade as
#: entanglement.
EIG_CLAMP_SCALE = 1e-12

#: Factor whose indices get transposed for each quantity.
_PT_FACTOR = {"A-RS": "A", "R-AS": "I", "S-AR": "I'", "RS": "I", "AR": "A", "AS": "A"}

#: Factor traced out to form each bipartite reduction.
_DROP_FOR_PAIR = {"RS": "A", "AR": "I'", "AS": "I"}

_STATES = ("ghz", "w")


def _angle(u) -> float:
    if isinstance(u, AccelParam):
        if u.kind != "fermion":
            raise ValueError(f"expected a fermionic parameter, got kind {u.kind!r}")
        return u.value
    v = float(u)
    if not 0.0 <= v <= U_MAX:
        raise ValueError(f"fermionic parameter u={v!r} outside [0, pi/4)")
    return v


@dataclass(frozen=True)
class FermionScenario:
    """A GHZ or W state shared with two accelerated observers."""

    state: str
    u1: AccelParam
    u2: AccelParam

    def __post_init__(self):
        state = str(self.state).lower()
        if state not in _STATES:
            raise ValueError(f"unknown state {self.state!r}; expected one of {_STATES}")
        object.__setattr__(self, "state", state)
        for name in ("u1", "u2"):
            val = getattr(self, name)
            if not isinstance(val, AccelParam):
                val = AccelParam.fermionic(float(val))
            elif val.kind != "fermion":
                raise ValueError(f"{name} must be fermionic, got kind {val.kind!r}")
            object.__setattr__(self, name, val)


def _rindler_ket(s: FermionScenario):
    build = build_ghz if s.state == "ghz" else build_w
    return build("fermion", s.u1, s.u2)


def rindler_density(s: FermionScenario) -> tuple[np.ndarray, SubsystemLayout]:
    """8x8 density matrix over (A, I, I') after tracing the hidden wedges."""
    return ket_partial_trace(_rindler_ket(s), ("II", "II'"))


def reduced_density(s: FermionScenario, pair: str) -> tuple[np.ndarray, SubsystemLayout]:
    """4x4 bipartite reduction, tracing the complementary observer too."""
    if pair not in BIPARTITE:
        raise ValueError(f"unknown pair {pair!r}; expected one of {BIPARTITE}")
    return ket_partial_trace(_rindler_ket(s), ("II", "II'", _DROP_FOR_PAIR[pair]))


def numeric_log_negativity(s: FermionScenario, quantity: str) -> NegativityResult:
    """Partial-transpose eigensolve for any 1-vs-2 partition or pair."""
    if quantity in TRIPARTITE:
        rho, lay = rindler_density(s)
    elif quantity in BIPARTITE:
        rho, lay = reduced_density(s, quantity)
    else:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    pt = partial_transpose(rho, lay, _PT_FACTOR[quantity])
    eigs = hermitian_eigenvalues(pt)
    return from_spectrum(eigs, clamp=EIG_CLAMP_SCALE * rho.shape[0])


def ghz_closed_negativity(partition: str, u1, u2) -> float:
    """Closed-form negative eigenvalue for a GHZ 1-vs-2 partition.

    A-RS:  (1/4) sin^2(u1) sin^2(u2) - (1/4) sqrt(sin^4 u1 sin^4 u2 + 4 cos^2 u1 cos^2 u2)
    R-AS / S-AR use the corresponding sin^2 * cos^2 variants.
    """
    u1, u2 = _angle(u1), _angle(u2)
    s1, c1 = math.sin(u1) ** 2, math.cos(u1) ** 2
    s2, c2 = math.sin(u2) ** 2, math.cos(u2) ** 2
    if partition == "A-RS":
        x = s1 * s2
    elif partition == "R-AS":
        x = s1 * c2
    elif partition == "S-AR":
        x = s2 * c1
    else:
        raise ValueError(f"unknown partition {partition!r}; expected one of {TRIPARTITE}")
    return 0.25 * x - 0.25 * math.sqrt(x * x + 4.0 * c1 * c2)


def w_bipartite_closed_negativity(pair: str, u1, u2) -> float:
    """Reference closed-form negativity of a W bipartite reduction.

    The reference AR form depends only on u2 and the AS form only on u1.
    The numeric pipeline shows the opposite dependence (AR on u1, AS on
    u2); the diagnostics module surfaces that disagreement rather than
    patching the formula.
    """
    u1, u2 = _angle(u1), _angle(u2)
    c1, c2 = math.cos(u1) ** 2, math.cos(u2) ** 2
    if pair == "RS":
        cc = c1 * c2
        rad = 9.0 - 12.0 * (c1 + c2) + 12.0 * cc + 4.0 * (c1 * c1 + c2 * c2)
        return 0.5 - (c1 + c2) / 3.0 + cc / 3.0 - math.sqrt(rad) / 6.0
    if pair == "AR":
        return (1.0 - math.sqrt(1.0 + 4.0 * c2 * c2)) / 6.0
    if pair == "AS":
        return (1.0 - math.sqrt(1.0 + 4.0 * c1 * c1)) / 6.0
    raise ValueError(f"unknown pair {pair!r}; expected one of {BIPARTITE}")


def closed_log_negativity(state: str, quantity: str, u1, u2) -> float | None:
    """Reference closed form as a log-negativity, or None when none exists.

    No closed forms exist for the W 1-vs-2 partitions or the GHZ
    bipartite reductions (the latter are identically disentangled).
    """
    if state == "ghz" and quantity in TRIPARTITE:
        return math.log2(1.0 - 2.0 * ghz_closed_negativity(quantity, u1, u2))
    if state == "w" and quantity in BIPARTITE:
        n = w_bipartite_closed_negativity(quantity, u1, u2)
        return math.log2(1.0 - 2.0 * min(n, 0.0))
    return None


def rs_zero_curve(u1) -> float | None:
    """Solve cos(u2) = sqrt(2) sin(u1) / sqrt(2 - cos^2 u1) for u2.

    Returns None when the implied u2 leaves the representable range, as
    happens for small u1 where the W RS reduction never disentangles.
    """
    u1 = _angle(u1)
    c2 = math.sqrt(2.0) * math.sin(u1) / math.sqrt(2.0 - math.cos(u1) ** 2)
    if c2 > 1.0:
        return None
    u2 = math.acos(c2)
    return u2 if u2 <= U_MAX else None


def rs_smallest_pt_eigenvalue(u1, u2) -> float:
    """Smallest eigenvalue of the partially transposed W RS reduction.

    Unlike the clamped negativity this crosses zero transversally, which
    is what the zero-curve bisection needs.
    """
    s = FermionScenario("w", _angle(u1), _angle(u2))
    rho, lay = reduced_density(s, "RS")
    pt = partial_transpose(rho, lay, "I")
    return float(hermitian_eigenvalues(pt)[0])
