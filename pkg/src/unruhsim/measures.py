"""Negativity bookkeeping.

One convention everywhere: N is the sum of the negative eigenvalues of a
partial transpose (or of analytic block negativities), and the
logarithmic negativity is log2(1 - 2N) in bits.  The sum convention
coincides with the single-negative-eigenvalue convention whenever only
one eigenvalue is negative, and equals log2 of the trace norm for
trace-one matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "TRIPARTITE",
    "BIPARTITE",
    "QUANTITIES",
    "NegativityResult",
    "log_negativity",
    "from_spectrum",
    "from_block_sum",
]

TRIPARTITE = ("A-RS", "R-AS", "S-AR")
BIPARTITE = ("RS", "AR", "AS")
QUANTITIES = TRIPARTITE + BIPARTITE


def log_negativity(negativity_sum: float) -> float:
    """log2(1 - 2N), zero iff N is zero."""
    return math.log2(1.0 - 2.0 * negativity_sum)


@dataclass(frozen=True)
class NegativityResult:
    """Negativity sum, its logarithmic form, and provenance extras.

    tail_bound is the truncation error bound for bosonic results (zero
    for fermionic ones); n_reached / last_shell are populated by the
    adaptive block series.
    """

    negativity_sum: float
    log_negativity: float
    spectrum: tuple[float, ...] | None = None
    tail_bound: float = 0.0
    n_reached: int | None = None
    last_shell: float | None = None


def _result(negativity_sum: float, **extras) -> NegativityResult:
    return NegativityResult(
        negativity_sum=negativity_sum,
        log_negativity=log_negativity(negativity_sum),
        **extras,
    )


def from_spectrum(eigs, clamp: float) -> NegativityResult:
    """Sum eigenvalues below -clamp into a result; others are ignored."""
    if clamp < 0.0:
        raise ValueError(f"clamp must be >= 0, got {clamp!r}")
    spectrum = tuple(float(e) for e in eigs)
    nsum = math.fsum(e for e in spectrum if e < -clamp)
    return _result(nsum, spectrum=spectrum)


def from_block_sum(blocks, tail: float, **extras) -> NegativityResult:
    """Sum analytic block negativities; every block must be <= 0."""
    if tail < 0.0:
        raise ValueError(f"tail bound must be >= 0, got {tail!r}")
    vals = [float(b) for b in blocks]
    for b in vals:
        if b > 0.0:
            raise ValueError(f"positive block value {b!r}: block negativities must be <= 0")
    return _result(math.fsum(vals), tail_bound=float(tail), **extras)
