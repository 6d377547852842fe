"""Unruh-effect degradation of tripartite GHZ/W entanglement.

Library plus CLI for one inertial and two uniformly accelerated
observers sharing GHZ or W states of fermionic or bosonic field modes.
Logarithmic negativity is computed both from reference closed forms and
from an independent numeric partial-transpose pipeline.
"""

from .linalg import (
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    Ket,
    SubsystemLayout,
    hermitian_eigenvalues,
    ket_partial_trace,
    kron,
    partial_trace,
    partial_transpose,
)
from .measures import BIPARTITE, QUANTITIES, TRIPARTITE, NegativityResult, from_block_sum, from_spectrum
from .states import (
    C_LIGHT,
    U_MAX,
    AccelParam,
    PhysicalAccel,
    Truncation,
    accel_to_param,
    boson_mode_expansion,
    build_ghz,
    build_w,
    fermion_mode_expansion,
)
from .fermion import FermionScenario
from .boson import AR_ZERO, BosonScenario, SeriesConvergenceError

__version__ = "0.1.0"

__all__ = [
    "AR_ZERO",
    "AccelParam",
    "BIPARTITE",
    "BosonScenario",
    "C_LIGHT",
    "FermionScenario",
    "IDENTITY_2",
    "Ket",
    "NegativityResult",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "PhysicalAccel",
    "QUANTITIES",
    "SeriesConvergenceError",
    "SubsystemLayout",
    "TRIPARTITE",
    "Truncation",
    "U_MAX",
    "accel_to_param",
    "boson_mode_expansion",
    "build_ghz",
    "build_w",
    "fermion_mode_expansion",
    "from_block_sum",
    "from_spectrum",
    "hermitian_eigenvalues",
    "ket_partial_trace",
    "kron",
    "partial_trace",
    "partial_transpose",
    "__version__",
]
