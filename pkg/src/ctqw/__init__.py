"""Continuous-time quantum walks on structured regular graphs.

Simulation through spectral decompositions (circulant, Kronecker or dense
routes), closed-form per-family amplitudes, classical-walk baselines, and
instantaneous-uniform-mixing certificates and scans.
"""

from .classical import ct_limit, discrete_step, transition_matrix, two_state_ct
from .exceptions import (
    ContractViolationError,
    DegenerateChainError,
    DegenerateGraphError,
    InvalidDimensionError,
    InvalidParameterError,
    SizeLimitError,
    ToleranceError,
)
from .graphs import (
    Graph,
    Hamiltonian,
    as_graph,
    balanced_multipartite,
    cayley_symmetric,
    complete_graph,
    cycle_graph,
    from_edge_list,
    hamiltonian,
    hypercube_graph,
    to_edge_list,
)
from .mixing import (
    MixingReport,
    MixingScan,
    certify_complete,
    certify_multipartite,
    conjecture_evidence,
    numeric_cross_check,
    scan_mixing,
    tv_to_uniform,
)
from .spectral import (
    SpectralDecomposition,
    circulant_eigenvalues,
    dft_matrix,
    evolve_spectral,
    hermitian_eigendecomposition,
    kronecker,
)
from .walk import (
    ContinuousTimeQuantumWalk,
    WalkState,
    amplitudes_complete,
    amplitudes_cycle,
    amplitudes_cycle_bessel,
    amplitudes_multipartite,
    collapse,
    default_bessel_truncation,
    evolve,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Hamiltonian",
    "SpectralDecomposition",
    "WalkState",
    "MixingReport",
    "MixingScan",
    "ContinuousTimeQuantumWalk",
    "as_graph",
    "balanced_multipartite",
    "cayley_symmetric",
    "complete_graph",
    "cycle_graph",
    "hypercube_graph",
    "hamiltonian",
    "to_edge_list",
    "from_edge_list",
    "dft_matrix",
    "circulant_eigenvalues",
    "kronecker",
    "hermitian_eigendecomposition",
    "evolve_spectral",
    "evolve",
    "collapse",
    "amplitudes_complete",
    "amplitudes_multipartite",
    "amplitudes_cycle",
    "amplitudes_cycle_bessel",
    "default_bessel_truncation",
    "discrete_step",
    "transition_matrix",
    "two_state_ct",
    "ct_limit",
    "tv_to_uniform",
    "certify_complete",
    "certify_multipartite",
    "scan_mixing",
    "conjecture_evidence",
    "numeric_cross_check",
    "ContractViolationError",
    "DegenerateChainError",
    "DegenerateGraphError",
    "InvalidDimensionError",
    "InvalidParameterError",
    "SizeLimitError",
    "ToleranceError",
]
