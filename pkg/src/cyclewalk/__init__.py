"""Discrete-time quantum walks on cycles: block-circulant spectra, exact
revival search, and special-state revivals."""

from .exprs import ExpressionError, parse_fraction, parse_value
from .revival import (
    CERTIFICATION_TOL,
    RevivalCertificate,
    lcm_denominators,
    power_deviation,
    reconstruct_fraction,
    revival_period,
    rho_for,
    undefined_rho_eigenvalues,
)
from .solver import (
    SolutionFamily,
    companion_fractions,
    constant_block_fractions,
    enumerate_seeded,
    k2_seed_window,
    solve_approximate,
    solve_k2,
    solve_k3,
    solve_k4,
    solve_rho_edge,
    solve_two_form,
    undefined_blocks,
)
from .special import (
    DeMoivreSubspace,
    EigenBasis,
    EigenPair,
    build_special_state,
    demoivre_subspace,
    eigenbasis,
)
from .spectral import (
    BlockCirculantVector,
    BlockDiagonalForm,
    BlockStructureError,
    block_diagonalize,
    block_formula,
    circulant_vector,
    eigenphase_power,
    eigenvalues_closed_form,
    fourier_matrix,
    full_spectrum,
    phase_multiset_distance,
    principal_phase,
    walk_fourier,
)
from .tables import TableReport, verify_table
from .walk import (
    HADAMARD,
    CoinParams,
    LineWalkResult,
    WalkOperator,
    WalkerState,
    build_coin,
    build_shift_cycle,
    build_walk_operator,
    evolve,
    line_walk,
)

__version__ = "0.1.0"

__all__ = [
    "CERTIFICATION_TOL",
    "BlockCirculantVector",
    "BlockDiagonalForm",
    "BlockStructureError",
    "CoinParams",
    "DeMoivreSubspace",
    "EigenBasis",
    "EigenPair",
    "ExpressionError",
    "HADAMARD",
    "LineWalkResult",
    "RevivalCertificate",
    "SolutionFamily",
    "TableReport",
    "WalkOperator",
    "WalkerState",
    "block_diagonalize",
    "block_formula",
    "build_coin",
    "build_shift_cycle",
    "build_special_state",
    "build_walk_operator",
    "circulant_vector",
    "companion_fractions",
    "constant_block_fractions",
    "demoivre_subspace",
    "eigenbasis",
    "eigenphase_power",
    "eigenvalues_closed_form",
    "enumerate_seeded",
    "evolve",
    "fourier_matrix",
    "full_spectrum",
    "k2_seed_window",
    "lcm_denominators",
    "line_walk",
    "parse_fraction",
    "parse_value",
    "phase_multiset_distance",
    "power_deviation",
    "principal_phase",
    "reconstruct_fraction",
    "revival_period",
    "rho_for",
    "solve_approximate",
    "solve_k2",
    "solve_k3",
    "solve_k4",
    "solve_rho_edge",
    "solve_two_form",
    "undefined_blocks",
    "undefined_rho_eigenvalues",
    "verify_table",
    "walk_fourier",
]
