"""Intelligent states of the su(3) irreps (lambda, 0) from coupled coherent states."""

__version__ = "0.1.0"

from .analysis import (
    UncertaintyRecord,
    alpha_grid,
    alpha_minus_one_limit,
    expectation,
    predicted_eigenvalue,
    scan_alpha,
    variances,
)
from .coherent import (
    CoherentAngles,
    FundamentalEigensystem,
    angles_from_eigenvector,
    coherent_state,
    d_function,
    fundamental_eigensystem,
    isotropy_check,
    small_d,
    su2_rotation,
)
from .coupling import (
    CouplingTriple,
    IntelligentState,
    cg_stretched,
    enumerate_all_intelligent,
    intelligent_state_coupled,
)
from .observables import ObservableSet, fundamental_observables, mub_overlap_check, promote
from .oracle import EigenspaceDecomposition, direct_eigensystem, eigenspace_match, tensor_product_state
from .rep_core import BasisState, IrrepBasis, cartan_matrix, enumerate_basis, ladder_matrix, number_matrix
