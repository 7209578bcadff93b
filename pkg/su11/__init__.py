# su(1,1) 正离散系列模块

from .representation import (
    J0,
    J1,
    J2,
    JMINUS,
    JPLUS,
    X2,
    XC,
    XPHI,
    EigvecCoeffs,
    HamiltonianKind,
    RepLabel,
    commutator_residual,
    eigen_residual,
    eigvec_coeffs,
    generator_matrix,
    hamiltonian_matrix,
    predicted_discrete_spectrum,
    rep_action,
    truncated_spectrum,
)
from .coupling import (
    CoupledLabel,
    cgc,
    cgc_intertwining_residual,
    convolution_residual,
    convolution_sides,
    coupled_argument,
    coupled_gram_residual,
    coupled_realized,
    expansion_residual,
    expansion_sides,
    realization_residual,
    realized_vector,
    s_coeff,
)
from .transform import (
    ExpColumn,
    alpha_from_c,
    exp_column_deviation,
    exp_identity_residual,
    exp_j2_column,
    meixner_column,
    xc_conjugation_residual,
)

__all__ = [
    'J0',
    'J1',
    'J2',
    'JMINUS',
    'JPLUS',
    'X2',
    'XC',
    'XPHI',
    'EigvecCoeffs',
    'HamiltonianKind',
    'RepLabel',
    'commutator_residual',
    'eigen_residual',
    'eigvec_coeffs',
    'generator_matrix',
    'hamiltonian_matrix',
    'predicted_discrete_spectrum',
    'rep_action',
    'truncated_spectrum',
    'CoupledLabel',
    'cgc',
    'cgc_intertwining_residual',
    'convolution_residual',
    'convolution_sides',
    'coupled_argument',
    'coupled_gram_residual',
    'coupled_realized',
    'expansion_residual',
    'expansion_sides',
    'realization_residual',
    'realized_vector',
    's_coeff',
    'ExpColumn',
    'alpha_from_c',
    'exp_column_deviation',
    'exp_identity_residual',
    'exp_j2_column',
    'meixner_column',
    'xc_conjugation_residual',
]
