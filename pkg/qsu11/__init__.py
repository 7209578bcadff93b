# U_q(su(1,1)) 正离散表示模块

from .representation import (
    GEN_A,
    GEN_B,
    GEN_C,
    GEN_D,
    QEigvecCoeffs,
    QRepLabel,
    asc_normalized,
    defrel_residual,
    generator_matrix,
    q_eigen_residual,
    q_eigvec_coeffs,
    q_monomial,
    q_vector_closed,
    q_vector_series,
    qrep_action,
    star_residual,
    ysa_matrix,
)
from .coupling import (
    QExpansionResult,
    coproduct_relation_residual,
    expansion_constant,
    q_coupled_realized,
    q_expansion_residual,
    q_expansion_sides,
    q_uncoupled_eigen_residual,
    q_uncoupled_realized,
    q_uncoupled_series,
    uncoupled_coefficients,
)

__all__ = [
    'GEN_A',
    'GEN_B',
    'GEN_C',
    'GEN_D',
    'QEigvecCoeffs',
    'QRepLabel',
    'asc_normalized',
    'defrel_residual',
    'generator_matrix',
    'q_eigen_residual',
    'q_eigvec_coeffs',
    'q_monomial',
    'q_vector_closed',
    'q_vector_series',
    'qrep_action',
    'star_residual',
    'ysa_matrix',
    'QExpansionResult',
    'coproduct_relation_residual',
    'expansion_constant',
    'q_coupled_realized',
    'q_expansion_residual',
    'q_expansion_sides',
    'q_uncoupled_eigen_residual',
    'q_uncoupled_realized',
    'q_uncoupled_series',
    'uncoupled_coefficients',
]
