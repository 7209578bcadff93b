# 正交多项式模块

from .families import (
    ALL_TAGS,
    HYPERGEOMETRIC,
    RECURRENCE,
    MuPoint,
    PolyFamily,
    PolyValue,
    eval_poly,
    eval_result,
    eval_sequence,
    hermite_norm,
    jacobi_norm,
    jacobi_norm_ab,
    laguerre_norm,
    scaled_meixner,
)
from .askey_wilson import (
    aw_h0,
    aw_integrate,
    aw_norm,
    aw_quadrature,
    aw_reduced_weight,
    aw_weight,
    h_factor,
)

__all__ = [
    'ALL_TAGS',
    'HYPERGEOMETRIC',
    'RECURRENCE',
    'MuPoint',
    'PolyFamily',
    'PolyValue',
    'eval_poly',
    'eval_result',
    'eval_sequence',
    'hermite_norm',
    'jacobi_norm',
    'jacobi_norm_ab',
    'laguerre_norm',
    'scaled_meixner',
    'aw_h0',
    'aw_integrate',
    'aw_norm',
    'aw_quadrature',
    'aw_reduced_weight',
    'aw_weight',
    'h_factor',
]
