# 数值基础模块

from .special import (
    ln_gamma,
    gamma,
    pochhammer,
    factorial,
    CompensatedSum,
    compensated_sum,
)
from .tridiag import TridiagSym, tridiag_eigen, tridiag_eigvals
from .quadrature import WeightFamily, QuadRule, gauss_rule, recurrence_coefficients

__all__ = [
    'ln_gamma',
    'gamma',
    'pochhammer',
    'factorial',
    'CompensatedSum',
    'compensated_sum',
    'TridiagSym',
    'tridiag_eigen',
    'tridiag_eigvals',
    'WeightFamily',
    'QuadRule',
    'gauss_rule',
    'recurrence_coefficients',
]
