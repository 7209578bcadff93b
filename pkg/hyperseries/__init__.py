# 超几何与基本超几何级数模块

from .truncation import TruncationPolicy, SeriesResult, SeriesAccumulator
from .pfq import (
    SeriesSpec,
    pfq,
    pfq_result,
    hyp1f1,
    hyp2f1,
    nonpositive_integer,
    terminating_2f1_homogeneous,
)
from .qseries import (
    QSeriesSpec,
    ProductResult,
    check_base,
    qpoch,
    qpoch_many,
    qpoch_inf,
    qpoch_inf_result,
    qpoch_inf_many,
    phi_rs,
    phi_rs_result,
    w87,
    w87_result,
    phi32_sequence,
)

__all__ = [
    'TruncationPolicy',
    'SeriesResult',
    'SeriesAccumulator',
    'SeriesSpec',
    'pfq',
    'pfq_result',
    'hyp1f1',
    'hyp2f1',
    'nonpositive_integer',
    'terminating_2f1_homogeneous',
    'QSeriesSpec',
    'ProductResult',
    'check_base',
    'qpoch',
    'qpoch_many',
    'qpoch_inf',
    'qpoch_inf_result',
    'qpoch_inf_many',
    'phi_rs',
    'phi_rs_result',
    'w87',
    'w87_result',
    'phi32_sequence',
]
