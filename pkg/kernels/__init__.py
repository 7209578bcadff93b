# 恒等式注册表与检查报告

from .registry import (
    Constraint,
    Identity,
    ParamSpec,
    Sides,
    check_identity,
    closed_form,
    get_identity,
    grid_check,
    list_identities,
    series_side,
)
from .report import CheckReport, GridSummary

__all__ = [
    'Constraint',
    'Identity',
    'ParamSpec',
    'Sides',
    'check_identity',
    'closed_form',
    'get_identity',
    'grid_check',
    'list_identities',
    'series_side',
    'CheckReport',
    'GridSummary',
]
