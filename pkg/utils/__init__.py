# 工具函数模块

from .exceptions import (
    Su11PolyError,
    DomainError,
    PoleError,
    RangeError,
    TruncationError,
    ConsistencyError,
    ConfigError,
    check_finite,
)
from .config import Settings, get_settings
from .logger import get_logger, set_debug

__all__ = [
    'Su11PolyError',
    'DomainError',
    'PoleError',
    'RangeError',
    'TruncationError',
    'ConsistencyError',
    'ConfigError',
    'check_finite',
    'Settings',
    'get_settings',
    'get_logger',
    'set_debug',
]
