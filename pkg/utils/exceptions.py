#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
异常体系
所有数值模块抛出的错误都从 Su11PolyError 派生，CLI 据此映射退出码
"""

import math
import cmath
from typing import Union


class Su11PolyError(Exception):
    """本项目所有错误的基类"""


class DomainError(Su11PolyError, ValueError):
    """参数或自变量超出定义域"""


class PoleError(DomainError):
    """分母中的(q-)Pochhammer 符号为零"""


class RangeError(Su11PolyError, OverflowError):
    """溢出或出现非有限中间量"""


class TruncationError(Su11PolyError, RuntimeError):
    """级数在 max_terms 内未满足截断策略"""

    def __init__(self, message: str, terms: int = 0, last_term: float = float('nan')):
        super().__init__(message)
        self.terms = terms
        self.last_term = last_term


class ConsistencyError(Su11PolyError, AssertionError):
    """内部自检失败（例如 Y_sA 矩阵不对称）"""


class ConfigError(Su11PolyError, ValueError):
    """命令行或运行配置非法"""


def check_finite(value: Union[float, complex], what: str) -> Union[float, complex]:
    """
    检查数值有限，NaN/Inf 转为 RangeError

    Args:
        value: 待检查的实数或复数
        what: 出错时写入消息的量名

    Returns:
        原值
    """
    if isinstance(value, complex):
        ok = cmath.isfinite(value)
    else:
        ok = math.isfinite(value)
    if not ok:
        raise RangeError(f"{what} 出现非有限值: {value}")
    return value
