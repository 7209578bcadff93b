#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
标量工具与特殊函数
Gamma 对数、Pochhammer 符号、补偿求和
"""

import math
from typing import Iterable, Union

from scipy.special import gammaln

from utils.exceptions import DomainError, RangeError, check_finite

Number = Union[int, float, complex]


def ln_gamma(x: float) -> float:
    """
    ln Γ(x)，仅接受正实数

    Args:
        x: 正实数

    Returns:
        ln Γ(x)
    """
    if isinstance(x, complex) or not x > 0:
        raise DomainError(f"ln_gamma 要求 x > 0, 实际 x={x}")
    return float(gammaln(x))


def gamma(x: float) -> float:
    """Γ(x)，x > 0；溢出转为 RangeError"""
    try:
        return check_finite(math.exp(ln_gamma(x)), f"Γ({x})")
    except OverflowError as exc:
        raise RangeError(f"Γ({x}) 溢出") from exc


def pochhammer(a: Number, n: int) -> Number:
    """
    Pochhammer 符号 (a)_n = a(a+1)...(a+n-1)

    逐项乘积，负整数和复数参数都正确

    Args:
        a: 实数或复数
        n: 非负整数

    Returns:
        (a)_n
    """
    if n < 0:
        raise DomainError(f"pochhammer 要求 n >= 0, 实际 n={n}")
    result: Number = 1.0
    for i in range(n):
        result *= a + i
    return check_finite(result, f"({a})_{n}")


def factorial(n: int) -> float:
    """n!（浮点）"""
    return float(math.factorial(n))


class CompensatedSum:
    """Neumaier 补偿求和，实部虚部分别累加；同时累计 Σ|项| 作为条件数估计"""

    __slots__ = ("_re", "_re_c", "_im", "_im_c", "abs_sum", "count")

    def __init__(self):
        self._re = 0.0
        self._re_c = 0.0
        self._im = 0.0
        self._im_c = 0.0
        self.abs_sum = 0.0
        self.count = 0

    @staticmethod
    def _step(total: float, comp: float, x: float):
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        return t, comp

    def add(self, value: Number) -> "CompensatedSum":
        value = complex(value)
        self._re, self._re_c = self._step(self._re, self._re_c, value.real)
        self._im, self._im_c = self._step(self._im, self._im_c, value.imag)
        self.abs_sum += abs(value)
        self.count += 1
        return self

    def extend(self, values: Iterable[Number]) -> "CompensatedSum":
        for v in values:
            self.add(v)
        return self

    @property
    def value(self) -> complex:
        return complex(self._re + self._re_c, self._im + self._im_c)


def compensated_sum(values: Iterable[Number]) -> complex:
    """补偿求和的便捷函数"""
    return CompensatedSum().extend(values).value
