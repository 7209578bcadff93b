#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
广义超几何级数 pFq

收敛性按实际用到的形状白名单判定：
  p <= q      整函数
  p == q + 1  |z| < 1 或终止
  其它        仅终止
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from hyperseries.truncation import SeriesAccumulator, SeriesResult, TruncationPolicy
from numerics.special import Number
from utils.exceptions import DomainError, PoleError
from utils.logger import get_logger

logger = get_logger(__name__)

_INT_TOL = 1e-12


def nonpositive_integer(value: Number) -> Optional[int]:
    """若 value 是非正整数 -n 则返回 n，否则 None"""
    value = complex(value)
    if abs(value.imag) > _INT_TOL:
        return None
    re = value.real
    n = round(-re)
    if n >= 0 and abs(re + n) <= _INT_TOL * max(1.0, abs(re)):
        return int(n)
    return None


@dataclass(frozen=True)
class SeriesSpec:
    """pFq[numerator; denominator; argument]"""

    numerator_params: Tuple[complex, ...]
    denominator_params: Tuple[complex, ...]
    argument: complex

    @classmethod
    def of(cls, numerator: Sequence[Number], denominator: Sequence[Number], z: Number) -> "SeriesSpec":
        return cls(tuple(complex(a) for a in numerator),
                   tuple(complex(b) for b in denominator),
                   complex(z))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.numerator_params), len(self.denominator_params)

    @property
    def terminating_degree(self) -> Optional[int]:
        degrees = [n for n in map(nonpositive_integer, self.numerator_params) if n is not None]
        return min(degrees) if degrees else None


def _check_convergence(spec: SeriesSpec) -> None:
    p, q = spec.shape
    if spec.terminating_degree is not None or p <= q:
        return
    if p == q + 1 and abs(spec.argument) < 1:
        return
    raise DomainError(
        f"{p}F{q} 在 |z|={abs(spec.argument):.6g} 处不在收敛白名单内（非终止级数）"
    )


def pfq_result(spec: SeriesSpec, trunc: Optional[TruncationPolicy] = None) -> SeriesResult:
    """
    对 pFq 求和并返回截断元数据

    Args:
        spec: 级数参数
        trunc: 截断策略，缺省用全局设置

    Returns:
        SeriesResult
    """
    trunc = trunc or TruncationPolicy.default()
    _check_convergence(spec)
    p, q = spec.shape
    z = spec.argument
    degree = spec.terminating_degree
    acc = SeriesAccumulator(trunc, f"{p}F{q}")

    term: complex = 1.0 + 0j
    i = 0
    while True:
        done = acc.add(term)
        if degree is not None:
            if i == degree:
                return acc.result(terminating=True)
        elif done:
            return acc.result(ratio=abs(z) if p == q + 1 else None)
        if acc.exhausted():
            acc.fail()

        num = 1.0 + 0j
        for a in spec.numerator_params:
            num *= a + i
        den = 1.0 + 0j
        for b in spec.denominator_params:
            if b + i == 0:
                raise PoleError(f"{p}F{q} 分母参数 {b} 在第 {i} 项处为零")
            den *= b + i
        term = term * num / den * z / (i + 1)
        i += 1


def pfq(spec: SeriesSpec, trunc: Optional[TruncationPolicy] = None) -> complex:
    """pFq 的值"""
    return pfq_result(spec, trunc).value


def hyp1f1(a: Number, b: Number, z: Number, trunc: Optional[TruncationPolicy] = None) -> complex:
    """1F1[a; b; z]"""
    return pfq(SeriesSpec.of([a], [b], z), trunc)


def hyp2f1(a: Number, b: Number, c: Number, z: Number,
           trunc: Optional[TruncationPolicy] = None) -> complex:
    """2F1[a, b; c; z]"""
    return pfq(SeriesSpec.of([a, b], [c], z), trunc)


def terminating_2f1_homogeneous(n: int, b: Number, c: Number, z1: Number, z2: Number) -> complex:
    """
    z1^n · 2F1[-n, b; c; 1 - z2/z1] 的齐次多项式形式

    Σ_i (-n)_i (b)_i / ((c)_i i!) · (z1 - z2)^i · z1^(n-i)，z1 = 0 时同样有效
    """
    z1 = complex(z1)
    z2 = complex(z2)
    diff = z1 - z2
    total = SeriesAccumulator(TruncationPolicy(max_terms=n + 2), "2F1 齐次形式")
    coef: complex = 1.0 + 0j
    for i in range(n + 1):
        total.add(coef * diff ** i * z1 ** (n - i))
        if i == n:
            break
        if c + i == 0:
            raise PoleError(f"2F1 分母参数 {c} 在第 {i} 项处为零")
        coef *= (-n + i) * (b + i) / ((c + i) * (i + 1))
    return total.acc.value
