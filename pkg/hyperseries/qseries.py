#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
q-移位阶乘与基本超几何级数
(a;q)_n, (a;q)_∞, rφs, 非常好摆 8W7
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from hyperseries.truncation import SeriesAccumulator, SeriesResult, TruncationPolicy
from numerics.special import Number
from utils.exceptions import DomainError, PoleError, RangeError, check_finite
from utils.logger import get_logger

logger = get_logger(__name__)

_POLE_TOL = 1e-14
_INT_TOL = 1e-9


def check_base(q: float) -> float:
    """0 < q < 1"""
    if isinstance(q, complex) or not 0.0 < q < 1.0:
        raise DomainError(f"q 必须满足 0<q<1, 实际 q={q}")
    return float(q)


def qpoch(a: Number, q: float, n: int) -> Number:
    """
    有限 q-移位阶乘 (a;q)_n = Π_{i<n} (1 - a q^i)

    Args:
        a: 实数或复数
        q: 0<q<1
        n: 非负整数

    Returns:
        (a;q)_n
    """
    check_base(q)
    if n < 0:
        raise DomainError(f"qpoch 要求 n >= 0, 实际 n={n}")
    result: Number = 1.0
    aq = a
    for _ in range(n):
        result *= 1 - aq
        aq *= q
    return check_finite(result, f"({a};q)_{n}")


def qpoch_many(params: Sequence[Number], q: float, n: int) -> Number:
    """(a1, a2, ...; q)_n"""
    result: Number = 1.0
    for a in params:
        result *= qpoch(a, q, n)
    return result


@dataclass
class ProductResult:
    """无穷乘积结果：值、因子数、乘法尾项界"""

    value: complex
    factors: int
    tail_bound: float


def qpoch_inf_result(a: Number, q: float, tol: float = 1e-16) -> ProductResult:
    """
    (a;q)_∞，在首个满足 |a| q^i < tol·(1-q) 的 i 处截断

    尾项 Π_{j>=i}(1 - a q^j) 与 1 的偏差不超过约 |a| q^i/(1-q)
    """
    check_base(q)
    a = complex(a)
    if a == 0:
        return ProductResult(1.0 + 0j, 0, 0.0)
    threshold = tol * (1.0 - q)
    result = 1.0 + 0j
    aq = a
    i = 0
    while abs(aq) >= threshold:
        result *= 1 - aq
        if not math.isfinite(abs(result)):
            raise RangeError(f"(a;q)_∞ 前导因子溢出, |a|={abs(a):.3e}")
        aq *= q
        i += 1
    tail = abs(aq) / (1.0 - q)
    return ProductResult(result, i, tail)


def qpoch_inf(a: Number, q: float, tol: float = 1e-16) -> complex:
    """(a;q)_∞"""
    return qpoch_inf_result(a, q, tol).value


def qpoch_inf_many(params: Sequence[Number], q: float, tol: float = 1e-16) -> complex:
    """(a1, a2, ...; q)_∞"""
    result = 1.0 + 0j
    for a in params:
        result *= qpoch_inf(a, q, tol)
    return result


def q_power_degree(value: Number, q: float) -> Optional[int]:
    """若 value = q^{-n}（n 为非负整数）则返回 n"""
    value = complex(value)
    if abs(value.imag) > _INT_TOL or value.real <= 0:
        return None
    n = -math.log(value.real) / math.log(q)
    m = round(n)
    if m >= 0 and abs(n - m) <= _INT_TOL:
        return int(m)
    return None


@dataclass(frozen=True)
class QSeriesSpec:
    """
    rφs[upper; lower; q, z]

    terminating_degree 可显式给出；否则从形如 q^{-n} 的上参数自动识别
    """

    upper_params: Tuple[complex, ...]
    lower_params: Tuple[complex, ...]
    q: float
    argument: complex
    terminating_degree: Optional[int] = field(default=None)

    def __post_init__(self):
        check_base(self.q)
        if self.terminating_degree is None:
            degrees = [d for d in (q_power_degree(a, self.q) for a in self.upper_params)
                       if d is not None]
            if degrees:
                object.__setattr__(self, "terminating_degree", min(degrees))

    @classmethod
    def of(cls, upper: Sequence[Number], lower: Sequence[Number], q: float, z: Number,
           degree: Optional[int] = None) -> "QSeriesSpec":
        return cls(tuple(complex(a) for a in upper),
                   tuple(complex(b) for b in lower),
                   float(q), complex(z), degree)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.upper_params), len(self.lower_params)


def phi_rs_result(spec: QSeriesSpec, trunc: Optional[TruncationPolicy] = None) -> SeriesResult:
    """
    基本超几何级数求和

    第 k 项含 [(-1)^k q^{k(k-1)/2}]^{1+s-r} 因子；终止级数恰好求 n+1 项

    Args:
        spec: 级数参数
        trunc: 截断策略

    Returns:
        SeriesResult
    """
    trunc = trunc or TruncationPolicy.default()
    r, s = spec.shape
    q = spec.q
    z = spec.argument
    degree = spec.terminating_degree
    excess = 1 + s - r
    if degree is None and (excess < 0 or (excess == 0 and abs(z) >= 1)):
        raise DomainError(f"{r}φ{s} 非终止且 |z|={abs(z):.6g} 不在收敛区域内")

    # 形如 q^{-m} 的上参数按 1 - q^{k-m} 直接取幂，不经 q^{-m}·q^k 的舍入
    powers = [q_power_degree(a, q) for a in spec.upper_params]
    acc = SeriesAccumulator(trunc, f"{r}φ{s}")
    term = 1.0 + 0j
    k = 0
    qk = 1.0
    while True:
        done = acc.add(term)
        if degree is not None:
            if k == degree:
                return acc.result(terminating=True)
        elif done:
            return acc.result(ratio=max(abs(z), q) if excess == 0 else None)
        if acc.exhausted():
            acc.fail()

        num = 1.0 + 0j
        for a, m in zip(spec.upper_params, powers):
            num *= 1 - (q ** (k - m) if m is not None else a * qk)
        den = 1.0 - q * qk
        for b in spec.lower_params:
            factor = 1 - b * qk
            if abs(factor) < _POLE_TOL:
                raise PoleError(f"{r}φ{s} 下参数 {b} 在第 {k} 项处给出 (b;q) 零因子")
            den *= factor
        term = term * num / den * z
        if excess:
            term *= (-qk) ** excess
        qk *= q
        k += 1


def phi_rs(spec: QSeriesSpec, trunc: Optional[TruncationPolicy] = None) -> complex:
    """rφs 的值"""
    return phi_rs_result(spec, trunc).value


def w87_result(a: Number, b: Number, c: Number, d: Number, e: Number, f: Number,
               q: float, z: Number, trunc: Optional[TruncationPolicy] = None) -> SeriesResult:
    """
    非常好摆级数 8W7(a; b,c,d,e,f; q, z)

    Σ (1-a q^{2n})/(1-a) · (a,b,c,d,e,f;q)_n / (q, aq/b, aq/c, aq/d, aq/e, aq/f;q)_n · z^n

    (a;q)_n/(1-a) 写成 (aq;q)_{n-1}，a=1 时仍有定义
    """
    trunc = trunc or TruncationPolicy.default()
    check_base(q)
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"8W7 要求 |z| < 1, 实际 |z|={abs(z):.6g}")
    if z == 0:
        return SeriesResult(value=1.0 + 0j, terms=1, terminating=True, condition=1.0)
    params = [complex(p) for p in (b, c, d, e, f)]
    if any(p == 0 for p in params):
        raise DomainError("8W7 的参数 b..f 必须非零")
    a = complex(a)
    lower = [a * q / p for p in params]

    acc = SeriesAccumulator(trunc, "8W7")
    acc.add(1.0)
    ratio = 1.0 + 0j        # Π(b..f;q)_n / ((q;q)_n Π(aq/p;q)_n) · z^n
    shifted = 1.0 + 0j      # (aq;q)_{n-1}
    qn = 1.0
    n = 0
    while True:
        num = 1.0 + 0j
        den = 1.0 - q * qn
        for p, low in zip(params, lower):
            num *= 1 - p * qn
            factor = 1 - low * qn
            if abs(factor) < _POLE_TOL:
                raise PoleError(f"8W7 分母参数 {low} 在第 {n} 项处为零")
            den *= factor
        ratio = ratio * num / den * z
        if n >= 1:
            shifted *= 1 - a * qn
        n += 1
        qn *= q
        term = (1 - a * qn * qn) * shifted * ratio
        if acc.add(term):
            return acc.result(ratio=abs(z))
        if acc.exhausted():
            acc.fail()


def w87(a: Number, b: Number, c: Number, d: Number, e: Number, f: Number,
        q: float, z: Number, trunc: Optional[TruncationPolicy] = None) -> complex:
    """8W7 的值"""
    return w87_result(a, b, c, d, e, f, q, z, trunc).value


def phi32_sequence(a: Number, b: Number, f: Number, q: float, nmax: int) -> List[complex]:
    """
    φ_n = 3φ2[q^{-n}, a, b; f, 0; q, q]，n = 0..nmax，由关于 n 的三项递推计算

    (1 - f q^n) φ_{n+1} = (a + b - (ab + f) q^n) φ_n - ab (1 - q^n) φ_{n-1}

    直接求和的项随 n 以 q^{-n²/2} 增长，递推没有这种抵消
    """
    check_base(q)
    a, b, f = complex(a), complex(b), complex(f)
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    qn = 1.0
    for n in range(nmax):
        denom = 1 - f * qn
        if abs(denom) < _POLE_TOL:
            raise PoleError(f"3φ2 下参数 f={f} 在 n={n} 处给出零因子")
        nxt = ((a + b - (a * b + f) * qn) * values[-1] - a * b * (1 - qn) * prev) / denom
        check_finite(nxt, f"3φ2 递推第 {n + 1} 项")
        prev = values[-1]
        values.append(nxt)
        qn *= q
    return values
