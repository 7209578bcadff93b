#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Askey-Wilson 权函数与范数

参数模长都小于 1 时测度绝对连续，正交关系为
∫ p_m p_n w(x) dx = δ_mn / h_n
"""

import math
from typing import Callable, Sequence

import numpy as np

from hyperseries.qseries import check_base, qpoch_inf_many, qpoch_many
from numerics.quadrature import QuadRule, WeightFamily, gauss_rule
from numerics.special import Number
from utils.exceptions import DomainError, RangeError


def _check_params(params: Sequence[Number], q: float) -> None:
    check_base(q)
    largest = max(abs(complex(p)) for p in params)
    if largest >= 1:
        raise DomainError(f"Askey-Wilson 权函数要求 max|a,b,c,d| < 1, 实际 {largest:.6g}")


def h_factor(mu: float, params: Sequence[Number], q: float, tol: float = 1e-17) -> complex:
    """
    h(x; a1, a2, ...) = Π_a (a e^{iθ}, a e^{-iθ}; q)_∞，x = cos θ

    每个因子写成 Π_k (1 - 2a x q^k + a² q^{2k})，x 为实数时结果为实数（参数成对共轭时）
    """
    result = 1.0 + 0j
    for a in params:
        a = complex(a)
        if a == 0:
            continue
        aq = a
        while abs(aq) >= tol * (1 - q):
            result *= 1 - 2 * aq * mu + aq * aq
            aq *= q
    return result


def aw_reduced_weight(mu: float, a: Number, b: Number, c: Number, d: Number, q: float) -> float:
    """
    √(1-x²) · w(x)，即 θ 变量下的密度 h(x;1,-1,q^{1/2},-q^{1/2}) / h(x;a,b,c,d)

    h(x;1,-1,q^{1/2},-q^{1/2}) 化简为 (e^{2iθ}, e^{-2iθ}; q)_∞
    """
    numerator = h_factor(mu, [1.0, -1.0, math.sqrt(q), -math.sqrt(q)], q)
    denominator = h_factor(mu, [a, b, c, d], q)
    if abs(denominator) == 0:
        raise RangeError(f"Askey-Wilson 权函数分母在 x={mu} 处为零")
    value = numerator / denominator
    return float(value.real)


def aw_weight(mu: float, a: Number, b: Number, c: Number, d: Number, q: float) -> float:
    """
    Askey-Wilson 权函数 w(x)

    Args:
        mu: x ∈ (-1, 1)
        a, b, c, d: 模长 < 1，实数或成共轭对
        q: 0<q<1

    Returns:
        w(x) = h(x;1,-1,q^{1/2},-q^{1/2}) / (√(1-x²) h(x;a,b,c,d))
    """
    _check_params([a, b, c, d], q)
    if isinstance(mu, complex) or not -1 < mu < 1:
        raise DomainError(f"Askey-Wilson 权函数要求 |x| < 1, 实际 x={mu}")
    return aw_reduced_weight(mu, a, b, c, d, q) / math.sqrt(1 - mu * mu)


def _pairs(a: Number, b: Number, c: Number, d: Number):
    return [a * b, a * c, a * d, b * c, b * d, c * d]


def aw_h0(a: Number, b: Number, c: Number, d: Number, q: float) -> float:
    """h0 = (q,ab,ac,ad,bc,bd,cd;q)_∞ / (2π (abcd;q)_∞)，∫ w dx = 1/h0"""
    _check_params([a, b, c, d], q)
    value = qpoch_inf_many([q] + _pairs(a, b, c, d), q) / (2 * math.pi * qpoch_inf_many([a * b * c * d], q))
    return float(complex(value).real)


def aw_norm(n: int, a: Number, b: Number, c: Number, d: Number, q: float) -> float:
    """
    返回 1/h_n，使得 ∫ p_n² w dx = 1/h_n

    h_n = h0 (abcd;q)_{n-1} (1 - abcd q^{2n-1}) / (q,ab,ac,ad,bc,bd,cd;q)_n（n >= 1）
    这是 (abcd q^{-1};q)_n / (1 - abcd q^{-1}) 在 abcd = q 时也有定义的写法
    """
    if n < 0:
        raise DomainError(f"aw_norm 要求 n >= 0, 实际 n={n}")
    h0 = aw_h0(a, b, c, d, q)
    if n == 0:
        return 1.0 / h0
    abcd = a * b * c * d
    hn = (h0 * qpoch_many([abcd], q, n - 1) * (1 - abcd * q ** (2 * n - 1))
          / qpoch_many([q] + _pairs(a, b, c, d), q, n))
    return float((1.0 / complex(hn)).real)


def aw_quadrature(a: Number, b: Number, c: Number, d: Number, q: float,
                  npoints: int = 2048) -> QuadRule:
    """
    ∫_{-1}^{1} f(x) w(x) dx 的 θ 中点规则

    节点为 Trapezoid-θ 节点，权重并入 √(1-x²)w(x)
    """
    _check_params([a, b, c, d], q)
    base = gauss_rule(WeightFamily.trapezoid_theta(), npoints)
    density = np.array([aw_reduced_weight(float(x), a, b, c, d, q) for x in base.nodes])
    return QuadRule(base.nodes, base.weights * density, base.family)


def aw_integrate(f: Callable[[float], complex], a: Number, b: Number, c: Number, d: Number,
                 q: float, npoints: int = 2048) -> complex:
    """∫ f(x) w(x; a,b,c,d|q) dx"""
    return aw_quadrature(a, b, c, d, q, npoints).integrate(f)
