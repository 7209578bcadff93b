#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Gauss 求积规则（Golub-Welsch）
节点取三对角 Jacobi 矩阵的特征值，权重由 Christoffel 函数计算
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np

from numerics.special import CompensatedSum, ln_gamma
from numerics.tridiag import TridiagSym, tridiag_eigvals
from utils.exceptions import DomainError

LAGUERRE = "laguerre"
HERMITE = "hermite"
JACOBI = "jacobi"
TRAPEZOID_THETA = "trapezoid_theta"

_RESCALE = 1e100


@dataclass(frozen=True)
class WeightFamily:
    """权函数描述：Laguerre(α) | Hermite | Jacobi(a,b) | Trapezoid-θ"""

    kind: str
    alpha: float = 0.0
    a: float = 0.0
    b: float = 0.0

    @classmethod
    def laguerre(cls, alpha: float = 0.0) -> "WeightFamily":
        if not alpha > -1:
            raise DomainError(f"Laguerre 权要求 alpha > -1, 实际 alpha={alpha}")
        return cls(LAGUERRE, alpha=float(alpha))

    @classmethod
    def hermite(cls) -> "WeightFamily":
        return cls(HERMITE)

    @classmethod
    def jacobi(cls, a: float, b: float) -> "WeightFamily":
        if not (a > -1 and b > -1):
            raise DomainError(f"Jacobi 权要求 a,b > -1, 实际 a={a}, b={b}")
        return cls(JACOBI, a=float(a), b=float(b))

    @classmethod
    def trapezoid_theta(cls) -> "WeightFamily":
        return cls(TRAPEZOID_THETA)

    def total_mass(self) -> float:
        """权函数总质量 ∫w"""
        if self.kind == HERMITE:
            return math.sqrt(math.pi)
        if self.kind == LAGUERRE:
            return math.exp(ln_gamma(self.alpha + 1))
        if self.kind == JACOBI:
            a, b = self.a, self.b
            return math.exp((a + b + 1) * math.log(2.0) + ln_gamma(a + 1)
                            + ln_gamma(b + 1) - ln_gamma(a + b + 2))
        if self.kind == TRAPEZOID_THETA:
            return math.pi
        raise DomainError(f"未知权函数: {self.kind}")

    def label(self) -> str:
        if self.kind == LAGUERRE:
            return f"Laguerre({self.alpha:g})"
        if self.kind == JACOBI:
            return f"Jacobi({self.a:g},{self.b:g})"
        if self.kind == HERMITE:
            return "Hermite"
        return "Trapezoid-θ"


@dataclass(frozen=True)
class QuadRule:
    """求积规则：升序节点、正权重"""

    nodes: np.ndarray
    weights: np.ndarray
    family: WeightFamily

    @property
    def npoints(self) -> int:
        return int(self.nodes.size)

    def integrate(self, f: Callable[[float], complex]) -> complex:
        """Σ w_i f(x_i)，补偿求和"""
        acc = CompensatedSum()
        for x, w in zip(self.nodes, self.weights):
            acc.add(w * f(float(x)))
        return acc.value

    def integrate_values(self, values: np.ndarray) -> complex:
        """已知节点函数值时的求和"""
        acc = CompensatedSum()
        acc.extend(np.asarray(self.weights) * np.asarray(values))
        return acc.value


def recurrence_coefficients(family: WeightFamily, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    首一正交多项式的三项递推系数

    p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}

    Args:
        family: 权函数
        n: 需要的系数个数

    Returns:
        (alpha[0..n-1], beta[0..n-1])，其中 beta[0] 为总质量
    """
    k = np.arange(n, dtype=float)
    alpha = np.zeros(n)
    beta = np.zeros(n)
    beta[0] = family.total_mass()

    if family.kind == HERMITE:
        beta[1:] = k[1:] / 2.0
    elif family.kind == LAGUERRE:
        alpha[:] = 2 * k + family.alpha + 1
        beta[1:] = k[1:] * (k[1:] + family.alpha)
    elif family.kind == JACOBI:
        a, b = family.a, family.b
        alpha[0] = (b - a) / (a + b + 2)
        for i in range(1, n):
            s = 2 * i + a + b
            alpha[i] = (b * b - a * a) / (s * (s + 2))
        if n > 1:
            beta[1] = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
        for i in range(2, n):
            s = 2 * i + a + b
            beta[i] = 4 * i * (i + a) * (i + b) * (i + a + b) / (s * s * (s + 1) * (s - 1))
    elif family.kind == TRAPEZOID_THETA:
        # Chebyshev 第一类
        if n > 1:
            beta[1] = 0.5
        beta[2:] = 0.25
    else:
        raise DomainError(f"未知权函数: {family.kind}")
    return alpha, beta


def _christoffel_weights(nodes: np.ndarray, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """w_i = 1 / Σ_k p̂_k(x_i)^2，p̂_k 为规范正交多项式；大值时按块缩放"""
    n = nodes.size
    p_prev = np.zeros_like(nodes)
    p = np.full_like(nodes, 1.0 / math.sqrt(beta[0]))
    total = p * p
    log_scale = np.zeros_like(nodes)
    for k in range(n - 1):
        sb_k = math.sqrt(beta[k]) if k > 0 else 0.0
        p_next = ((nodes - alpha[k]) * p - sb_k * p_prev) / math.sqrt(beta[k + 1])
        p_prev, p = p, p_next
        total += p * p
        big = np.abs(p) > _RESCALE
        if big.any():
            p[big] /= _RESCALE
            p_prev[big] /= _RESCALE
            total[big] /= _RESCALE ** 2
            log_scale[big] += 2 * math.log(_RESCALE)
    return np.exp(-log_scale) / total


@lru_cache(maxsize=128)
def gauss_rule(family: WeightFamily, npoints: int) -> QuadRule:
    """
    生成 npoints 点 Gauss 规则（对 2·npoints-1 次多项式精确）

    Args:
        family: 权函数描述
        npoints: 节点数

    Returns:
        QuadRule
    """
    if npoints < 1:
        raise DomainError(f"求积点数须 >= 1, 实际 {npoints}")

    if family.kind == TRAPEZOID_THETA:
        # θ 取中点：x = cos((2i+1)π/(2N))，升序排列
        i = np.arange(npoints - 1, -1, -1)
        nodes = np.cos((2 * i + 1) * math.pi / (2 * npoints))
        weights = np.full(npoints, math.pi / npoints)
        return QuadRule(nodes, weights, family)

    alpha, beta = recurrence_coefficients(family, npoints)
    jacobi_matrix = TridiagSym(alpha, np.sqrt(beta[1:]))
    nodes = np.sort(tridiag_eigvals(jacobi_matrix))
    weights = _christoffel_weights(nodes, alpha, beta)
    return QuadRule(nodes, weights, family)
