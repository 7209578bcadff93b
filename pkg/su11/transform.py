#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
exp(iαJ₂) 变换
截断矩阵指数、列向量与 Meixner 展开的比较、X_c 的共轭形式
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

import numpy as np
from scipy.linalg import expm

from numerics.special import ln_gamma
from orthopoly.families import scaled_meixner
from su11.representation import J0, J1, JMINUS, JPLUS, HamiltonianKind, generator_matrix, hamiltonian_matrix
from utils.exceptions import DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

TAIL_ENTRIES = 10


def alpha_from_c(c: float) -> float:
    """α = ln((1+c)/(1-c))，0 < c < 1"""
    if not 0 < c < 1:
        raise DomainError(f"要求 0 < c < 1, 实际 c={c}")
    return math.log((1 + c) / (1 - c))


@lru_cache(maxsize=16)
def exp_j2_matrix(k: float, alpha: float, dim: int) -> np.ndarray:
    """
    截断的 exp(iαJ₂)

    iαJ₂ = (α/2)(J+ - J-) 是实反对称矩阵，结果为实正交矩阵（截断误差之外）
    """
    if dim < 1:
        raise DomainError(f"截断维数须 >= 1, 实际 {dim}")
    generator = (alpha / 2) * (generator_matrix(k, JPLUS, dim) - generator_matrix(k, JMINUS, dim))
    return expm(generator)


@dataclass
class ExpColumn:
    """矩阵指数的一列及尾部质量（最后 10 个分量的平方和）"""

    m: int
    values: np.ndarray
    tail_mass: float

    def to_dict(self) -> Dict:
        return {
            'm': self.m,
            'norm': float(np.linalg.norm(self.values)),
            'tail_mass': self.tail_mass,
        }


def exp_j2_column(k: float, alpha: float, m: int, dim: int) -> ExpColumn:
    """
    exp(iαJ₂) 的第 m 列

    Args:
        k: 表示标签
        alpha: α >= 0
        m: 列下标
        dim: 截断维数，须足够大使列的尾部可以忽略

    Returns:
        ExpColumn
    """
    if not 0 <= m < dim:
        raise DomainError(f"列下标须满足 0 <= m < dim, 实际 m={m}, dim={dim}")
    column = exp_j2_matrix(float(k), float(alpha), int(dim))[:, m].copy()
    tail = float(np.sum(column[-TAIL_ENTRIES:] ** 2))
    if tail > 1e-12:
        logger.warning(f"⚠️ exp(iαJ₂) 第 {m} 列尾部质量 {tail:.3e}，截断维数 {dim} 可能不够")
    return ExpColumn(m, column, tail)


def meixner_column(k: float, c: float, m: int, nmax: int) -> List[float]:
    """
    exp(iαJ₂) 第 m 列的展开式，α = ln((1+c)/(1-c))

    (-1)^m (1-c²)^k c^{m+n} √((2k)_m (2k)_n / (m! n!)) M_n(m; 2k; c²)，n = 0..nmax
    """
    if not 0 < c < 1:
        raise DomainError(f"要求 0 < c < 1, 实际 c={c}")
    front = (-1) ** m * (1 - c * c) ** k
    log_m = ln_gamma(2 * k + m) - ln_gamma(2 * k) - ln_gamma(m + 1)
    values = []
    for n in range(nmax + 1):
        log_n = ln_gamma(2 * k + n) - ln_gamma(2 * k) - ln_gamma(n + 1)
        values.append(front * math.exp(0.5 * (log_m + log_n)) * scaled_meixner(n, m, 2 * k, c))
    return values


def exp_column_deviation(k: float, c: float, m: int, dim: int, nmax: int = 60) -> float:
    """矩阵指数列与 Meixner 展开式的最大绝对偏差（前 nmax+1 个分量）"""
    column = exp_j2_column(k, alpha_from_c(c), m, dim).values
    nmax = min(nmax, dim - 1)
    expected = np.asarray(meixner_column(k, c, m, nmax))
    return float(np.max(np.abs(column[:nmax + 1] - expected)))


def exp_identity_residual(k: float, alpha: float, dim: int, block: int = 20) -> float:
    """‖E J0 Eᵀ - (coshα J0 - sinhα J1)‖_max 在左上 block×block 块上"""
    e = exp_j2_matrix(float(k), float(alpha), int(dim))
    conj = e @ generator_matrix(k, J0, dim) @ e.T
    target = math.cosh(alpha) * generator_matrix(k, J0, dim) - math.sinh(alpha) * generator_matrix(k, J1, dim)
    return float(np.max(np.abs((conj - target)[:block, :block])))


def xc_conjugation_residual(k: float, c: float, dim: int, block: int = 20) -> float:
    """X_c = (c - 1/c) E J0 Eᵀ，α = ln((1+c)/(1-c))，左上块上的最大偏差"""
    alpha = alpha_from_c(c)
    e = exp_j2_matrix(float(k), float(alpha), int(dim))
    conj = (c - 1 / c) * (e @ generator_matrix(k, J0, dim) @ e.T)
    xc = hamiltonian_matrix(HamiltonianKind.xc(c), k, dim).to_dense()
    return float(np.max(np.abs((conj - xc)[:block, :block])))
