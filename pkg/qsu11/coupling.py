#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
U_q(su(1,1)) 张量积中的广义本征向量
未耦合形式、实现空间中的耦合向量、两者之间的 Askey-Wilson 展开
"""

import math
from dataclasses import dataclass
from typing import Dict, Tuple, Union

import numpy as np

from hyperseries.qseries import QSeriesSpec, check_base, phi_rs, qpoch, qpoch_inf_many, qpoch_many
from numerics.special import CompensatedSum, Number
from orthopoly import recurrence as rec
from orthopoly.families import MuPoint
from qsu11.representation import (
    GEN_A,
    GEN_B,
    GEN_C,
    GEN_D,
    QRepLabel,
    asc_normalized,
    generator_matrix,
    q_monomial,
    ysa_matrix,
)
from utils.exceptions import DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

RECURRENCE = "recurrence"
SERIES = "series"

PointLike = Union[MuPoint, Number]


def _point(x: PointLike) -> MuPoint:
    return x if isinstance(x, MuPoint) else MuPoint(complex(x))


def coproduct_relation_residual(k1: float, k2: float, q: float, dim: int) -> float:
    """
    Δ(A) = A⊗A，Δ(B) = A⊗B + B⊗D，Δ(C) = A⊗C + C⊗D，Δ(D) = D⊗D
    在截断张量积的内部块上检查 AB = q^{1/2}BA 与 BC - CB = (A² - D²)/(q^{1/2} - q^{-1/2})
    """
    r1, r2 = QRepLabel(k1, q), QRepLabel(k2, q)
    a1, b1, c1, d1 = (generator_matrix(r1, g, dim) for g in (GEN_A, GEN_B, GEN_C, GEN_D))
    a2, b2, c2, d2 = (generator_matrix(r2, g, dim) for g in (GEN_A, GEN_B, GEN_C, GEN_D))
    big_a = np.kron(a1, a2)
    big_d = np.kron(d1, d2)
    big_b = np.kron(a1, b2) + np.kron(b1, d2)
    big_c = np.kron(a1, c2) + np.kron(c1, d2)
    root = math.sqrt(q)
    checks = [
        big_a @ big_b - root * (big_b @ big_a),
        big_a @ big_c - (big_c @ big_a) / root,
        (big_b @ big_c - big_c @ big_b) - (big_a @ big_a - big_d @ big_d) / (root - 1 / root),
    ]
    n1, n2 = np.divmod(np.arange(dim * dim), dim)
    inner = np.flatnonzero((n1 < dim - 1) & (n2 < dim - 1))
    return max(float(np.max(np.abs(m[np.ix_(inner, inner)]))) for m in checks)


def uncoupled_coefficients(k1: float, k2: float, q: float, s: float,
                           x1: PointLike, x2: PointLike, nmax: int) -> np.ndarray:
    """
    未耦合广义本征向量的系数矩阵 L[n1, n2]

    第一因子 s_{n1}(μ(x1); q^{k1}x2, q^{k1}/x2)，第二因子 s_{n2}(μ(x2); q^{k2}s, q^{k2}/s)
    """
    p1, p2 = _point(x1), _point(x2)
    qk1, qk2 = q ** k1, q ** k2
    first = asc_normalized(k1, q, qk1 * p2.x, qk1 / p2.x, p1, nmax)
    second = asc_normalized(k2, q, qk2 * s, qk2 / s, p2, nmax)
    return np.outer(np.asarray(first), np.asarray(second))


def q_uncoupled_eigen_residual(k1: float, k2: float, q: float, s: float,
                               x1: PointLike, x2: PointLike, nmax: int) -> float:
    """
    Δ(Y_sA) = (Y_sA)⊗1 + A²⊗(Y_sA) 作用在未耦合向量上，本征值 λ(x1)

    残差 M1·L + diag(q^{k1+n1})·L·M2ᵀ - λL 在内部块上，相对于 max|L|
    """
    size = nmax + 1
    coeffs = uncoupled_coefficients(k1, k2, q, s, x1, x2, nmax)
    r1, r2 = QRepLabel(k1, q, s), QRepLabel(k2, q, s)
    m1 = ysa_matrix(r1, size).to_dense()
    m2 = ysa_matrix(r2, size).to_dense()
    a_squared = np.diag(q ** (k1 + np.arange(size)))
    lam = r1.eigenvalue(_point(x1))
    applied = m1 @ coeffs + a_squared @ coeffs @ m2.T - lam * coeffs
    inner = applied[:size - 1, :size - 1]
    return float(np.max(np.abs(inner))) / max(float(np.max(np.abs(coeffs))), 1e-300)


def q_uncoupled_realized(k1: float, k2: float, q: float, s: float, x1: PointLike, x2: PointLike,
                         z1: complex, z2: complex) -> complex:
    """
    (q^{k1}z1x2, q^{k1}z1/x2, q^{k2}z2s, q^{k2}z2/s;q)_∞ / (z1x1, z1/x1, z2x2, z2/x2;q)_∞

    Args:
        k1, k2: 表示标签
        q: 0<q<1
        s: Y_s 的参数
        x1, x2: 单位圆上的点
        z1, z2: |z| < 1

    Returns:
        未耦合向量在实现空间中的值
    """
    check_base(q)
    z1, z2 = complex(z1), complex(z2)
    if abs(z1) >= 1 or abs(z2) >= 1:
        raise DomainError(f"要求 |z1|, |z2| < 1, 实际 |z1|={abs(z1):.6g}, |z2|={abs(z2):.6g}")
    p1, p2 = _point(x1), _point(x2)
    qk1, qk2 = q ** k1, q ** k2
    numerator = qpoch_inf_many([qk1 * z1 * p2.x, qk1 * z1 / p2.x, qk2 * z2 * s, qk2 * z2 / s], q)
    denominator = qpoch_inf_many([z1 * p1.x, z1 / p1.x, z2 * p2.x, z2 / p2.x], q)
    return numerator / denominator


def q_uncoupled_series(k1: float, k2: float, q: float, s: float, x1: PointLike, x2: PointLike,
                       z1: complex, z2: complex, nmax: int = 30) -> complex:
    """双重级数 Σ l_{n1} l_{n2} e_{n1}(z1) e_{n2}(z2)，各截断到 nmax"""
    coeffs = uncoupled_coefficients(k1, k2, q, s, x1, x2, nmax)
    basis1 = np.array([q_monomial(k1, q, n, z1) for n in range(nmax + 1)])
    basis2 = np.array([q_monomial(k2, q, n, z2) for n in range(nmax + 1)])
    acc = CompensatedSum()
    acc.extend((coeffs * np.outer(basis1, basis2)).ravel())
    return acc.value


def _coupling_norm(k1: float, k2: float, j: int, q: float) -> float:
    """√((q^{2k1}, q^{2k2};q)_j / (q, q^{2k1+2k2+j-1};q)_j)"""
    return math.sqrt(qpoch_many([q ** (2 * k1), q ** (2 * k2)], q, j)
                     / qpoch_many([q, q ** (2 * (k1 + k2) + j - 1)], q, j))


def _coupled_series(k1: float, k2: float, j: int, n: int, q: float, z1: complex, z2: complex) -> complex:
    """
    q^{-nj-nk1} z2^{n+j} (q^{k1}z1/z2;q)_j R_j √((q^{2k1+2k2+2j};q)_n/(q;q)_n)
    · 3φ2[q^{-n}, q^{2k1+j}, q^{k1+j}z1/z2; q^{2k1+2k2+2j}, 0; q, q]
    """
    if z2 == 0:
        raise DomainError("级数形式要求 z2 ≠ 0，请使用递推形式")
    ratio = z1 / z2
    big = q ** (2 * (k1 + k2) + 2 * j)
    phi = phi_rs(QSeriesSpec.of([q ** (-n), q ** (2 * k1 + j), q ** (k1 + j) * ratio], [big, 0.0], q, q,
                                degree=n))
    return (q ** (-n * j - n * k1) * z2 ** (n + j) * qpoch(q ** k1 * ratio, q, j)
            * _coupling_norm(k1, k2, j, q) * math.sqrt(qpoch(big, q, n) / qpoch(q, q, n)) * phi)


def _coupled_recurrence(k1: float, k2: float, j: int, n: int, q: float, z1: complex, z2: complex) -> complex:
    """
    把 3φ2 写成 Al-Salam-Chihara 多项式并以齐次形式递推

    t_{m+1} = [z1 q^{-k1/2} + z2 q^{k1/2} - (z1 q^{(3k1+2j)/2} + z2 q^{(k1+4k2+2j)/2}) q^m] t_m
              - z1 z2 (1 - q^m)(1 - q^{2k1+2k2+2j+m-1}) t_{m-1}
    """
    c_lin = z1 * q ** (-k1 / 2) + z2 * q ** (k1 / 2)
    c_shift = z1 * q ** ((3 * k1 + 2 * j) / 2) + z2 * q ** ((k1 + 4 * k2 + 2 * j) / 2)
    top = 2 * (k1 + k2) + 2 * j - 1
    prev, cur = 0.0 + 0j, 1.0 + 0j
    qm = 1.0
    for _ in range(n):
        nxt = (c_lin - c_shift * qm) * cur - z1 * z2 * (1 - qm) * (1 - q ** top * qm) * prev
        prev, cur = cur, nxt
        qm *= q
    front = 1.0 + 0j
    for l in range(j):
        front *= z2 - q ** (k1 + l) * z1
    big = q ** (2 * (k1 + k2) + 2 * j)
    return (q ** (n * k1 / 2) * front * _coupling_norm(k1, k2, j, q) * cur
            / math.sqrt(qpoch(q, q, n) * qpoch(big, q, n)))


def q_coupled_realized(k1: float, k2: float, j: int, n: int, q: float, z1: complex, z2: complex,
                       method: str = RECURRENCE) -> complex:
    """
    实现空间中的 q-耦合向量 e^{(k1k2)k}_n(z1, z2)，k = k1+k2+j

    Args:
        method: "recurrence"（默认，z2 = 0 也可用）| "series"（直接 3φ2，小 n 时使用）

    Returns:
        耦合向量的值
    """
    check_base(q)
    if j < 0 or n < 0:
        raise DomainError(f"j, n 须 >= 0, 实际 j={j}, n={n}")
    if not (k1 > 0 and k2 > 0):
        raise DomainError(f"要求 k1, k2 > 0, 实际 k1={k1}, k2={k2}")
    z1, z2 = complex(z1), complex(z2)
    if method == RECURRENCE:
        return _coupled_recurrence(k1, k2, j, n, q, z1, z2)
    if method == SERIES:
        return _coupled_series(k1, k2, j, n, q, z1, z2)
    raise DomainError(f"未知求值方法: {method}")


def expansion_constant(k1: float, k2: float, j: int, q: float) -> float:
    """C_j = ((q, q^{2k1}, q^{2k2}, q^{2k1+2k2+j-1};q)_j)^{-1/2}"""
    return qpoch_many([q, q ** (2 * k1), q ** (2 * k2), q ** (2 * (k1 + k2) + j - 1)], q, j) ** -0.5


@dataclass
class QExpansionResult:
    """未耦合向量与 Askey-Wilson 展开两边的比较"""

    lhs: complex
    rhs: complex
    jmax: int
    nmax: int

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> Dict:
        return {
            'lhs': [self.lhs.real, self.lhs.imag],
            'rhs': [self.rhs.real, self.rhs.imag],
            'jmax': self.jmax,
            'nmax': self.nmax,
            'residual': self.residual,
        }


def q_expansion_sides(k1: float, k2: float, q: float, s: float, x1: PointLike, x2: PointLike,
                      z1: complex, z2: complex, jmax: int, nmax: int) -> QExpansionResult:
    """
    v^{k1;k2}(x1,x2,z1,z2) = Σ_j C_j p_j(μ(x2); q^{k1}x1, q^{k1}/x1, q^{k2}s, q^{k2}/s|q) v_j

    v_j = Σ_{n<=nmax} l_n^{(k)}(x1) e^{(k1k2)k}_n(z1, z2)，k = k1+k2+j
    """
    p1, p2 = _point(x1), _point(x2)
    lhs = q_uncoupled_realized(k1, k2, q, s, p1, p2, z1, z2)
    qk1, qk2 = q ** k1, q ** k2
    aw = rec.askey_wilson_sequence(qk1 * p1.x, qk1 / p1.x, qk2 * s, qk2 / s, q, p2.mu, jmax)
    acc = CompensatedSum()
    for j in range(jmax + 1):
        k = k1 + k2 + j
        qk = q ** k
        coeffs = asc_normalized(k, q, qk * s, qk / s, p1, nmax)
        inner = CompensatedSum()
        for n in range(nmax + 1):
            inner.add(coeffs[n] * q_coupled_realized(k1, k2, j, n, q, z1, z2))
        acc.add(expansion_constant(k1, k2, j, q) * aw[j] * inner.value)
    return QExpansionResult(lhs, acc.value, jmax, nmax)


def q_expansion_residual(k1: float, k2: float, q: float, s: float, x1: PointLike, x2: PointLike,
                         z1: complex, z2: complex, jmax: int, nmax: int) -> float:
    """|未耦合向量 - 截断展开|"""
    return q_expansion_sides(k1, k2, q, s, x1, x2, z1, z2, jmax, nmax).residual
