#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
U_q(su(1,1)) 正离散表示 (k)
生成元 A, B, C, D 的作用、Y_sA 三对角矩阵、Al-Salam-Chihara 本征向量系数
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

import numpy as np

from hyperseries.qseries import check_base, qpoch, qpoch_inf_many
from numerics.special import CompensatedSum, Number
from numerics.tridiag import TridiagSym
from orthopoly import recurrence as rec
from orthopoly.families import MuPoint
from utils.exceptions import ConsistencyError, DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

GEN_A = "A"
GEN_B = "B"
GEN_C = "C"
GEN_D = "D"

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class QRepLabel:
    """表示标签 (k, q, s)：k > 0，0 < q < 1，s ≠ 0"""

    k: float
    q: float
    s: float = 1.0

    def __post_init__(self):
        if not self.k > 0:
            raise DomainError(f"表示标签要求 k > 0, 实际 k={self.k}")
        check_base(self.q)
        if self.s == 0:
            raise DomainError("Y_s 要求 s ≠ 0")

    @property
    def delta(self) -> float:
        """q^{-1/2} - q^{1/2}"""
        return 1 / math.sqrt(self.q) - math.sqrt(self.q)

    def measure_admissible(self) -> bool:
        """q^k < |s| < q^{-k}"""
        return self.q ** self.k < abs(self.s) < self.q ** (-self.k)

    def eigenvalue(self, x: Union[MuPoint, Number]) -> complex:
        """λ(x) = 2(μ(s) - μ(x)) / (q^{1/2} - q^{-1/2})"""
        point = x if isinstance(x, MuPoint) else MuPoint(complex(x))
        mu_s = (self.s + 1 / self.s) / 2
        return 2 * (mu_s - point.mu) / (-self.delta)


def qrep_action(r: QRepLabel, gen: str, n: int) -> List[Tuple[int, float]]:
    """
    生成元在 e_n 上的作用

    A: q^{(k+n)/2}；D: q^{-(k+n)/2}
    C: q^{(1-2k-2n)/4} √((1-q^n)(1-q^{2k+n-1})) / (q^{1/2}-q^{-1/2}) → e_{n-1}
    B: q^{-(1+2k+2n)/4} √((1-q^{n+1})(1-q^{2k+n})) / (q^{-1/2}-q^{1/2}) → e_{n+1}
    """
    if n < 0:
        raise DomainError(f"基向量下标须 >= 0, 实际 n={n}")
    k, q = r.k, r.q
    if gen == GEN_A:
        return [(n, q ** ((k + n) / 2))]
    if gen == GEN_D:
        return [(n, q ** (-(k + n) / 2))]
    if gen == GEN_C:
        if n == 0:
            return []
        coef = (q ** ((1 - 2 * k - 2 * n) / 4)
                * math.sqrt((1 - q ** n) * (1 - q ** (2 * k + n - 1))) / (-r.delta))
        return [(n - 1, coef)]
    if gen == GEN_B:
        coef = (q ** (-(1 + 2 * k + 2 * n) / 4)
                * math.sqrt((1 - q ** (n + 1)) * (1 - q ** (2 * k + n))) / r.delta)
        return [(n + 1, coef)]
    raise DomainError(f"未知生成元: {gen}")


def generator_matrix(r: QRepLabel, gen: str, dim: int) -> np.ndarray:
    """截断到 e_0..e_{dim-1} 的稠密矩阵"""
    if dim < 1:
        raise DomainError(f"截断维数须 >= 1, 实际 {dim}")
    matrix = np.zeros((dim, dim))
    for n in range(dim):
        for idx, coef in qrep_action(r, gen, n):
            if idx < dim:
                matrix[idx, n] = coef
    return matrix


def defrel_residual(r: QRepLabel, dim: int) -> float:
    """
    AD = DA = 1，AB = q^{1/2}BA，AC = q^{-1/2}CA，
    BC - CB = (A² - D²)/(q^{1/2} - q^{-1/2}) 在内部块上的最大偏差
    """
    a, b, c, d = (generator_matrix(r, g, dim) for g in (GEN_A, GEN_B, GEN_C, GEN_D))
    root = math.sqrt(r.q)
    eye = np.eye(dim)
    checks = [
        a @ d - eye,
        d @ a - eye,
        a @ b - root * (b @ a),
        a @ c - (c @ a) / root,
        (b @ c - c @ b) - (a @ a - d @ d) / (-r.delta),
    ]
    inner = slice(0, dim - 1)
    return max(float(np.max(np.abs(m[inner, inner]))) for m in checks)


def star_residual(r: QRepLabel, dim: int) -> float:
    """A* = A，D* = D，B* = -C：实矩阵的转置关系"""
    a, b, c, d = (generator_matrix(r, g, dim) for g in (GEN_A, GEN_B, GEN_C, GEN_D))
    return max(float(np.max(np.abs(a - a.T))),
               float(np.max(np.abs(d - d.T))),
               float(np.max(np.abs(b.T + c))))


def ysa_matrix(r: QRepLabel, dim: int) -> TridiagSym:
    """
    Y_sA 的截断矩阵，Y_s = q^{1/4}B - q^{-1/4}C + (s+1/s)/(q^{-1/2}-q^{1/2}) (A-D)

    由生成元矩阵相乘得到（多取一维再截断），结果须为对称三对角

    Args:
        r: 表示标签
        dim: 截断维数

    Returns:
        TridiagSym

    Raises:
        ConsistencyError: 非对称超过 1e-12
    """
    if dim < 1:
        raise DomainError(f"截断维数须 >= 1, 实际 {dim}")
    size = dim + 1
    a, b, c, d = (generator_matrix(r, g, size) for g in (GEN_A, GEN_B, GEN_C, GEN_D))
    q4 = r.q ** 0.25
    y_s = q4 * b - c / q4 + (r.s + 1 / r.s) / r.delta * (a - d)
    full = (y_s @ a)[:dim, :dim]
    asym = float(np.max(np.abs(full - full.T))) if dim > 1 else 0.0
    scale = max(float(np.max(np.abs(full))), 1.0)
    if asym > SYMMETRY_TOL * scale:
        raise ConsistencyError(f"Y_sA 矩阵不对称, 偏差 {asym:.3e} (k={r.k}, q={r.q}, s={r.s})")
    return TridiagSym(np.diag(full).copy(), np.diag(full, -1).copy())


@dataclass
class QEigvecCoeffs:
    """Y_sA 的形式本征向量系数 l_n = s_n(μ(x); q^k s, q^k/s|q) / √((q, q^{2k};q)_n)"""

    label: QRepLabel
    x: complex
    values: List[complex] = field(default_factory=list)

    @property
    def eigenvalue(self) -> complex:
        return self.label.eigenvalue(self.x)

    def to_dict(self) -> Dict:
        return {
            'k': self.label.k,
            'q': self.label.q,
            's': self.label.s,
            'x': [self.x.real, self.x.imag],
            'eigenvalue': [self.eigenvalue.real, self.eigenvalue.imag],
            'values': [[v.real, v.imag] for v in self.values],
        }


def asc_normalized(k: float, q: float, a: Number, b: Number, x: Union[MuPoint, Number],
                   nmax: int) -> List[complex]:
    """s_n(μ(x); a, b|q) / √((q, q^{2k};q)_n)，n = 0..nmax"""
    point = x if isinstance(x, MuPoint) else MuPoint(complex(x))
    poly = rec.al_salam_chihara_sequence(a, b, q, point.mu, nmax)
    return [p / math.sqrt(qpoch(q, q, n) * qpoch(q ** (2 * k), q, n)) for n, p in enumerate(poly)]


def q_eigvec_coeffs(r: QRepLabel, x: Union[MuPoint, Number], nmax: int) -> QEigvecCoeffs:
    """
    Y_sA 的形式本征向量系数

    Args:
        r: 表示标签
        x: 单位圆上的点（MuPoint 或复数 e^{iθ}），其它 x 形式上也允许
        nmax: 最高下标

    Returns:
        QEigvecCoeffs
    """
    if nmax < 0:
        raise DomainError(f"nmax 须 >= 0, 实际 {nmax}")
    point = x if isinstance(x, MuPoint) else MuPoint(complex(x))
    qk = r.q ** r.k
    values = asc_normalized(r.k, r.q, qk * r.s, qk / r.s, point, nmax)
    return QEigvecCoeffs(r, point.x, values)


def q_eigen_residual(coeffs: QEigvecCoeffs) -> float:
    """Y_sA 本征递推的相对残差，最后一个分量不参与"""
    values = np.asarray(coeffs.values, dtype=complex)
    if values.size < 2:
        return 0.0
    matrix = ysa_matrix(coeffs.label, values.size)
    diff = np.abs(matrix.matvec(values)[:-1] - coeffs.eigenvalue * values[:-1])
    scale = max(float(np.max(np.abs(values))), 1e-300)
    return float(np.max(diff)) / scale


def q_monomial(k: float, q: float, n: int, z: complex) -> complex:
    """e_n^{(k)}(z) = √((q^{2k};q)_n / (q;q)_n) z^n"""
    return math.sqrt(qpoch(q ** (2 * k), q, n) / qpoch(q, q, n)) * complex(z) ** n


def q_vector_closed(k: float, q: float, s: Number, x: Union[MuPoint, Number], z: complex) -> complex:
    """Σ s_n(μ(x); q^k s, q^k/s|q) z^n/(q;q)_n = (q^k zs, q^k z/s;q)_∞ / (zx, z/x;q)_∞"""
    point = x if isinstance(x, MuPoint) else MuPoint(complex(x))
    qk = q ** k
    z = complex(z)
    return (qpoch_inf_many([qk * z * s, qk * z / s], q)
            / qpoch_inf_many([z * point.x, z / point.x], q))


def q_vector_series(k: float, q: float, s: Number, x: Union[MuPoint, Number], z: complex,
                    nmax: int) -> complex:
    """生成函数左边截断到 nmax"""
    point = x if isinstance(x, MuPoint) else MuPoint(complex(x))
    qk = q ** k
    poly = rec.al_salam_chihara_sequence(qk * s, qk / s, q, point.mu, nmax)
    acc = CompensatedSum()
    zn = 1.0 + 0j
    for n, p in enumerate(poly):
        acc.add(p * zn / qpoch(q, q, n))
        zn *= z
    return acc.value
