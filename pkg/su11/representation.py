#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
su(1,1) 正离散系列表示 D⁺(k)
生成元作用、三种哈密顿量 X₂ / X_φ / X_c、形式本征向量系数
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from numerics.special import ln_gamma
from numerics.tridiag import TridiagSym, tridiag_eigvals
from orthopoly import recurrence as rec
from utils.exceptions import DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

J0 = "J0"
JPLUS = "Jplus"
JMINUS = "Jminus"
J1 = "J1"
J2 = "J2"

X2 = "X2"
XPHI = "Xphi"
XC = "Xc"


@dataclass(frozen=True)
class RepLabel:
    """表示标签 k > 0"""

    k: float

    def __post_init__(self):
        if isinstance(self.k, complex) or not self.k > 0:
            raise DomainError(f"表示标签要求 k > 0, 实际 k={self.k}")


def _label(k) -> RepLabel:
    return k if isinstance(k, RepLabel) else RepLabel(float(k))


@dataclass(frozen=True)
class HamiltonianKind:
    """
    X = σ J0 ± (J+ + J-)

    X₂: σ = 2, 次对角线符号 -1；X_φ: σ = -2cosφ, +1；X_c: σ = -(c+1/c), +1
    """

    variant: str
    phi: float = 0.0
    c: float = 0.0

    def __post_init__(self):
        if self.variant == XPHI and not 0 < self.phi < math.pi:
            raise DomainError(f"X_φ 要求 0 < φ < π, 实际 φ={self.phi}")
        if self.variant == XC and not 0 < self.c < 1:
            raise DomainError(f"X_c 要求 0 < c < 1, 实际 c={self.c}")
        if self.variant not in (X2, XPHI, XC):
            raise DomainError(f"未知哈密顿量: {self.variant}")

    @classmethod
    def x2(cls) -> "HamiltonianKind":
        return cls(X2)

    @classmethod
    def xphi(cls, phi: float) -> "HamiltonianKind":
        return cls(XPHI, phi=phi)

    @classmethod
    def xc(cls, c: float) -> "HamiltonianKind":
        return cls(XC, c=c)

    @property
    def sigma(self) -> float:
        if self.variant == X2:
            return 2.0
        if self.variant == XPHI:
            return -2.0 * math.cos(self.phi)
        return -(self.c + 1.0 / self.c)

    @property
    def offdiag_sign(self) -> float:
        return -1.0 if self.variant == X2 else 1.0

    @property
    def discrete(self) -> bool:
        return self.variant == XC

    def eigenvalue(self, k: float, x: float) -> float:
        """λ(x)：X₂ → x，X_φ → 2x sinφ，X_c → (c-1/c)(k+x)"""
        if self.variant == X2:
            return x
        if self.variant == XPHI:
            return 2 * x * math.sin(self.phi)
        return (self.c - 1.0 / self.c) * (k + x)

    def label(self) -> str:
        if self.variant == XPHI:
            return f"X_φ(φ={self.phi:g})"
        if self.variant == XC:
            return f"X_c(c={self.c:g})"
        return "X₂"


def rep_action(k, gen: str, n: int) -> List[Tuple[int, float]]:
    """
    生成元在基向量 e_n 上的作用

    Args:
        k: 表示标签
        gen: J0 | Jplus | Jminus
        n: 基向量下标

    Returns:
        [(下标, 系数)]，J- e_0 为空
    """
    k = _label(k).k
    if n < 0:
        raise DomainError(f"基向量下标须 >= 0, 实际 n={n}")
    if gen == J0:
        return [(n, n + k)]
    if gen == JPLUS:
        return [(n + 1, math.sqrt((n + 1) * (2 * k + n)))]
    if gen == JMINUS:
        return [] if n == 0 else [(n - 1, math.sqrt(n * (2 * k + n - 1)))]
    raise DomainError(f"未知生成元: {gen}")


def generator_matrix(k, gen: str, dim: int) -> np.ndarray:
    """
    截断到 e_0..e_{dim-1} 的稠密矩阵

    J1 = (J+ + J-)/2，J2 = (J+ - J-)/(2i) 以复矩阵返回
    """
    k = _label(k).k
    if dim < 1:
        raise DomainError(f"截断维数须 >= 1, 实际 {dim}")
    n = np.arange(dim, dtype=float)
    raising = np.diag(np.sqrt((n[:-1] + 1) * (2 * k + n[:-1])), -1)
    if gen == J0:
        return np.diag(n + k)
    if gen == JPLUS:
        return raising
    if gen == JMINUS:
        return raising.T.copy()
    if gen == J1:
        return (raising + raising.T) / 2
    if gen == J2:
        return (raising - raising.T) / 2j
    raise DomainError(f"未知生成元: {gen}")


def commutator_residual(k, dim: int) -> float:
    """[J0,J±] = ±J±，[J+,J-] = -2J0，J+ᵀ = J- 在内部块上的最大偏差"""
    j0 = generator_matrix(k, J0, dim)
    jp = generator_matrix(k, JPLUS, dim)
    jm = generator_matrix(k, JMINUS, dim)
    inner = slice(0, dim - 1)
    checks = [
        (j0 @ jp - jp @ j0) - jp,
        (j0 @ jm - jm @ j0) + jm,
        (jp @ jm - jm @ jp) + 2 * j0,
    ]
    worst = max(float(np.max(np.abs(m[inner, inner]))) for m in checks)
    return max(worst, float(np.max(np.abs(jp.T - jm))))


def hamiltonian_matrix(kind: HamiltonianKind, k, dim: int) -> TridiagSym:
    """
    截断哈密顿量：diag[n] = σ(n+k)，offdiag[n] = ∓√((n+1)(2k+n))

    Args:
        kind: 哈密顿量类型
        k: 表示标签
        dim: 截断维数

    Returns:
        TridiagSym
    """
    k = _label(k).k
    if dim < 1:
        raise DomainError(f"截断维数须 >= 1, 实际 {dim}")
    n = np.arange(dim, dtype=float)
    diag = kind.sigma * (n + k)
    offdiag = kind.offdiag_sign * np.sqrt((n[:-1] + 1) * (2 * k + n[:-1]))
    return TridiagSym(diag, offdiag)


def truncated_spectrum(kind: HamiltonianKind, k, dim: int) -> np.ndarray:
    """截断矩阵的升序特征值"""
    return tridiag_eigvals(hamiltonian_matrix(kind, k, dim))


def predicted_discrete_spectrum(kind: HamiltonianKind, k, count: int) -> np.ndarray:
    """X_c 的离散谱 (c-1/c)(k+m)，m = 0..count-1，按离零由近到远排列"""
    if not kind.discrete:
        raise DomainError(f"{kind.label()} 的谱是连续的, 没有离散预测值")
    k = _label(k).k
    return np.array([kind.eigenvalue(k, m) for m in range(count)])


@dataclass
class EigvecCoeffs:
    """形式本征向量 v(x) = Σ l_n e_n 的系数"""

    kind: HamiltonianKind
    k: float
    x: float
    values: List[complex] = field(default_factory=list)

    @property
    def eigenvalue(self) -> float:
        return self.kind.eigenvalue(self.k, self.x)

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind.label(),
            'k': self.k,
            'x': self.x,
            'eigenvalue': self.eigenvalue,
            'values': [complex(v).real for v in self.values],
        }


def eigvec_coeffs(kind: HamiltonianKind, k, x: float, nmax: int) -> EigvecCoeffs:
    """
    形式本征向量系数 l_0..l_nmax

    X₂: √(n!/(2k)_n) L_n^{(2k-1)}(x)
    X_φ: √(n!/Γ(2k+n)) P_n^{(k)}(x;φ)
    X_c: √((2k)_n/n!) c^n M_n(x;2k;c²)，x ∈ ℕ
    """
    k = _label(k).k
    if nmax < 0:
        raise DomainError(f"nmax 须 >= 0, 实际 {nmax}")
    if kind.variant == X2:
        poly = rec.laguerre_sequence(2 * k - 1, x, nmax)
        scale = [math.exp(0.5 * (ln_gamma(n + 1) + ln_gamma(2 * k) - ln_gamma(2 * k + n)))
                 for n in range(nmax + 1)]
    elif kind.variant == XPHI:
        poly = rec.meixner_pollaczek_sequence(k, kind.phi, x, nmax)
        scale = [math.exp(0.5 * (ln_gamma(n + 1) - ln_gamma(2 * k + n)))
                 for n in range(nmax + 1)]
    else:
        if int(x) != x or x < 0:
            raise DomainError(f"X_c 的本征向量要求 x ∈ ℕ, 实际 x={x}")
        c = kind.c
        # 格点上 M_n(x) 是 n 向递推的最小解，逐个取 M_x(n)
        poly = [rec.meixner_sequence(2 * k, c * c, n, int(x))[-1] for n in range(nmax + 1)]
        scale = [math.exp(0.5 * (ln_gamma(2 * k + n) - ln_gamma(2 * k) - ln_gamma(n + 1))) * c ** n
                 for n in range(nmax + 1)]
    values = [s * complex(p).real for s, p in zip(scale, poly)]
    return EigvecCoeffs(kind, k, float(x), values)


def eigen_residual(coeffs: EigvecCoeffs) -> float:
    """
    本征递推残差 max_n |(X l)_n - λ l_n| / max|l|，n < nmax

    最后一个分量需要 l_{nmax+1}，不参与比较
    """
    values = coeffs.values
    size = len(values)
    if size < 2:
        return 0.0
    k = coeffs.k
    matrix = hamiltonian_matrix(coeffs.kind, k, size)
    applied = matrix.matvec(np.asarray(values, dtype=float))
    lam = coeffs.eigenvalue
    diff = np.abs(applied[:-1] - lam * np.asarray(values[:-1], dtype=float))
    scale = max(max(abs(v) for v in values), 1e-300)
    return float(np.max(diff)) / scale
