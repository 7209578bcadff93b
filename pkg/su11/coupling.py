#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
张量积 (k1)⊗(k2) = ⊕_j (k1+k2+j) 的耦合
Clebsch-Gordan 系数、实现空间中的耦合向量、卷积恒等式
"""

import cmath
import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from hyperseries.pfq import terminating_2f1_homogeneous
from numerics.special import CompensatedSum, ln_gamma, pochhammer
from orthopoly.families import PolyFamily, eval_poly, eval_sequence
from su11.representation import J0, JMINUS, JPLUS, X2, XC, XPHI, HamiltonianKind, eigvec_coeffs, rep_action
from utils.exceptions import ConsistencyError, DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

CgcVector = Dict[Tuple[int, int], float]


@dataclass(frozen=True)
class CoupledLabel:
    """耦合标签 (k1, k2, j)，对应不可约分量 k = k1 + k2 + j"""

    k1: float
    k2: float
    j: int

    def __post_init__(self):
        if not (self.k1 > 0 and self.k2 > 0):
            raise DomainError(f"耦合要求 k1, k2 > 0, 实际 k1={self.k1}, k2={self.k2}")
        if int(self.j) != self.j or self.j < 0:
            raise DomainError(f"耦合下标 j 须为非负整数, 实际 j={self.j}")

    @property
    def k(self) -> float:
        return self.k1 + self.k2 + self.j


def _lowest_weight(label: CoupledLabel) -> CgcVector:
    """Δ(J-) v = 0 在 n1+n2 = j 子空间上的归一化解，c_0 > 0"""
    k1, k2, j = label.k1, label.k2, label.j
    coeffs = [1.0]
    for n1 in range(j):
        ratio = math.sqrt((j - n1) * (2 * k2 + j - n1 - 1)) / math.sqrt((n1 + 1) * (2 * k1 + n1))
        coeffs.append(-ratio * coeffs[-1])
    norm = math.sqrt(math.fsum(c * c for c in coeffs))
    return {(n1, j - n1): c / norm for n1, c in enumerate(coeffs)}


def apply_coproduct(k1: float, k2: float, gen: str, vector: CgcVector) -> CgcVector:
    """Δ(X) = X⊗1 + 1⊗X 作用在未耦合基展开上，X ∈ {J0, Jplus, Jminus}"""
    out: Dict[Tuple[int, int], float] = {}
    for (n1, n2), c in vector.items():
        for idx, coef in rep_action(k1, gen, n1):
            out[(idx, n2)] = out.get((idx, n2), 0.0) + coef * c
        for idx, coef in rep_action(k2, gen, n2):
            out[(n1, idx)] = out.get((n1, idx), 0.0) + coef * c
    return out


def cgc(label: CoupledLabel, n: int) -> CgcVector:
    """
    耦合基向量 e^{(k1k2)k}_n 在未耦合基下的 Clebsch-Gordan 系数

    先求最低权向量，再用 Δ(J+) 升 n 次，第 m 步除以 √((m+1)(2k+m))

    Args:
        label: 耦合标签
        n: 耦合基下标

    Returns:
        {(n1, n2): 系数}，n1 + n2 = j + n
    """
    if n < 0:
        raise DomainError(f"耦合基下标须 >= 0, 实际 n={n}")
    k = label.k
    vector = _lowest_weight(label)
    for m in range(n):
        raised = apply_coproduct(label.k1, label.k2, JPLUS, vector)
        scale = math.sqrt((m + 1) * (2 * k + m))
        vector = {key: value / scale for key, value in raised.items()}
    return vector


def inner_product(u: CgcVector, v: CgcVector) -> float:
    return math.fsum(c * v.get(key, 0.0) for key, c in u.items())


def coupled_gram_residual(k1: float, k2: float, max_total: int) -> float:
    """{(j, n): j+n <= max_total} 耦合向量的 Gram 矩阵与单位阵的最大偏差"""
    vectors = [cgc(CoupledLabel(k1, k2, j), n)
               for j in range(max_total + 1) for n in range(max_total + 1 - j)]
    size = len(vectors)
    gram = np.array([[inner_product(vectors[a], vectors[b]) for b in range(size)]
                     for a in range(size)])
    return float(np.max(np.abs(gram - np.eye(size))))


def cgc_intertwining_residual(k1: float, k2: float, jmax: int, nmax: int) -> float:
    """
    Δ(J0) e_n = (k+n) e_n，Δ(J-) e_n = √(n(2k+n-1)) e_{n-1}
    对所有 j <= jmax, n <= nmax 的最大偏差
    """
    worst = 0.0
    for j in range(jmax + 1):
        label = CoupledLabel(k1, k2, j)
        k = label.k
        previous = None
        for n in range(nmax + 1):
            current = cgc(label, n)
            applied = apply_coproduct(k1, k2, J0, current)
            for key in set(applied) | set(current):
                worst = max(worst, abs(applied.get(key, 0.0) - (k + n) * current.get(key, 0.0)))
            lowered = apply_coproduct(k1, k2, JMINUS, current)
            coef = math.sqrt(n * (2 * k + n - 1))
            target = previous or {}
            for key in set(lowered) | set(target):
                worst = max(worst, abs(lowered.get(key, 0.0) - coef * target.get(key, 0.0)))
            previous = current
    return worst


def monomial(k: float, n: int, z: complex) -> complex:
    """e^{(k)}_n(z) = √((2k)_n/n!) z^n"""
    return math.exp(0.5 * (ln_gamma(2 * k + n) - ln_gamma(2 * k) - ln_gamma(n + 1))) * z ** n


def coupled_realized(label: CoupledLabel, n: int, z1: complex, z2: complex) -> complex:
    """
    实现空间中的耦合向量

    [(2k1)_j(2k2)_j(2k1+2k2+2j)_n / (j! n! (2k1+2k2+j-1)_j)]^{1/2}
    · (z2-z1)^j z1^n 2F1[-n, 2k2+j; 2k1+2k2+2j; 1-z2/z1]

    z1^n 2F1[...] 按齐次多项式求和，z1 = 0 时无需特殊处理
    """
    k1, k2, j = label.k1, label.k2, label.j
    big_k = k1 + k2
    log_pre = (ln_gamma(2 * k1 + j) - ln_gamma(2 * k1)
               + ln_gamma(2 * k2 + j) - ln_gamma(2 * k2)
               + ln_gamma(2 * big_k + 2 * j + n) - ln_gamma(2 * big_k + 2 * j)
               - ln_gamma(j + 1) - ln_gamma(n + 1)
               - math.log(pochhammer(2 * big_k + j - 1, j)))
    poly = terminating_2f1_homogeneous(n, 2 * k2 + j, 2 * big_k + 2 * j, z1, z2)
    return math.exp(0.5 * log_pre) * (complex(z2) - complex(z1)) ** j * poly


def realization_residual(label: CoupledLabel, n: int, z1: complex, z2: complex) -> float:
    """|Σ cgc · e_{n1}(z1) e_{n2}(z2) - coupled_realized|"""
    acc = CompensatedSum()
    for (n1, n2), c in cgc(label, n).items():
        acc.add(c * monomial(label.k1, n1, z1) * monomial(label.k2, n2, z2))
    return abs(acc.value - coupled_realized(label, n, z1, z2))


def coupling_constant(kind: HamiltonianKind, j: int, k1: float, k2: float) -> float:
    """
    C1 = (j!/((2k1)_j (2k2)_j (2k1+2k2+j-1)_j))^{1/2}
    C2 = (j!(2k1+2k2+2j-1)Γ(2k1+2k2+j-1)/(Γ(2k1+j)Γ(2k2+j)))^{1/2}
    C3 = C1 (2k1)_j / j!
    """
    big_k = k1 + k2
    if kind.variant == XPHI:
        if j == 0:
            log_c = ln_gamma(2 * big_k) - ln_gamma(2 * k1) - ln_gamma(2 * k2)
        else:
            log_c = (ln_gamma(j + 1) + math.log(2 * big_k + 2 * j - 1) + ln_gamma(2 * big_k + j - 1)
                     - ln_gamma(2 * k1 + j) - ln_gamma(2 * k2 + j))
        return math.exp(0.5 * log_c)
    log_c1 = (ln_gamma(j + 1) - (ln_gamma(2 * k1 + j) - ln_gamma(2 * k1))
              - (ln_gamma(2 * k2 + j) - ln_gamma(2 * k2))
              - math.log(pochhammer(2 * big_k + j - 1, j)))
    c1 = math.exp(0.5 * log_c1)
    if kind.variant == X2:
        return c1
    return c1 * pochhammer(2 * k1, j) / math.factorial(j)


def s_coeff(kind: HamiltonianKind, j: int, k1: float, k2: float, x1: float, x2: float) -> float:
    """
    展开系数 S_j^{(k1,k2)}(x1, x2)

    X₂: C1 (-1)^j (x1+x2)^j P_j^{(2k1-1,2k2-1)}((x2-x1)/(x2+x1))
    X_φ: C2 (-2sinφ)^j p_j(x1; k1, k2-i(x1+x2), k1, k2+i(x1+x2))
    X_c: C3 (-c+1/c)^j (-x1-x2)_j Q_j(x1; 2k1-1, 2k2-1, x1+x2)
    """
    if j < 0:
        raise DomainError(f"j 须 >= 0, 实际 j={j}")
    const = coupling_constant(kind, j, k1, k2)
    total = x1 + x2
    if kind.variant == X2:
        a, b = 2 * k1 - 1, 2 * k2 - 1
        # (x1+x2)^j P_j((x2-x1)/(x2+x1)) 的齐次形式，x1+x2 = 0 时连续
        homogeneous = (pochhammer(a + 1, j) / math.factorial(j)
                       * terminating_2f1_homogeneous(j, j + a + b + 1, a + 1, total, x2))
        return const * (-1) ** j * homogeneous.real

    if kind.variant == XPHI:
        family = PolyFamily.continuous_hahn(k1, k2 - 1j * total, k1, k2 + 1j * total)
        # 终止 3F2 在 j 较大时严重抵消，走三项递推
        sequence = eval_sequence(family, j, x1)
        value = sequence[-1]
        scale = max(abs(v) for v in sequence)
        if abs(value.imag) > 1e-8 * scale:
            raise ConsistencyError(f"连续 Hahn 值应为实数, 实际 {value} (序列量级 {scale:.3e})")
        return const * (-2 * math.sin(kind.phi)) ** j * value.real

    if int(x1) != x1 or int(x2) != x2 or x1 < 0 or x2 < 0:
        raise DomainError(f"X_c 要求 x1, x2 ∈ ℕ, 实际 x1={x1}, x2={x2}")
    big_n = int(total)
    if j > big_n:
        return 0.0
    c = kind.c
    family = PolyFamily.hahn(2 * k1 - 1, 2 * k2 - 1, big_n)
    value = eval_poly(family, j, int(x1), method="hypergeometric")
    return const * (1 / c - c) ** j * pochhammer(-big_n, j) * value.real


def coupled_argument(kind: HamiltonianKind, j: int, x1: float, x2: float) -> float:
    """
    耦合分量 k = k1+k2+j 中与 λ(x1) + λ(x2) 对应的自变量

    X₂、X_φ 的本征值与 k 无关，取 x1+x2；
    X_c 的本征值 (c-1/c)(k+x) 随 k 平移，取 x1+x2-j
    """
    total = x1 + x2
    return total - j if kind.variant == XC else total


def convolution_sides(kind: HamiltonianKind, k1: float, k2: float, j: int, n: int,
                      x1: float, x2: float) -> Tuple[float, float]:
    """
    卷积恒等式两边

    左边 Σ_{n1+n2=n+j} cgc · l_{n1}^{(k1)}(x1) l_{n2}^{(k2)}(x2)
    右边 l_n^{(k)}(x') S_j(x1, x2)，k = k1+k2+j，x' 见 coupled_argument
    """
    label = CoupledLabel(k1, k2, j)
    top = n + j
    left1 = eigvec_coeffs(kind, k1, x1, top).values
    left2 = eigvec_coeffs(kind, k2, x2, top).values
    acc = CompensatedSum()
    for (n1, n2), c in cgc(label, n).items():
        acc.add(c * left1[n1] * left2[n2])
    s_j = s_coeff(kind, j, k1, k2, x1, x2)
    if s_j == 0:
        return acc.value.real, 0.0
    right = eigvec_coeffs(kind, label.k, coupled_argument(kind, j, x1, x2), n).values[n] * s_j
    return acc.value.real, float(complex(right).real)


def convolution_residual(kind: HamiltonianKind, k1: float, k2: float, j: int, n: int,
                         x1: float, x2: float) -> float:
    """|左边 - 右边|"""
    lhs, rhs = convolution_sides(kind, k1, k2, j, n, x1, x2)
    return abs(lhs - rhs)


def realized_vector(kind: HamiltonianKind, k: float, x: float, z: complex) -> complex:
    """
    v^{(k)}(x, z) = Σ l_n e_n(z) 的闭式

    X₂: (1-z)^{-2k} e^{xz/(z-1)}
    X_φ: Γ(2k)^{-1/2} (1-e^{iφ}z)^{-k+ix} (1-e^{-iφ}z)^{-k-ix}
    X_c: (1-z/c)^x (1-cz)^{-x-2k}
    """
    z = complex(z)
    if kind.variant == X2:
        return (1 - z) ** (-2 * k) * cmath.exp(x * z / (z - 1))
    if kind.variant == XPHI:
        e = cmath.exp(1j * kind.phi)
        return (math.exp(-0.5 * ln_gamma(2 * k))
                * (1 - e * z) ** (-k + 1j * x) * (1 - z / e) ** (-k - 1j * x))
    c = kind.c
    return (1 - z / c) ** int(x) * (1 - c * z) ** (-x - 2 * k)


def expansion_sides(kind: HamiltonianKind, k1: float, k2: float, x1: float, x2: float,
                    z1: complex, z2: complex, degree: int) -> Tuple[complex, complex]:
    """
    未耦合向量 = Σ_j S_j · 耦合向量 的实现形式

    左边 v^{(k1)}(x1,z1) v^{(k2)}(x2,z2)
    右边 Σ_{j+n<=degree} S_j l_n^{(k)}(x') coupled_realized(j, n, z1, z2)，x' 见 coupled_argument
    """
    lhs = realized_vector(kind, k1, x1, z1) * realized_vector(kind, k2, x2, z2)
    acc = CompensatedSum()
    for j in range(degree + 1):
        s_j = s_coeff(kind, j, k1, k2, x1, x2)
        if s_j == 0:
            continue
        label = CoupledLabel(k1, k2, j)
        coeffs = eigvec_coeffs(kind, label.k, coupled_argument(kind, j, x1, x2), degree - j).values
        for n in range(degree - j + 1):
            acc.add(s_j * coeffs[n] * coupled_realized(label, n, z1, z2))
    return lhs, acc.value


def expansion_residual(kind: HamiltonianKind, k1: float, k2: float, x1: float, x2: float,
                       z1: complex, z2: complex, degree: int) -> float:
    """|左边 - 右边| / max(|左边|, 1e-6)"""
    lhs, rhs = expansion_sides(kind, k1, k2, x1, x2, z1, z2, degree)
    return abs(lhs - rhs) / max(abs(lhs), 1e-6)
