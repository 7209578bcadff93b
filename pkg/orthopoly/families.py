#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
正交多项式族
每个族都有两条独立求值路径：超几何级数定义与三项递推
"""

import cmath
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

from hyperseries.pfq import SeriesSpec, pfq_result
from hyperseries.qseries import QSeriesSpec, check_base, phi_rs_result, qpoch, qpoch_many
from numerics.special import Number, factorial, ln_gamma, pochhammer
from orthopoly import recurrence as rec
from utils.exceptions import DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

LAGUERRE = "Laguerre"
MEIXNER = "Meixner"
MEIXNER_POLLACZEK = "MeixnerPollaczek"
JACOBI = "Jacobi"
HAHN = "Hahn"
CONTINUOUS_HAHN = "ContinuousHahn"
HERMITE = "Hermite"
AL_SALAM_CHIHARA = "AlSalamChihara"
ASKEY_WILSON = "AskeyWilson"
CONTINUOUS_Q_HERMITE = "ContinuousQHermite"

ALL_TAGS = (LAGUERRE, MEIXNER, MEIXNER_POLLACZEK, JACOBI, HAHN, CONTINUOUS_HAHN,
            HERMITE, AL_SALAM_CHIHARA, ASKEY_WILSON, CONTINUOUS_Q_HERMITE)
Q_TAGS = (AL_SALAM_CHIHARA, ASKEY_WILSON, CONTINUOUS_Q_HERMITE)

HYPERGEOMETRIC = "hypergeometric"
RECURRENCE = "recurrence"

MAX_DEGREE = 500


@dataclass(frozen=True)
class MuPoint:
    """x 与 μ(x) = (x + 1/x)/2；单位圆上 x = e^{iθ}"""

    x: complex

    @classmethod
    def from_theta(cls, theta: float) -> "MuPoint":
        return cls(cmath.exp(1j * theta))

    @classmethod
    def from_mu(cls, mu: Number) -> "MuPoint":
        mu = complex(mu)
        return cls(mu + 1j * cmath.sqrt(1 - mu * mu))

    @property
    def mu(self) -> complex:
        return (self.x + 1 / self.x) / 2

    @property
    def theta(self) -> float:
        return cmath.phase(self.x)


@dataclass(frozen=True)
class PolyFamily:
    """带参数的正交多项式族描述"""

    tag: str
    params: Tuple[Tuple[str, complex], ...] = field(default=())

    def __getitem__(self, name: str) -> complex:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(f"{self.tag} 没有参数 {name}")

    def real(self, name: str) -> float:
        return complex(self[name]).real

    def as_dict(self) -> Dict[str, complex]:
        return dict(self.params)

    @classmethod
    def _make(cls, tag: str, **params) -> "PolyFamily":
        family = cls(tag, tuple(params.items()))
        family.validate()
        return family

    @classmethod
    def laguerre(cls, alpha: float) -> "PolyFamily":
        return cls._make(LAGUERRE, alpha=alpha)

    @classmethod
    def meixner(cls, beta: float, c: float) -> "PolyFamily":
        return cls._make(MEIXNER, beta=beta, c=c)

    @classmethod
    def meixner_pollaczek(cls, lam: float, phi: float) -> "PolyFamily":
        return cls._make(MEIXNER_POLLACZEK, lam=lam, phi=phi)

    @classmethod
    def jacobi(cls, a: float, b: float) -> "PolyFamily":
        return cls._make(JACOBI, a=a, b=b)

    @classmethod
    def hahn(cls, a: float, b: float, n_max: int) -> "PolyFamily":
        return cls._make(HAHN, a=a, b=b, N=n_max)

    @classmethod
    def continuous_hahn(cls, a: Number, b: Number, c: Number, d: Number) -> "PolyFamily":
        return cls._make(CONTINUOUS_HAHN, a=a, b=b, c=c, d=d)

    @classmethod
    def hermite(cls) -> "PolyFamily":
        return cls._make(HERMITE)

    @classmethod
    def al_salam_chihara(cls, a: Number, b: Number, q: float) -> "PolyFamily":
        return cls._make(AL_SALAM_CHIHARA, a=a, b=b, q=q)

    @classmethod
    def askey_wilson(cls, a: Number, b: Number, c: Number, d: Number, q: float) -> "PolyFamily":
        return cls._make(ASKEY_WILSON, a=a, b=b, c=c, d=d, q=q)

    @classmethod
    def continuous_q_hermite(cls, q: float) -> "PolyFamily":
        return cls._make(CONTINUOUS_Q_HERMITE, q=q)

    def validate(self) -> None:
        """检查参数约束，违反时抛出 DomainError 并写明约束"""
        p = self.as_dict()
        tag = self.tag
        if tag == LAGUERRE:
            if not p['alpha'] > -1:
                raise DomainError(f"Laguerre 要求 alpha > -1, 实际 alpha={p['alpha']}")
        elif tag == MEIXNER:
            if not p['beta'] > 0:
                raise DomainError(f"Meixner 要求 beta > 0, 实际 beta={p['beta']}")
            if not 0 < p['c'] < 1:
                raise DomainError(f"Meixner 要求 0 < c < 1, 实际 c={p['c']}")
        elif tag == MEIXNER_POLLACZEK:
            if not p['lam'] > 0:
                raise DomainError(f"Meixner-Pollaczek 要求 lambda > 0, 实际 lambda={p['lam']}")
            if not 0 < p['phi'] < math.pi:
                raise DomainError(f"Meixner-Pollaczek 要求 0 < phi < π, 实际 phi={p['phi']}")
        elif tag == JACOBI:
            if not (p['a'] > -1 and p['b'] > -1):
                raise DomainError(f"Jacobi 要求 a,b > -1, 实际 a={p['a']}, b={p['b']}")
        elif tag == HAHN:
            if not (p['a'] > -1 and p['b'] > -1):
                raise DomainError(f"Hahn 要求 a,b > -1, 实际 a={p['a']}, b={p['b']}")
            if int(p['N']) != p['N'] or p['N'] < 0:
                raise DomainError(f"Hahn 要求 N 为非负整数, 实际 N={p['N']}")
        elif tag == CONTINUOUS_HAHN:
            s = complex(p['a'] + p['b'] + p['c'] + p['d'])
            if abs(s.imag) < 1e-14 and s.real <= 0:
                raise DomainError(f"连续 Hahn 要求 Re(a+b+c+d) > 0, 实际 {s}")
        elif tag in Q_TAGS:
            check_base(p['q'])
        elif tag != HERMITE:
            raise DomainError(f"未知多项式族: {tag}")


@dataclass
class PolyValue:
    """多项式值及其条件数估计（Σ|项|·|前因子|）"""

    value: complex
    condition: float
    method: str


def _as_mupoint(x: Union[MuPoint, Number]) -> MuPoint:
    return x if isinstance(x, MuPoint) else MuPoint.from_mu(x)


def _q_hermite_explicit(q: float, x: complex, n: int) -> PolyValue:
    """H_n(μ|q) = Σ_k (q;q)_n / ((q;q)_k (q;q)_{n-k}) x^{n-2k}"""
    total = 0.0 + 0j
    abs_total = 0.0
    qn = qpoch(q, q, n)
    for k in range(n + 1):
        term = qn / (qpoch(q, q, k) * qpoch(q, q, n - k)) * x ** (n - 2 * k)
        total += term
        abs_total += abs(term)
    return PolyValue(total, abs_total, HYPERGEOMETRIC)


def _hypergeometric(family: PolyFamily, n: int, x) -> PolyValue:
    p = family.as_dict()
    tag = family.tag

    if tag == LAGUERRE:
        alpha = p['alpha']
        pre = pochhammer(alpha + 1, n) / factorial(n)
        res = pfq_result(SeriesSpec.of([-n], [alpha + 1], x))
        return PolyValue(pre * res.value, abs(pre) * res.condition, HYPERGEOMETRIC)

    if tag == MEIXNER:
        res = pfq_result(SeriesSpec.of([-n, -x], [p['beta']], 1 - 1 / p['c']))
        return PolyValue(res.value, res.condition, HYPERGEOMETRIC)

    if tag == MEIXNER_POLLACZEK:
        lam, phi = p['lam'], p['phi']
        pre = pochhammer(2 * lam, n) / factorial(n) * cmath.exp(1j * n * phi)
        res = pfq_result(SeriesSpec.of([-n, lam + 1j * x], [2 * lam], 1 - cmath.exp(-2j * phi)))
        return PolyValue(pre * res.value, abs(pre) * res.condition, HYPERGEOMETRIC)

    if tag == JACOBI:
        a, b = p['a'], p['b']
        pre = pochhammer(a + 1, n) / factorial(n)
        res = pfq_result(SeriesSpec.of([-n, n + a + b + 1], [a + 1], (1 - x) / 2))
        return PolyValue(pre * res.value, abs(pre) * res.condition, HYPERGEOMETRIC)

    if tag == HAHN:
        a, b, big_n = p['a'], p['b'], int(p['N'])
        if n > big_n:
            raise DomainError(f"Hahn 要求 n <= N, 实际 n={n}, N={big_n}")
        res = pfq_result(SeriesSpec.of([-n, n + a + b + 1, -x], [a + 1, -big_n], 1.0))
        return PolyValue(res.value, res.condition, HYPERGEOMETRIC)

    if tag == CONTINUOUS_HAHN:
        a, b, c, d = p['a'], p['b'], p['c'], p['d']
        pre = (1j ** n) * pochhammer(a + c, n) * pochhammer(a + d, n) / factorial(n)
        res = pfq_result(SeriesSpec.of([-n, n + a + b + c + d - 1, a + 1j * x], [a + c, a + d], 1.0))
        return PolyValue(pre * res.value, abs(pre) * res.condition, HYPERGEOMETRIC)

    if tag == HERMITE:
        m, odd = divmod(n, 2)
        alpha = 0.5 if odd else -0.5
        pre = (-1) ** m * 2.0 ** n * factorial(m) * (x if odd else 1.0)
        lag = _hypergeometric(PolyFamily.laguerre(alpha), m, x * x)
        return PolyValue(pre * lag.value, abs(pre) * lag.condition, HYPERGEOMETRIC)

    if tag in Q_TAGS:
        q = p['q']
        point = _as_mupoint(x)
        if tag == CONTINUOUS_Q_HERMITE:
            return _q_hermite_explicit(q, point.x, n)
        if tag == AL_SALAM_CHIHARA:
            params = [complex(p['a']), complex(p['b'])]
        else:
            params = [complex(p['a']), complex(p['b']), complex(p['c']), complex(p['d'])]
        if all(v == 0 for v in params):
            return _q_hermite_explicit(q, point.x, n)
        piv, rest = rec.pivot_parameter(params)
        lower = [piv * r for r in rest]
        upper = [q ** (-n), piv * point.x, piv / point.x]
        if tag == ASKEY_WILSON:
            prod = params[0] * params[1] * params[2] * params[3]
            upper.insert(1, prod * q ** (n - 1))
        else:
            lower.append(0.0)
        pre = piv ** (-n) * qpoch_many(lower, q, n)
        res = phi_rs_result(QSeriesSpec.of(upper, lower, q, q, degree=n))
        return PolyValue(pre * res.value, abs(pre) * res.condition, HYPERGEOMETRIC)

    raise DomainError(f"未知多项式族: {tag}")


def eval_sequence(family: PolyFamily, nmax: int, x) -> List[complex]:
    """
    三项递推给出 p_0(x)..p_nmax(x)

    Args:
        family: 多项式族
        nmax: 最高次数
        x: 自变量；q 族传 MuPoint 或 μ 值

    Returns:
        长度 nmax+1 的列表
    """
    if nmax < 0:
        raise DomainError(f"次数须 >= 0, 实际 {nmax}")
    p = family.as_dict()
    tag = family.tag
    if tag == LAGUERRE:
        return rec.laguerre_sequence(p['alpha'], x, nmax)
    if tag == MEIXNER:
        return rec.meixner_sequence(p['beta'], p['c'], x, nmax)
    if tag == MEIXNER_POLLACZEK:
        return rec.meixner_pollaczek_sequence(p['lam'], p['phi'], x, nmax)
    if tag == JACOBI:
        return rec.jacobi_sequence(p['a'], p['b'], x, nmax)
    if tag == HAHN:
        if nmax > p['N']:
            raise DomainError(f"Hahn 要求 n <= N, 实际 n={nmax}, N={int(p['N'])}")
        return rec.hahn_sequence(p['a'], p['b'], int(p['N']), x, nmax)
    if tag == CONTINUOUS_HAHN:
        return rec.continuous_hahn_sequence(p['a'], p['b'], p['c'], p['d'], x, nmax)
    if tag == HERMITE:
        return rec.hermite_sequence(x, nmax)
    mu = _as_mupoint(x).mu
    if tag == AL_SALAM_CHIHARA:
        return rec.al_salam_chihara_sequence(p['a'], p['b'], p['q'], mu, nmax)
    if tag == ASKEY_WILSON:
        return rec.askey_wilson_sequence(p['a'], p['b'], p['c'], p['d'], p['q'], mu, nmax)
    if tag == CONTINUOUS_Q_HERMITE:
        return rec.continuous_q_hermite_sequence(p['q'], mu, nmax)
    raise DomainError(f"未知多项式族: {tag}")


def _lattice_point(x) -> bool:
    if isinstance(x, MuPoint):
        return False
    value = complex(x)
    return value.imag == 0 and value.real >= 0 and float(value.real).is_integer()


def _recurrence_value(family: PolyFamily, n: int, x) -> complex:
    """
    单个值的递推求值

    Meixner、Hahn 在格点 x ∈ ℕ 上关于 n 只是 x 次多项式，是 n 方向递推的极小解，
    前向递推会被 c^{-n} 型的主解淹没。x < n 时改为沿 x 方向递推：
    M_n(x) = M_x(n)，Q_n(x; a, b, N) = R_x(n(n+a+b+1); a, b, N)
    """
    p = family.as_dict()
    if family.tag in (MEIXNER, HAHN) and _lattice_point(x) and int(complex(x).real) < n:
        m = int(complex(x).real)
        if family.tag == MEIXNER:
            return rec.meixner_sequence(p['beta'], p['c'], n, m)[-1]
        a, b, big_n = p['a'], p['b'], int(p['N'])
        if n > big_n or m > big_n:
            raise DomainError(f"Hahn 要求 n, x <= N, 实际 n={n}, x={m}, N={big_n}")
        return rec.dual_hahn_sequence(a, b, big_n, n * (n + a + b + 1), m)[-1]
    return eval_sequence(family, n, x)[-1]


def eval_result(family: PolyFamily, n: int, x, method: str = RECURRENCE) -> PolyValue:
    """带条件数估计的求值"""
    if not 0 <= n <= MAX_DEGREE:
        raise DomainError(f"次数须满足 0 <= n <= {MAX_DEGREE}, 实际 n={n}")
    if method == HYPERGEOMETRIC:
        return _hypergeometric(family, n, x)
    if method == RECURRENCE:
        value = _recurrence_value(family, n, x)
        return PolyValue(value, abs(value), RECURRENCE)
    raise DomainError(f"未知求值方法: {method}")


def eval_poly(family: PolyFamily, n: int, x, method: str = RECURRENCE) -> complex:
    """
    多项式求值

    Args:
        family: 多项式族
        n: 次数 (<= 500)
        x: 自变量；Hahn 取 {0..N}，Askey-Wilson/ASC 传 MuPoint（或 μ）
        method: "hypergeometric" | "recurrence"

    Returns:
        多项式值（复数）
    """
    return eval_result(family, n, x, method).value


def laguerre_norm(alpha: float, n: int) -> float:
    """∫ L_n^α(x)² x^α e^{-x} dx = Γ(n+α+1)/n!"""
    return math.exp(ln_gamma(n + alpha + 1) - ln_gamma(n + 1))


def hermite_norm(n: int) -> float:
    """∫ H_n(x)² e^{-x²} dx = √π 2^n n!"""
    return math.sqrt(math.pi) * 2.0 ** n * factorial(n)


def jacobi_norm_ab(a: float, b: float, n: int) -> float:
    """
    ∫ P_n^{(a,b)}(x)² (1-x)^a (1+x)^b dx

    2^{a+b+1} Γ(n+a+1) Γ(n+b+1) / ((2n+a+b+1) Γ(n+a+b+1) n!)
    n=0 且 a+b+1=0 时用 Γ(a+1)Γ(b+1)/Γ(a+b+2) 的极限形式
    """
    if n == 0:
        log_value = ((a + b + 1) * math.log(2) + ln_gamma(a + 1) + ln_gamma(b + 1)
                     - ln_gamma(a + b + 2))
        return math.exp(log_value)
    log_value = ((a + b + 1) * math.log(2) + ln_gamma(n + a + 1) + ln_gamma(n + b + 1)
                 - ln_gamma(n + a + b + 1) - ln_gamma(n + 1))
    return math.exp(log_value) / (2 * n + a + b + 1)


def jacobi_norm(j: int, k1: float, k2: float) -> float:
    """
    耦合常数中用到的 Jacobi 范数 h_j，参数 (2k1-1, 2k2-1)

    Args:
        j: 次数
        k1, k2: 表示标签，须 > 0

    Returns:
        h_j
    """
    if not (k1 > 0 and k2 > 0):
        raise DomainError(f"jacobi_norm 要求 k1, k2 > 0, 实际 k1={k1}, k2={k2}")
    return jacobi_norm_ab(2 * k1 - 1, 2 * k2 - 1, j)


def scaled_meixner(n: int, x: int, beta: float, gamma_: float) -> float:
    """
    γ^{n+x} M_n(x; β; γ²)，x 为非负整数

    Σ_i (-n)_i (-x)_i / ((β)_i i!) γ^{n+x-2i} (γ²-1)^i，γ = 0 或 γ < 0 时同样有效
    """
    if int(x) != x or x < 0:
        raise DomainError(f"scaled_meixner 要求 x 为非负整数, 实际 x={x}")
    x = int(x)
    g2m1 = gamma_ * gamma_ - 1
    total = 0.0
    coef = 1.0
    for i in range(min(n, x) + 1):
        total += coef * gamma_ ** (n + x - 2 * i) * g2m1 ** i
        coef *= (-n + i) * (-x + i) / ((beta + i) * (i + 1))
    return total
