#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
各恒等式的级数 / 求积一侧
幂级数逐项累加直到满足截断策略，求积用 Gauss 规则或 θ 中点规则
"""

import cmath
import math
from typing import Callable, Iterator, Optional

from hyperseries.pfq import SeriesSpec, pfq, terminating_2f1_homogeneous
from hyperseries.qseries import phi32_sequence, qpoch
from hyperseries.truncation import SeriesAccumulator, SeriesResult, TruncationPolicy
from numerics.quadrature import WeightFamily, gauss_rule
from numerics.special import gamma
from orthopoly import recurrence as rec
from orthopoly.askey_wilson import aw_integrate, h_factor
from orthopoly.families import PolyFamily, eval_poly
from utils.exceptions import DomainError
from utils.logger import get_logger

logger = get_logger(__name__)

AWJ_POINTS = 2048


def _sum_power_series(terms: Iterator[complex], policy: TruncationPolicy, what: str,
                      ratio: float) -> SeriesResult:
    """逐项累加；ratio 为几何强函数的比值估计"""
    acc = SeriesAccumulator(policy, what)
    for term in terms:
        if acc.add(term):
            return acc.result(ratio=ratio)
        if acc.exhausted():
            acc.fail()
    return acc.result(terminating=True)


def _quadrature_result(value: complex, npoints: int) -> SeriesResult:
    return SeriesResult(value=complex(value), terms=npoints, tail_bound=0.0,
                        extra={'quad_points': npoints})


def _three_term(first: complex, step: Callable[[int, complex, complex], complex]) -> Iterator[complex]:
    """p_0 = 1, p_1 = first, p_{n+1} = step(n, p_n, p_{n-1})"""
    prev, cur = 1.0 + 0j, complex(first)
    yield prev
    n = 1
    while True:
        yield cur
        prev, cur = cur, step(n, cur, prev)
        n += 1


def _laguerre_iter(alpha: float, x: complex) -> Iterator[complex]:
    return _three_term(alpha + 1 - x,
                       lambda n, cur, prev: ((2 * n + alpha + 1 - x) * cur - (n + alpha) * prev) / (n + 1))


def gf_laguerre_series(k: float, x: float, z: complex, policy: TruncationPolicy) -> SeriesResult:
    """Σ L_n^{(2k-1)}(x) z^n"""
    z = complex(z)

    def terms():
        zn = 1.0 + 0j
        for poly in _laguerre_iter(2 * k - 1, x):
            yield poly * zn
            zn *= z

    return _sum_power_series(terms(), policy, "GF-LAG", abs(z))


def gf_meixner_pollaczek_series(k: float, phi: float, x: float, z: complex,
                                policy: TruncationPolicy) -> SeriesResult:
    """Γ(2k)^{-1} Σ P_n^{(k)}(x;φ) z^n"""
    z = complex(z)
    s, c = math.sin(phi), math.cos(phi)
    norm = 1.0 / gamma(2 * k)

    def terms():
        zn = norm + 0j
        polys = _three_term(2 * (x * s + k * c),
                            lambda n, cur, prev: (2 * (x * s + (n + k) * c) * cur
                                                  - (n + 2 * k - 1) * prev) / (n + 1))
        for poly in polys:
            yield poly * zn
            zn *= z

    return _sum_power_series(terms(), policy, "GF-MP", abs(z))


def gf_meixner_series(k: float, c: float, x: int, z: complex, policy: TruncationPolicy) -> SeriesResult:
    """
    Σ (2k)_n c^n / n! · M_n(x; 2k; c²) z^n

    x ∈ ℕ 时 M_n(x) 是 n 向递推的最小解，逐项取 M_x(n)
    """
    z = complex(z)
    beta = 2 * k
    c2 = c * c
    x = int(x)

    def terms():
        weight = 1.0 + 0j
        n = 0
        while True:
            yield weight * rec.meixner_sequence(beta, c2, n, x)[-1]
            weight *= (beta + n) / (n + 1) * c * z
            n += 1

    return _sum_power_series(terms(), policy, "GF-MEI", c * abs(z))


def ser1_series(a: float, b: float, x: complex, y: complex, z: complex,
                policy: TruncationPolicy) -> SeriesResult:
    """Σ 1F1[-n; b; x] 2F1[-n, a; b; y] (b)_n / n! z^n"""
    z = complex(z)

    def terms():
        weight = 1.0 + 0j
        n = 0
        while True:
            first = pfq(SeriesSpec.of([-n], [b], x))
            second = pfq(SeriesSpec.of([-n, a], [b], y))
            yield first * second * weight
            weight *= (b + n) / (n + 1) * z
            n += 1

    return _sum_power_series(terms(), policy, "SER1", abs(z) * max(1.0, abs(1 - complex(y))))


def ser2_series(a: float, b: float, c: float, x: complex, y: complex, z: complex,
                policy: TruncationPolicy) -> SeriesResult:
    """Σ 2F1[-n, a; c; x] 2F1[-n, b; c; y] (c)_n z^n / n!"""
    z = complex(z)

    def terms():
        weight = 1.0 + 0j
        n = 0
        while True:
            first = pfq(SeriesSpec.of([-n, a], [c], x))
            second = pfq(SeriesSpec.of([-n, b], [c], y))
            yield first * second * weight
            weight *= (c + n) / (n + 1) * z
            n += 1

    return _sum_power_series(terms(), policy, "SER2",
                            abs(z) * max(1.0, abs(1 - complex(x))) * max(1.0, abs(1 - complex(y))))


def serlag_series(a: float, b: float, s: float, z1: complex, z2: complex,
                  policy: TruncationPolicy) -> SeriesResult:
    """Σ L_n^{(b-1)}(s) z1^n 2F1[-n, a; b; 1 - z2/z1]，后者按齐次多项式求值"""
    def terms():
        for n, poly in enumerate(_laguerre_iter(b - 1, s)):
            yield poly * terminating_2f1_homogeneous(n, a, b, z1, z2)

    z1, z2 = complex(z1), complex(z2)
    return _sum_power_series(terms(), policy, "SERLAG", abs(z1) + abs(z1 - z2))


def _series_length(q: float, z: complex, policy: TruncationPolicy) -> int:
    """几何衰减 max(|z|, q)^N 低于 tol 所需的项数，外加余量"""
    ratio = max(abs(z), q)
    if ratio == 0:
        return 1
    needed = int(math.log(max(policy.tol, 1e-300)) / math.log(ratio)) + 40
    return min(needed, policy.max_terms)


def qser2_series(a: complex, b: complex, c: complex, d: complex, f: complex, q: float, z: complex,
                 policy: TruncationPolicy) -> SeriesResult:
    """Σ 3φ2[q^{-n}, a, b; f, 0; q, q] 3φ2[q^{-n}, c, d; f, 0; q, q] (f;q)_n / (q;q)_n z^n"""
    z = complex(z)
    length = _series_length(q, z, policy)
    first = phi32_sequence(a, b, f, q, length)
    second = phi32_sequence(c, d, f, q, length)

    def terms():
        weight = 1.0 + 0j
        qn = 1.0
        for n in range(length + 1):
            yield first[n] * second[n] * weight
            weight *= (1 - f * qn) / (1 - q * qn) * z
            qn *= q

    return _sum_power_series(terms(), policy, "QSER2", max(abs(z), q))


def qser2_specialized_series(a: complex, b: complex, c: complex, d: complex, q: float, z: complex,
                             policy: TruncationPolicy) -> SeriesResult:
    """
    f = cd 时的 QSER2 左边，(c, d) 因子改走 Al-Salam-Chihara 路线

    3φ2[q^{-n}, c, d; cd, 0; q, q] = α^n s_n(μ(x); α, α|q) / (cd;q)_n，α = √(cd)，x = √(c/d)
    """
    z = complex(z)
    f = c * d
    alpha = cmath.sqrt(f)
    x = cmath.sqrt(c / d)
    mu = (x + 1 / x) / 2
    length = _series_length(q, z, policy)
    first = phi32_sequence(a, b, f, q, length)
    asc = rec.al_salam_chihara_sequence(alpha, alpha, q, mu, length)

    def terms():
        weight = 1.0 + 0j
        qn = 1.0
        alpha_n = 1.0 + 0j
        for n in range(length + 1):
            yield first[n] * alpha_n * asc[n] / qpoch(f, q, n) * weight
            weight *= (1 - f * qn) / (1 - q * qn) * z
            alpha_n *= alpha
            qn *= q

    return _sum_power_series(terms(), policy, "QSER2(f=cd)", max(abs(z), q))


def gf_al_salam_chihara_series(k: float, q: float, s: float, theta: float, z: complex,
                               policy: TruncationPolicy) -> SeriesResult:
    """Σ s_n(μ(x); q^k s, q^k/s|q) z^n / (q;q)_n"""
    z = complex(z)
    a, b = q ** k * s, q ** k / s
    mu = math.cos(theta)

    def terms():
        qn = 1.0
        weight = 1.0 + 0j
        polys = _three_term(2 * mu - (a + b),
                            lambda n, cur, prev: ((2 * mu - (a + b) * q ** n) * cur
                                                  - (1 - q ** n) * (1 - a * b * q ** (n - 1)) * prev))
        for poly in polys:
            yield poly * weight
            weight *= z / (1 - q * qn)
            qn *= q

    return _sum_power_series(terms(), policy, "GF-ASC", max(abs(z), q))


def lemma_quadrature(a: float, b: float, j: int, c: float,
                     npoints: Optional[int] = None) -> SeriesResult:
    """Gauss-Jacobi(a, b) 求 ∫ P_j^{(a,b)}(r) e^{cr} (1-r)^a (1+r)^b dr"""
    npoints = npoints or j + 30
    rule = gauss_rule(WeightFamily.jacobi(a, b), npoints)
    family = PolyFamily.jacobi(a, b)
    value = rule.integrate(lambda r: eval_poly(family, j, r) * math.exp(c * r))
    return _quadrature_result(value, npoints)


def aw_j_quadrature(a: complex, b: complex, c: complex, d: complex, f: complex, g: complex,
                    q: float, npoints: int = AWJ_POINTS) -> SeriesResult:
    """θ 中点规则求 ∫ h(t;g)/h(t;f) w(t;a,b,c,d) dt"""
    value = aw_integrate(lambda t: h_factor(t, [g], q) / h_factor(t, [f], q), a, b, c, d, q, npoints)
    return _quadrature_result(value, npoints)


def laguerre_kernel_quadrature(a: float, rho: float, m: int, n: int,
                               npoints: Optional[int] = None) -> SeriesResult:
    """
    t = (ρ+1)x/2 代换后用 Gauss-Laguerre(a)

    (2/(ρ+1))^{a+1} ∫ L_m(2ρt/(ρ+1)) L_n(2t/(ρ+1)) t^a e^{-t} dt
    """
    if not rho > 1:
        raise DomainError(f"JG5C 要求 ρ > 1, 实际 ρ={rho}")
    npoints = npoints or m + n + 20
    rule = gauss_rule(WeightFamily.laguerre(a), npoints)
    family = PolyFamily.laguerre(a)
    scale = 2 / (rho + 1)
    value = rule.integrate(lambda t: eval_poly(family, m, rho * scale * t) * eval_poly(family, n, scale * t))
    return _quadrature_result(value * scale ** (a + 1), npoints)


def hermite_kernel_quadrature(lam: float, m: int, n: int, npoints: Optional[int] = None) -> SeriesResult:
    """
    u = x√((λ²+1)/2) 代换后用 Gauss-Hermite

    s ∫ H_{2m}(λsu) H_{2n}(su) e^{-u²} du，s = √(2/(λ²+1))
    """
    npoints = npoints or m + n + 20
    rule = gauss_rule(WeightFamily.hermite(), npoints)
    family = PolyFamily.hermite()
    s = math.sqrt(2 / (lam * lam + 1))
    value = rule.integrate(lambda u: eval_poly(family, 2 * m, lam * s * u) * eval_poly(family, 2 * n, s * u))
    return _quadrature_result(value * s, npoints)
