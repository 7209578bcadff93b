#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
各恒等式的闭式一侧
复数幂一律取主值分支，参数模式保证底数在右半平面
"""

import cmath
import math

from hyperseries.pfq import hyp1f1, hyp2f1
from hyperseries.qseries import qpoch_inf_many, w87
from numerics.special import gamma, ln_gamma, pochhammer
from orthopoly.askey_wilson import aw_h0
from orthopoly.families import scaled_meixner
from utils.exceptions import DomainError, RangeError

_MAX_LOG = 709.0


def gf_laguerre(k: float, x: float, z: complex) -> complex:
    """(1-z)^{-2k} e^{xz/(z-1)}"""
    z = complex(z)
    return (1 - z) ** (-2 * k) * cmath.exp(x * z / (z - 1))


def gf_meixner_pollaczek(k: float, phi: float, x: float, z: complex) -> complex:
    """(1-e^{iφ}z)^{-k+ix} (1-e^{-iφ}z)^{-k-ix} / Γ(2k)"""
    z = complex(z)
    e = cmath.exp(1j * phi)
    return (1 - e * z) ** (-k + 1j * x) * (1 - z / e) ** (-k - 1j * x) / gamma(2 * k)


def gf_meixner(k: float, c: float, x: int, z: complex) -> complex:
    """(1-z/c)^x (1-cz)^{-x-2k}，x ∈ ℕ 时第一个因子是多项式"""
    z = complex(z)
    return (1 - z / c) ** int(x) * (1 - c * z) ** (-x - 2 * k)


def _exp_front(log_front: complex, what: str) -> complex:
    """由对数形式取前因子，实部超出双精度指数范围时报 RangeError"""
    if log_front.real > _MAX_LOG:
        raise RangeError(f"{what} 前因子溢出: log|·| = {log_front.real:.6g}")
    return cmath.exp(log_front)


def ser1(a: float, b: float, x: complex, y: complex, z: complex) -> complex:
    """(1-z)^{a-b} (1-z+yz)^{-a} e^{xz/(z-1)} 1F1[a; b; xyz/((1-z)(1-z+yz))]"""
    z = complex(z)
    base = 1 - z + y * z
    arg = x * y * z / ((1 - z) * base)
    log_one = cmath.log(1 - z)
    log_front = a * (log_one - cmath.log(base)) - b * log_one + x * z / (z - 1)
    return _exp_front(log_front, "SER1") * hyp1f1(a, b, arg)


def ser2_argument(x: complex, y: complex, z: complex) -> complex:
    """SER2 右边 2F1 的自变量 xyz/((1-z+xz)(1-z+yz))"""
    z = complex(z)
    return x * y * z / ((1 - z + x * z) * (1 - z + y * z))


def ser2(a: float, b: float, c: float, x: complex, y: complex, z: complex) -> complex:
    """
    (1-z+xz)^{-a} (1-z+yz)^{-b} (1-z)^{a+b-c} 2F1[a, b; c; xyz/((1-z+xz)(1-z+yz))]

    幂次在对数下合并，(1-z)^a / (1-z+xz)^a 作为一个量求
    """
    z = complex(z)
    arg = ser2_argument(x, y, z)
    if abs(arg) >= 1:
        raise DomainError(f"SER2 右边 2F1 自变量须 |w| < 1, 实际 |w|={abs(arg):.6g}")
    log_one = cmath.log(1 - z)
    log_front = (a * (log_one - cmath.log(1 - z + x * z)) - b * cmath.log(1 - z + y * z)
                 + (b - c) * log_one)
    return _exp_front(log_front, "SER2") * hyp2f1(a, b, c, arg)


def serlag(a: float, b: float, s: float, z1: complex, z2: complex) -> complex:
    """(1-z1)^{a-b} (1-z2)^{-a} e^{s z1/(z1-1)} 1F1[a; b; s(z1-z2)/((z1-1)(z2-1))]"""
    z1, z2 = complex(z1), complex(z2)
    arg = s * (z1 - z2) / ((z1 - 1) * (z2 - 1))
    return ((1 - z1) ** (a - b) * (1 - z2) ** (-a) * cmath.exp(s * z1 / (z1 - 1))
            * hyp1f1(a, b, arg))


def qser2(a: complex, b: complex, c: complex, d: complex, f: complex, q: float, z: complex) -> complex:
    """
    (abcz, abdz, acdz, bcdz, fz;q)_∞ / (acz, bcz, adz, bdz, abcdz;q)_∞
    · 8W7(abcdz/q; a, b, c, d, abcdz/f; q, fz)
    """
    z = complex(z)
    if z == 0:
        return 1.0 + 0j
    abcd = a * b * c * d
    front = (qpoch_inf_many([a * b * c * z, a * b * d * z, a * c * d * z, b * c * d * z, f * z], q)
             / qpoch_inf_many([a * c * z, b * c * z, a * d * z, b * d * z, abcd * z], q))
    return front * w87(abcd * z / q, a, b, c, d, abcd * z / f, q, f * z)


def gf_al_salam_chihara(k: float, q: float, s: float, theta: float, z: complex) -> complex:
    """(q^k zs, q^k z/s;q)_∞ / (zx, z/x;q)_∞，x = e^{iθ}"""
    z = complex(z)
    x = cmath.exp(1j * theta)
    qk = q ** k
    return qpoch_inf_many([qk * z * s, qk * z / s], q) / qpoch_inf_many([z * x, z / x], q)


def lemma_integral(a: float, b: float, j: int, c: float) -> complex:
    """
    ∫(1-r)^a (1+r)^b P_j^{(a,b)}(r) e^{cr} dr
    = 2^{a+b+1} Γ(a+j+1)Γ(b+j+1) / (j! Γ(a+b+2j+2)) e^{-c} (2c)^j 1F1[b+j+1; a+b+2j+2; 2c]
    """
    log_front = ((a + b + 1) * math.log(2) + ln_gamma(a + j + 1) + ln_gamma(b + j + 1)
                 - ln_gamma(j + 1) - ln_gamma(a + b + 2 * j + 2))
    return (math.exp(log_front) * math.exp(-c) * (2 * c) ** j
            * hyp1f1(b + j + 1, a + b + 2 * j + 2, 2 * c))


def aw_j_integral(a: complex, b: complex, c: complex, d: complex, f: complex, g: complex,
                  q: float) -> complex:
    """
    ∫ h(t;g)/h(t;f) w(t;a,b,c,d) dt
    = (ag, bg, cg, abcf;q)_∞ / (h0 (af, bf, cf, abcg;q)_∞) · 8W7(abcg/q; ab, ac, bc, g/d, g/f; q, df)
    """
    if g == 0 or f == 0 or d == 0:
        raise DomainError("AWJ 闭式要求 d, f, g 非零")
    h0 = aw_h0(a, b, c, d, q)
    front = (qpoch_inf_many([a * g, b * g, c * g, a * b * c * f], q)
             / (h0 * qpoch_inf_many([a * f, b * f, c * f, a * b * c * g], q)))
    return front * w87(a * b * c * g / q, a * b, a * c, b * c, g / d, g / f, q, d * f)


def laguerre_kernel_integral(a: float, rho: float, m: int, n: int) -> complex:
    """
    ∫_0^∞ L_m^{(a)}(ρx) L_n^{(a)}(x) e^{-(ρ+1)x/2} x^a dx
    = (-1)^m Γ(a+n+1)/n! (a+1)_m/m! (2/(ρ+1))^{a+1} γ^{n+m} M_n(m; a+1; γ²)，γ = (ρ-1)/(ρ+1)
    """
    gam = (rho - 1) / (rho + 1)
    front = ((-1) ** m * math.exp(ln_gamma(a + n + 1) - ln_gamma(n + 1))
             * pochhammer(a + 1, m) / math.factorial(m) * (2 / (rho + 1)) ** (a + 1))
    return front * scaled_meixner(n, m, a + 1, gam)


def hermite_kernel_integral(lam: float, m: int, n: int) -> complex:
    """
    ∫ H_{2m}(λx) H_{2n}(x) e^{-(λ²+1)x²/2} dx
    = (-1)^m √(2π/(1+λ²)) (2m)!(2n)!/(m!n!) γ^{n+m} M_n(m; 1/2; γ²)，γ = (1-λ²)/(1+λ²)
    """
    gam = (1 - lam * lam) / (1 + lam * lam)
    log_fact = (ln_gamma(2 * m + 1) + ln_gamma(2 * n + 1) - ln_gamma(m + 1) - ln_gamma(n + 1))
    front = (-1) ** m * math.sqrt(2 * math.pi / (1 + lam * lam)) * math.exp(log_fact)
    return front * scaled_meixner(n, m, 0.5, gam)
