#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
三项递推求值
各族多项式的前 n+1 个值 p_0..p_n，递推系数采用标准参考文献的形式
"""

import math
from typing import List

from numerics.special import Number
from utils.exceptions import check_finite


def _finish(values: List[complex], what: str) -> List[complex]:
    check_finite(complex(values[-1]), what)
    return values


def laguerre_sequence(alpha: float, x: Number, nmax: int) -> List[complex]:
    """(n+1) L_{n+1} = (2n+α+1-x) L_n - (n+α) L_{n-1}"""
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    for n in range(nmax):
        nxt = ((2 * n + alpha + 1 - x) * values[-1] - (n + alpha) * prev) / (n + 1)
        prev = values[-1]
        values.append(nxt)
    return _finish(values, "Laguerre 递推")


def meixner_sequence(beta: float, c: float, x: Number, nmax: int) -> List[complex]:
    """c(n+β) M_{n+1} = [(c-1)x + n + (n+β)c] M_n - n M_{n-1}"""
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    for n in range(nmax):
        nxt = (((c - 1) * x + n + (n + beta) * c) * values[-1] - n * prev) / (c * (n + beta))
        prev = values[-1]
        values.append(nxt)
    return _finish(values, "Meixner 递推")


def meixner_pollaczek_sequence(lam: float, phi: float, x: Number, nmax: int) -> List[complex]:
    """(n+1) P_{n+1} = 2[x sinφ + (n+λ) cosφ] P_n - (n+2λ-1) P_{n-1}"""
    s, c = math.sin(phi), math.cos(phi)
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    for n in range(nmax):
        nxt = (2 * (x * s + (n + lam) * c) * values[-1] - (n + 2 * lam - 1) * prev) / (n + 1)
        prev = values[-1]
        values.append(nxt)
    return _finish(values, "Meixner-Pollaczek 递推")


def jacobi_sequence(a: float, b: float, x: Number, nmax: int) -> List[complex]:
    """Jacobi 标准三项递推，n=0 单独处理"""
    values = [1.0 + 0j]
    if nmax == 0:
        return values
    values.append(((a + b + 2) * x + a - b) / 2 + 0j)
    for n in range(1, nmax):
        s = 2 * n + a + b
        c1 = 2 * (n + 1) * (n + a + b + 1) * s
        c2 = (s + 1) * (s * (s + 2) * x + a * a - b * b)
        c3 = 2 * (n + a) * (n + b) * (s + 2)
        values.append((c2 * values[-1] - c3 * values[-2]) / c1)
    return _finish(values, "Jacobi 递推")


def hahn_sequence(a: float, b: float, big_n: int, x: Number, nmax: int) -> List[complex]:
    """
    -x Q_n = A_n Q_{n+1} - (A_n + C_n) Q_n + C_n Q_{n-1}

    A_n = (n+a+b+1)(n+a+1)(N-n) / ((2n+a+b+1)(2n+a+b+2))
    C_n = n(n+a+b+N+1)(n+b) / ((2n+a+b)(2n+a+b+1))
    """
    values = [1.0 + 0j]
    if nmax == 0:
        return values
    values.append(1 - x * (a + b + 2) / ((a + 1) * big_n) + 0j)
    for n in range(1, nmax):
        s = 2 * n + a + b
        an = (n + a + b + 1) * (n + a + 1) * (big_n - n) / ((s + 1) * (s + 2))
        cn = n * (n + a + b + big_n + 1) * (n + b) / (s * (s + 1))
        values.append(((an + cn - x) * values[-1] - cn * values[-2]) / an)
    return _finish(values, "Hahn 递推")


def continuous_hahn_sequence(a: Number, b: Number, c: Number, d: Number,
                             x: Number, nmax: int) -> List[complex]:
    """
    先对 p̃_n = 3F2[-n, n+S-1, a+ix; a+c, a+d; 1] 递推

    (a+ix) p̃_n = A_n p̃_{n+1} - (A_n + C_n) p̃_n + C_n p̃_{n-1}
    A_n = -(n+S-1)(n+a+c)(n+a+d) / ((2n+S-1)(2n+S))
    C_n = n(n+b+c-1)(n+b+d-1) / ((2n+S-2)(2n+S-1))

    再乘以 i^n (a+c)_n (a+d)_n / n!
    """
    s_sum = a + b + c + d
    u = a + 1j * x
    tilde = [1.0 + 0j]
    if nmax >= 1:
        tilde.append(1 - u * s_sum / ((a + c) * (a + d)))
    for n in range(1, nmax):
        an = -(n + s_sum - 1) * (n + a + c) * (n + a + d) / ((2 * n + s_sum - 1) * (2 * n + s_sum))
        cn = n * (n + b + c - 1) * (n + b + d - 1) / ((2 * n + s_sum - 2) * (2 * n + s_sum - 1))
        tilde.append(((u + an + cn) * tilde[-1] - cn * tilde[-2]) / an)

    values = []
    factor = 1.0 + 0j
    for n, t in enumerate(tilde):
        values.append(factor * t)
        factor *= 1j * (a + c + n) * (a + d + n) / (n + 1)
    return _finish(values, "连续 Hahn 递推")


def hermite_sequence(x: Number, nmax: int) -> List[complex]:
    """H_{n+1} = 2x H_n - 2n H_{n-1}"""
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    for n in range(nmax):
        nxt = 2 * x * values[-1] - 2 * n * prev
        prev = values[-1]
        values.append(nxt)
    return _finish(values, "Hermite 递推")


def al_salam_chihara_sequence(a: Number, b: Number, q: float, mu: Number, nmax: int) -> List[complex]:
    """s_{n+1} = (2μ - (a+b) q^n) s_n - (1-q^n)(1-ab q^{n-1}) s_{n-1}"""
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    qn = 1.0
    for n in range(nmax):
        gamma = (1 - qn) * (1 - a * b * qn / q) if n > 0 else 0.0
        nxt = (2 * mu - (a + b) * qn) * values[-1] - gamma * prev
        prev = values[-1]
        values.append(nxt)
        qn *= q
    return _finish(values, "Al-Salam-Chihara 递推")


def pivot_parameter(params):
    """按模最大者作主参数，其余按原顺序"""
    idx = max(range(len(params)), key=lambda i: abs(params[i]))
    rest = [p for i, p in enumerate(params) if i != idx]
    return params[idx], rest


def askey_wilson_sequence(a: Number, b: Number, c: Number, d: Number,
                          q: float, mu: Number, nmax: int) -> List[complex]:
    """
    2x p_n = α_n p_{n+1} + B_n p_n + γ_n p_{n-1}

    α_n = (1 - abcd q^{n-1}) / ((1 - abcd q^{2n-1})(1 - abcd q^{2n}))
    γ_n = (1-q^n) Π_{pairs}(1 - pair q^{n-1}) / ((1 - abcd q^{2n-2})(1 - abcd q^{2n-1}))
    B_n = a + 1/a - A_n - C_n，以模最大的参数为主元；全零时 B_n = 0
    """
    params = [complex(a), complex(b), complex(c), complex(d)]
    abcd = params[0] * params[1] * params[2] * params[3]
    pairs = [params[i] * params[j] for i in range(4) for j in range(i + 1, 4)]
    p0, (u, v, w) = pivot_parameter(params)

    values = [1.0 + 0j]
    prev = 0.0 + 0j
    qn = 1.0
    for n in range(nmax):
        if n == 0:
            alpha_n = 1.0 / (1 - abcd)
            gamma_n = 0.0
        else:
            alpha_n = (1 - abcd * qn / q) / ((1 - abcd * qn * qn / q) * (1 - abcd * qn * qn))
            gamma_n = 1 - qn
            for pr in pairs:
                gamma_n *= 1 - pr * qn / q
            gamma_n /= (1 - abcd * qn * qn / (q * q)) * (1 - abcd * qn * qn / q)

        if p0 == 0:
            b_n = 0.0
        else:
            big_a = ((1 - p0 * u * qn) * (1 - p0 * v * qn) * (1 - p0 * w * qn)
                     / (p0 * (1 - abcd * qn * qn)))
            if n == 0:
                big_c = 0.0
            else:
                big_a *= (1 - abcd * qn / q) / (1 - abcd * qn * qn / q)
                big_c = (p0 * (1 - qn) * (1 - u * v * qn / q) * (1 - u * w * qn / q)
                         * (1 - v * w * qn / q)
                         / ((1 - abcd * qn * qn / (q * q)) * (1 - abcd * qn * qn / q)))
            b_n = p0 + 1 / p0 - big_a - big_c

        nxt = ((2 * mu - b_n) * values[-1] - gamma_n * prev) / alpha_n
        prev = values[-1]
        values.append(nxt)
        qn *= q
    return _finish(values, "Askey-Wilson 递推")


def continuous_q_hermite_sequence(q: float, mu: Number, nmax: int) -> List[complex]:
    """H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}"""
    return al_salam_chihara_sequence(0.0, 0.0, q, mu, nmax)


def dual_hahn_sequence(gamma: float, delta: float, big_n: int, lam: Number, nmax: int) -> List[complex]:
    """
    λ R_n = A_n R_{n+1} - (A_n + C_n) R_n + C_n R_{n-1}

    A_n = (n+γ+1)(n-N)，C_n = n(n-δ-N-1)
    """
    values = [1.0 + 0j]
    prev = 0.0 + 0j
    for n in range(nmax):
        an = (n + gamma + 1) * (n - big_n)
        cn = n * (n - delta - big_n - 1)
        nxt = ((lam + an + cn) * values[-1] - cn * prev) / an
        prev = values[-1]
        values.append(nxt)
    return _finish(values, "对偶 Hahn 递推")
