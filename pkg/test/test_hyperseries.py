#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""超几何与基本超几何级数"""

import cmath

from hypothesis import given, settings
from hypothesis.strategies import floats, integers
from pytest import approx, mark, raises
from scipy import special

from hyperseries.pfq import SeriesSpec, hyp1f1, hyp2f1, pfq, pfq_result, terminating_2f1_homogeneous
from hyperseries.qseries import (
    QSeriesSpec,
    phi32_sequence,
    phi_rs,
    phi_rs_result,
    qpoch,
    qpoch_inf_many,
    qpoch_many,
    w87,
)
from hyperseries.truncation import TruncationPolicy
from numerics.special import pochhammer
from orthopoly.recurrence import al_salam_chihara_sequence
from utils.exceptions import DomainError, PoleError, TruncationError


class TestPfq:

    @mark.parametrize('a, b, z', [(0.5, 1.5, 0.3), (2.0, 3.5, -4.0), (-1.3, 0.7, 2.0)])
    def test_hyp1f1_against_scipy(self, a, b, z):
        assert hyp1f1(a, b, z).real == approx(special.hyp1f1(a, b, z), rel=1e-12)

    @mark.parametrize('a, b, c, z', [(0.5, 1.5, 2.5, 0.3), (1.2, -0.7, 3.1, -0.6), (2.0, 1.0, 1.5, 0.85)])
    def test_hyp2f1_against_scipy(self, a, b, c, z):
        assert hyp2f1(a, b, c, z).real == approx(special.hyp2f1(a, b, c, z), rel=1e-11)

    @settings(max_examples=40, deadline=None)
    @given(integers(min_value=0, max_value=15),
           floats(min_value=0.1, max_value=4.0), floats(min_value=0.1, max_value=4.0))
    def test_chu_vandermonde(self, n, b, c):
        result = pfq_result(SeriesSpec.of([-n, b], [c], 1.0))
        expected = pochhammer(c - b, n) / pochhammer(c, n)
        assert abs(result.value - expected) <= 1e-13 * result.condition + 1e-14

    def test_terminating_exact_terms(self):
        result = pfq_result(SeriesSpec.of([-4, 1.5], [2.5], 7.0))
        assert result.terminating
        assert result.terms == 5
        assert result.tail_bound == 0.0

    def test_divergent_outside_whitelist(self):
        with raises(DomainError):
            pfq(SeriesSpec.of([0.5, 1.5], [], 0.1))
        with raises(DomainError):
            hyp2f1(0.5, 1.5, 2.5, 1.2)

    def test_pole_in_denominator(self):
        with raises(PoleError):
            pfq(SeriesSpec.of([1.0], [-2.0], 0.5))

    def test_truncation_failure(self):
        policy = TruncationPolicy(tol=1e-16, max_terms=5, small_terms=3)
        with raises(TruncationError) as info:
            hyp2f1(0.5, 0.5, 1.0, 0.99, policy)
        assert info.value.terms == 5

    def test_tail_bound_reported(self):
        result = pfq_result(SeriesSpec.of([0.5, 1.0], [2.0], 0.5))
        assert not result.terminating
        assert 0.0 <= result.tail_bound < 1e-14

    @mark.parametrize('z1, z2', [(0.3, 0.7), (0.0, 0.5), (0.4 + 0.2j, -0.3)])
    def test_homogeneous_form(self, z1, z2):
        n, b, c = 4, 1.7, 3.2
        value = terminating_2f1_homogeneous(n, b, c, z1, z2)
        if z1 != 0:
            expected = z1 ** n * hyp2f1(-n, b, c, 1 - z2 / z1)
            assert value == approx(expected, rel=1e-12)
        else:
            # 只剩 i = n 项
            expected = pochhammer(-n, n) * pochhammer(b, n) / pochhammer(c, n) / 24 * (-z2) ** n
            assert value == approx(expected, rel=1e-12)


class TestQSeries:

    @settings(max_examples=40, deadline=None)
    @given(floats(min_value=-2, max_value=2), floats(min_value=0.05, max_value=0.95),
           integers(min_value=0, max_value=10), integers(min_value=0, max_value=10))
    def test_qpoch_splits(self, a, q, m, n):
        lhs = qpoch(a, q, m + n)
        rhs = qpoch(a, q, m) * qpoch(a * q ** m, q, n)
        assert lhs == approx(rhs, rel=1e-11, abs=1e-12)

    def test_qpoch_domain(self):
        with raises(DomainError):
            qpoch(0.5, 1.0, 3)
        with raises(DomainError):
            qpoch(0.5, 0.5, -1)

    @mark.parametrize('a, z, q', [(0.3, 0.5, 0.4), (-0.7, 0.2, 0.8), (2.0, 0.1 + 0.3j, 0.6)])
    def test_q_binomial(self, a, z, q):
        value = phi_rs(QSeriesSpec.of([a], [], q, z))
        expected = qpoch_inf_many([a * z], q) / qpoch_inf_many([z], q)
        assert value == approx(expected, rel=1e-12)

    @mark.parametrize('n', [0, 1, 3, 6])
    def test_q_chu_vandermonde(self, n):
        """n=6 时 Σ|t_k| 约为结果的 4e7 倍，误差按条件数计"""
        q, b, c = 0.6, 0.4, 0.9
        result = phi_rs_result(QSeriesSpec.of([q ** (-n), b], [c], q, q))
        expected = qpoch(c / b, q, n) / qpoch(c, q, n) * b ** n
        assert result.terminating
        assert abs(result.value - expected) <= 1e-10 * abs(expected) + 1e-14 * result.condition

    @mark.parametrize('n', [2, 5, 9])
    def test_q_power_parameter_terminates_exactly(self, n):
        """上参数 q^{-n} 之后的项恰为零"""
        q = 0.6
        full = phi_rs_result(QSeriesSpec.of([q ** (-n), 0.4], [0.9], q, q, degree=n + 3))
        cut = phi_rs_result(QSeriesSpec.of([q ** (-n), 0.4], [0.9], q, q))
        assert full.value == cut.value

    def test_terminating_degree_detected(self):
        result = phi_rs_result(QSeriesSpec.of([0.5 ** -3, 0.2], [0.7], 0.5, 0.5))
        assert result.terminating
        assert result.terms == 4

    def test_nonterminating_outside_region(self):
        with raises(DomainError):
            phi_rs(QSeriesSpec.of([0.3, 0.2], [0.5], 0.5, 1.5))

    def test_w87_reduces_to_6w5_sum(self):
        a, b, c, d, q = 0.3, 0.5, 0.6, 0.7, 0.5
        e = 0.4
        z = a * q / (b * c * d)
        value = w87(a, b, c, d, e, a * q / e, q, z)
        expected = (qpoch_inf_many([a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], q)
                    / qpoch_inf_many([a * q / b, a * q / c, a * q / d, z], q))
        assert value == approx(expected, rel=1e-11)

    def test_w87_domain(self):
        with raises(DomainError):
            w87(0.3, 0.5, 0.6, 0.7, 0.4, 0.2, 0.5, 1.0)

    def test_phi32_sequence_matches_direct(self):
        a, b, f, q = 0.3, -0.4, 0.5, 0.6
        values = phi32_sequence(a, b, f, q, 8)
        for n, value in enumerate(values):
            direct = phi_rs_result(QSeriesSpec.of([q ** (-n), a, b], [f, 0.0], q, q, degree=n))
            # 直接求和的抵消随 n 增长，容差按 Σ|t_k| 计
            assert abs(value - direct.value) <= 1e-12 * abs(value) + 1e-14 * direct.condition

    def test_phi32_sequence_reduces_to_power(self):
        # b = f 时 3φ2 退化为 2φ1[q^{-n}, a; 0; q, q] = a^n
        values = phi32_sequence(0.5, 0.3, 0.3, 0.6, 30)
        for n, value in enumerate(values):
            assert value == approx(0.5 ** n, rel=1e-12)

    def test_phi32_sequence_matches_al_salam_chihara(self):
        """φ_n = α^n Q_n(μ; α, f/α | q) / (f;q)_n，α² = ab，2αμ = a + b"""
        a, b, f, q = 0.3, -0.4, 0.5, 0.6
        alpha = cmath.sqrt(a * b)
        asc = al_salam_chihara_sequence(alpha, f / alpha, q, (a + b) / (2 * alpha), 20)
        values = phi32_sequence(a, b, f, q, 20)
        for n, value in enumerate(values):
            expected = alpha ** n * asc[n] / qpoch(f, q, n)
            assert value == approx(expected, rel=1e-12)

    def test_qpoch_many(self):
        assert qpoch_many([0.2, 0.3], 0.5, 3) == approx(qpoch(0.2, 0.5, 3) * qpoch(0.3, 0.5, 3))
