#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""生成函数、Poisson 核与积分恒等式；注册表与网格检查"""

import cmath
import math

from hypothesis import given, settings
from hypothesis.strategies import floats
from pytest import approx, mark, raises
from scipy.special import eval_genlaguerre, poch

from hyperseries.truncation import TruncationPolicy
from kernels import closed_forms as cf
from kernels import series_sides as ss
from kernels.registry import check_identity, closed_form, get_identity, grid_check, list_identities, series_side
from kernels.report import DOMAIN_ERROR, FAIL, PASS, TRUNCATION_ERROR, CheckReport, GridSummary
from utils.exceptions import DomainError, RangeError

ALL_IDS = ['GF-LAG', 'GF-MP', 'GF-MEI', 'SER1', 'SER2', 'SERLAG', 'QSER2', 'GF-ASC', 'LEM41', 'AWJ',
           'JG5C', 'JG5D', 'CONV-X2', 'CONV-XPHI', 'CONV-XC', 'QEXP', 'EXPJ2', 'EXPXC',
           'VV-X2', 'VV-XPHI', 'VV-XC']


class TestClosedForms:

    def test_laguerre_at_origin(self):
        assert closed_form('GF-LAG', {'k': 1.0, 'x': 0.5, 'z': 0}) == 1.0

    @mark.parametrize('z', [0.1, -0.3, 0.2 + 0.2j])
    def test_ser2_reduces_to_power(self, z):
        assert cf.ser2(0.7, 1.1, 1.9, 0.0, 0.0, z) == approx((1 - z) ** -1.9, rel=1e-14)

    def test_ser2_symmetry(self):
        lhs = cf.ser2(0.7, 1.1, 1.9, 0.3, 0.2, 0.25)
        rhs = cf.ser2(1.1, 0.7, 1.9, 0.2, 0.3, 0.25)
        assert abs(lhs - rhs) <= 1e-12 * abs(lhs)

    def test_ser1_is_limit_of_ser2(self):
        big = 1e4
        a, b, x, y, z = 0.8, 1.3, 0.5, 0.3, 0.2
        assert cf.ser2(big, a, b, x / big, y, z) == approx(cf.ser1(a, b, x, y, z), rel=1e-4)

    @mark.parametrize('big', [1e5, 1e7])
    def test_ser2_large_a_stays_finite(self, big):
        """a 很大时 (1-z+xz)^{-a} 单独溢出，合并后的前因子仍有限"""
        a, b, x, y, z = 0.8, 1.3, 0.5, 0.3, 0.2
        assert cf.ser2(big, a, b, x / big, y, z) == approx(cf.ser1(a, b, x, y, z), rel=1e-5)

    def test_ser2_front_overflow_is_range_error(self):
        # a(log(1-z) - log(1-z+xz)) = 2000 log 2 超出指数范围
        with raises(RangeError):
            cf.ser2(2000.0, 0.5, 1.0, -0.5, 0.2, 0.5)

    def test_ser2_argument_outside_disk(self):
        with raises(DomainError):
            cf.ser2(0.5, 0.5, 1.0, 3.0, 3.0, 0.9)

    @mark.parametrize('z', [0.3, -0.2 + 0.1j])
    def test_serlag_reductions(self, z):
        b, s = 1.2, 0.4
        classical = (1 - z) ** (-b) * cmath.exp(s * z / (z - 1))
        assert cf.serlag(0.0, b, s, z, 0.1) == approx(classical, rel=1e-13)
        assert cf.serlag(0.5, b, s, z, z) == approx(classical, rel=1e-13)

    @mark.parametrize('z', [0.3, -0.25 + 0.2j])
    def test_serlag_single_variable(self, z):
        a, b, s = 0.4, 1.7, 0.9
        terms = [eval_genlaguerre(n, b - 1, s) * poch(b - a, n) / poch(b, n) * z ** n for n in range(120)]
        assert cf.serlag(a, b, s, z, 0) == approx(sum(terms), rel=1e-12)

    def test_qser2_at_origin(self):
        assert cf.qser2(0.3, 0.2, 0.4, -0.3, 0.5, 0.2, 0) == 1.0
        policy = TruncationPolicy.default()
        assert ss.qser2_series(0.3, 0.2, 0.4, -0.3, 0.5, 0.2, 0, policy).value == approx(1.0)

    @mark.parametrize('a, b', [(0.5, 1.5), (1.5, 0.5), (0.0, 0.0)])
    def test_lemma_beta_integral(self, a, b):
        expected = 2 ** (a + b + 1) * math.gamma(a + 1) * math.gamma(b + 1) / math.gamma(a + b + 2)
        assert cf.lemma_integral(a, b, 0, 0.0) == approx(expected, rel=1e-13)

    @mark.parametrize('j', [1, 2, 5])
    def test_lemma_vanishes_without_exponential(self, j):
        assert cf.lemma_integral(0.5, 1.5, j, 0.0) == 0.0

    @mark.parametrize('lam', [0.7, 1.0, 1.4])
    def test_hermite_kernel_degree_zero(self, lam):
        assert cf.hermite_kernel_integral(lam, 0, 0) == approx(math.sqrt(2 * math.pi / (1 + lam * lam)))

    @mark.parametrize('a, rho', [(0.5, 1.5), (0.0, 2.0)])
    def test_laguerre_kernel_degree_zero(self, a, rho):
        expected = math.gamma(a + 1) * (2 / (rho + 1)) ** (a + 1)
        assert cf.laguerre_kernel_integral(a, rho, 0, 0) == approx(expected, rel=1e-13)

    @settings(max_examples=30, deadline=None)
    @given(floats(min_value=0.1, max_value=0.8), floats(min_value=-0.5, max_value=0.5))
    def test_asc_generating_function_at_origin(self, k, theta):
        assert cf.gf_al_salam_chihara(k, 0.5, 1.0, theta, 0) == approx(1.0)


class TestSeriesSides:

    @mark.parametrize('identity_id, params', [
        ('GF-MEI', {'k': 0.8, 'c': 0.5, 'x': 3, 'z': 0.4}),
        ('SER2', {'a': 0.7, 'b': 1.1, 'c': 1.9, 'x': 0.3, 'y': 0.2, 'z': 0.25}),
        ('SER1', {'a': 0.8, 'b': 1.3, 'x': 0.5, 'y': 0.3, 'z': 0.2}),
        ('GF-LAG', {'k': 0.75, 'x': 1.2, 'z': -0.4}),
        ('GF-MP', {'k': 0.75, 'phi': 1.1, 'x': 0.4, 'z': 0.3}),
        ('SERLAG', {'a': 0.5, 'b': 1.2, 's': 0.4, 'z1': 0.3, 'z2': 0.1}),
        ('GF-ASC', {'k': 0.75, 'q': 0.5, 's': 1.0, 'theta': 0.8, 'z': 0.4}),
        ('QSER2', {'a': 0.3, 'b': 0.2, 'c': 0.4, 'd': -0.3, 'f': 0.5, 'q': 0.2, 'z': 0.3}),
        ('LEM41', {'a': 0.5, 'b': 1.5, 'j': 3, 'c': 0.7}),
        ('AWJ', {'a': 0.3, 'b': 0.2, 'c': -0.4, 'd': 0.1, 'f': 0.25, 'g': -0.35, 'q': 0.3}),
        ('JG5C', {'a': 0.5, 'rho': 1.5, 'm': 2, 'n': 3}),
        ('JG5D', {'lam': 1.0, 'm': 3, 'n': 5}),
        ('JG5D', {'lam': 0.7, 'm': 2, 'n': 2}),
    ])
    def test_identity_passes(self, identity_id, params):
        report = check_identity(identity_id, params)
        assert report.status == PASS, report.format_output()

    @mark.parametrize('k, c, x, z', [
        (0.6, 0.3, 0, -0.5),
        (2.5, 0.3, 0, 0.4),
        (1.0, 0.3, 5, -0.5),
        (0.6, 0.5, 3, -0.5),
    ])
    def test_meixner_series_small_c(self, k, c, x, z):
        """c < |z| 时 n 向递推的误差按 (z/c)^n 放大，逐项取对偶值后仍收敛"""
        result = ss.gf_meixner_series(k, c, x, z, TruncationPolicy.default())
        assert result.value == approx(cf.gf_meixner(k, c, x, z), rel=1e-10)

    def test_lemma_zero_exponent_uses_absolute_residual(self):
        report = check_identity('LEM41', {'a': 0.5, 'b': 0.5, 'j': 2, 'c': 0})
        assert report.passed
        assert report.rel_residual == report.abs_residual

    @mark.parametrize('z', [0.2, -0.35, 0.1 + 0.2j])
    def test_qser2_specialization(self, z):
        a, b, c, d, q = 0.3, 0.2, 0.4, 0.6, 0.5
        policy = TruncationPolicy.default()
        special = ss.qser2_specialized_series(a, b, c, d, q, z, policy).value
        general = ss.qser2_series(a, b, c, d, c * d, q, z, policy).value
        assert abs(special - general) <= 1e-6 * abs(general)
        assert abs(special - cf.qser2(a, b, c, d, c * d, q, z)) <= 1e-6 * abs(general)

    def test_quadrature_reports_points(self):
        report = check_identity('JG5C', {'a': 0.5, 'rho': 1.5, 'm': 0, 'n': 0}, tol=1e-9)
        assert report.passed
        assert report.quad_points is not None and report.quad_points > 0

    def test_laguerre_kernel_needs_rho_above_one(self):
        with raises(DomainError):
            ss.laguerre_kernel_quadrature(0.5, 0.5, 1, 1)

    def test_series_metadata(self):
        result = series_side('GF-LAG', {'k': 0.75, 'x': 1.2, 'z': 0.5})
        assert result.terms > 3
        assert 0.0 <= result.tail_bound < 1e-12

    def test_truncation_failure_is_reported(self):
        tiny = TruncationPolicy(tol=1e-16, max_terms=4, small_terms=3)
        reports, summary = grid_check('GF-LAG', [{'k': 0.75, 'x': 1.2, 'z': 0.9}], trunc=tiny)
        assert reports[0].status == TRUNCATION_ERROR
        assert summary.failed == 1


class TestRegistry:

    def test_all_identities_registered(self):
        assert [entry[0] for entry in list_identities()] == ALL_IDS

    def test_case_insensitive_lookup(self):
        assert get_identity('gf-lag').id == 'GF-LAG'

    def test_unknown_identity(self):
        with raises(DomainError):
            get_identity('NOSUCH')

    @mark.parametrize('params', [
        {'k': 0.75, 'x': 1.2},
        {'k': 0.75, 'x': 1.2, 'z': 0.3, 'w': 1},
        {'k': -1.0, 'x': 1.2, 'z': 0.3},
        {'k': 0.75, 'x': 1.2, 'z': 1.5},
    ])
    def test_schema_violations(self, params):
        with raises(DomainError):
            check_identity('GF-LAG', params)

    def test_nonpositive_tolerance(self):
        with raises(DomainError):
            check_identity('GF-LAG', {'k': 0.75, 'x': 1.2, 'z': 0.3}, tol=0.0)

    def test_delegated_checks(self):
        report = check_identity('EXPJ2', {'k': 0.75, 'c': 0.3, 'm': 1, 'dim': 300})
        assert report.passed
        assert report.rhs == 0
        assert report.rel_residual == report.abs_residual

    def test_ser2_convergence_constraint(self):
        with raises(DomainError):
            check_identity('SER2', {'a': 0.7, 'b': 1.1, 'c': 1.9, 'x': 4.0, 'y': 0.2, 'z': 0.4})


class TestGridCheck:

    def test_empty_grid(self):
        reports, summary = grid_check('SER1', [])
        assert reports == []
        assert summary.total == 0
        assert summary.pass_rate == 1.0
        assert summary.all_passed

    def test_domain_error_is_not_a_failure(self):
        grid = [{'k': 0.75, 'x': 1.2, 'z': 0.3}, {'k': 0.75, 'x': 1.2, 'z': 1.5}]
        reports, summary = grid_check('GF-LAG', grid)
        assert [r.status for r in reports] == [PASS, DOMAIN_ERROR]
        assert summary.failed == 0
        assert summary.domain_errors == 1
        assert not summary.all_passed

    def test_order_preserved_with_workers(self):
        grid = [{'k': 0.75, 'x': x, 'z': 0.3} for x in (0.1, 0.5, 1.0, 1.5, 2.0, 2.5)]
        serial, _ = grid_check('GF-LAG', grid)
        parallel, _ = grid_check('GF-LAG', grid, workers=4)
        assert [r.params for r in parallel] == grid
        assert [r.lhs for r in parallel] == [r.lhs for r in serial]


class TestReport:

    def test_floor_switches_to_absolute(self):
        report = CheckReport.from_sides('X', {}, 1e-9, 2e-9, tol=1e-8)
        assert report.rel_residual == approx(1e-9)
        assert report.passed

    def test_relative_residual(self):
        report = CheckReport.from_sides('X', {}, 2.0, 2.0 + 1e-6, tol=1e-8)
        assert report.rel_residual == approx(1e-6 / (2.0 + 1e-6))
        assert report.status == FAIL

    def test_dict_field_order(self):
        report = CheckReport.from_sides('X', {'z': 0.1 + 0.2j}, 1.0, 1.0, tol=1e-8)
        data = report.to_dict()
        assert list(data) == ['identity', 'params', 'lhs', 'rhs', 'abs_residual', 'rel_residual',
                              'terms', 'tail_bound', 'tol', 'pass']
        assert data['params']['z'] == [0.1, 0.2]
        assert data['lhs'] == [1.0, 0.0]

    def test_error_fields(self):
        report = CheckReport.from_error('X', {}, DOMAIN_ERROR, 'bad', tol=1e-8)
        data = report.to_dict()
        assert data['pass'] is False
        assert data['status'] == DOMAIN_ERROR
        assert data['error'] == 'bad'

    def test_summary_counts(self):
        reports = [CheckReport.from_sides('X', {}, 1.0, 1.0, tol=1e-8),
                   CheckReport.from_sides('X', {}, 1.0, 2.0, tol=1e-8),
                   CheckReport.from_error('X', {}, DOMAIN_ERROR, 'bad', tol=1e-8)]
        summary = GridSummary.of('X', reports)
        assert (summary.total, summary.passed, summary.failed, summary.domain_errors) == (3, 1, 1, 1)
        assert summary.pass_rate == approx(1 / 3)
