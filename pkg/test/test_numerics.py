#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""标量工具、三对角特征分解与 Gauss 求积"""

import math

import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import floats, integers
from pytest import approx, mark, raises
from scipy.special import roots_genlaguerre, roots_hermite, roots_jacobi

from numerics.quadrature import WeightFamily, gauss_rule
from numerics.special import CompensatedSum, compensated_sum, gamma, ln_gamma, pochhammer
from numerics.tridiag import TridiagSym, tridiag_eigen, tridiag_eigvals
from utils.exceptions import DomainError


class TestSpecial:

    @given(floats(min_value=-5, max_value=5, allow_nan=False),
           integers(min_value=0, max_value=12), integers(min_value=0, max_value=12))
    def test_pochhammer_splits(self, a, m, n):
        lhs = pochhammer(a, m + n)
        rhs = pochhammer(a, m) * pochhammer(a + m, n)
        assert lhs == approx(rhs, rel=1e-12, abs=1e-12)

    @mark.parametrize('a, n, expected', [
        (1.0, 5, 120.0),
        (0.5, 2, 0.75),
        (-3.0, 4, 0.0),
        (-3.0, 3, -6.0),
        (2.0, 0, 1.0),
    ])
    def test_pochhammer_values(self, a, n, expected):
        assert pochhammer(a, n) == approx(expected)

    def test_pochhammer_complex(self):
        assert pochhammer(1j, 2) == approx(1j * (1 + 1j))

    def test_pochhammer_negative_n(self):
        with raises(DomainError):
            pochhammer(1.0, -1)

    @mark.parametrize('x', [0.0, -1.0, -0.5])
    def test_ln_gamma_domain(self, x):
        with raises(DomainError):
            ln_gamma(x)

    def test_gamma_matches_math(self):
        for x in (0.3, 1.0, 4.5, 10.0):
            assert gamma(x) == approx(math.gamma(x), rel=1e-13)

    def test_compensated_sum_cancellation(self):
        values = [1e16, 1.0, -1e16, 1.0]
        assert compensated_sum(values) == 2.0

    def test_compensated_sum_complex_and_condition(self):
        acc = CompensatedSum().extend([1 + 1j, -1 + 2j, 3.0])
        assert acc.value == 3 + 3j
        assert acc.count == 3
        assert acc.abs_sum == approx(math.sqrt(2) + math.sqrt(5) + 3)


class TestTridiag:

    def test_matches_dense(self, rng):
        diag = rng.normal(size=12)
        off = rng.normal(size=11)
        m = TridiagSym(diag, off)
        values, vectors = tridiag_eigen(m)
        assert np.allclose(values, np.linalg.eigvalsh(m.to_dense()))
        assert np.allclose(m.to_dense() @ vectors, vectors * values)
        assert np.allclose(tridiag_eigvals(m), values)

    def test_size_one(self):
        values, vectors = tridiag_eigen(TridiagSym([2.5], []))
        assert values.tolist() == [2.5]
        assert vectors.tolist() == [[1.0]]

    def test_matvec(self, rng):
        m = TridiagSym(rng.normal(size=6), rng.normal(size=5))
        v = rng.normal(size=6)
        assert np.allclose(m.matvec(v), m.to_dense() @ v)

    def test_bad_shape(self):
        with raises(DomainError):
            TridiagSym([1.0, 2.0], [1.0, 2.0])


class TestGauss:

    @mark.parametrize('alpha', [0.0, 0.5, 2.3])
    def test_laguerre_against_scipy(self, alpha):
        rule = gauss_rule(WeightFamily.laguerre(alpha), 20)
        nodes, weights = roots_genlaguerre(20, alpha)
        assert np.allclose(rule.nodes, nodes, rtol=1e-10)
        assert np.allclose(rule.weights, weights, rtol=1e-8, atol=1e-300)

    def test_hermite_against_scipy(self):
        rule = gauss_rule(WeightFamily.hermite(), 24)
        nodes, weights = roots_hermite(24)
        assert np.allclose(rule.nodes, nodes, atol=1e-11)
        assert np.allclose(rule.weights, weights, rtol=1e-8)

    @mark.parametrize('a, b', [(0.0, 0.0), (-0.5, 0.5), (1.5, 2.0)])
    def test_jacobi_against_scipy(self, a, b):
        rule = gauss_rule(WeightFamily.jacobi(a, b), 16)
        nodes, weights = roots_jacobi(16, a, b)
        assert np.allclose(rule.nodes, nodes, atol=1e-11)
        assert np.allclose(rule.weights, weights, rtol=1e-8)

    @settings(max_examples=25, deadline=None)
    @given(integers(min_value=0, max_value=19))
    def test_laguerre_exact_for_polynomials(self, power):
        rule = gauss_rule(WeightFamily.laguerre(0.5), 10)
        value = rule.integrate(lambda x: x ** power)
        assert value.real == approx(math.gamma(power + 1.5), rel=1e-10)

    def test_total_mass(self):
        family = WeightFamily.jacobi(0.5, 1.5)
        rule = gauss_rule(family, 8)
        assert rule.integrate(lambda x: 1.0).real == approx(family.total_mass(), rel=1e-12)

    def test_trapezoid_theta_integrates_chebyshev(self):
        rule = gauss_rule(WeightFamily.trapezoid_theta(), 64)
        # ∫_0^π cos²θ dθ = π/2
        assert rule.integrate(lambda x: x * x).real == approx(math.pi / 2, rel=1e-12)

    def test_bad_family(self):
        with raises(DomainError):
            WeightFamily.laguerre(-1.0)
        with raises(DomainError):
            gauss_rule(WeightFamily.hermite(), 0)
