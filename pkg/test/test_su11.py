#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""su(1,1)：表示、哈密顿量、耦合系数、指数变换"""

import numpy as np
from pytest import approx, mark, raises
from scipy.special import gammaln

from orthopoly.families import HYPERGEOMETRIC, PolyFamily, eval_result, eval_sequence, scaled_meixner
from su11.coupling import (
    CoupledLabel,
    cgc,
    cgc_intertwining_residual,
    convolution_sides,
    convolution_residual,
    coupled_argument,
    coupled_gram_residual,
    expansion_residual,
    realization_residual,
    s_coeff,
)
from su11.representation import (
    HamiltonianKind,
    commutator_residual,
    eigen_residual,
    eigvec_coeffs,
    hamiltonian_matrix,
    predicted_discrete_spectrum,
    truncated_spectrum,
)
from su11.transform import (
    alpha_from_c,
    exp_column_deviation,
    exp_identity_residual,
    exp_j2_column,
    xc_conjugation_residual,
)
from utils.exceptions import DomainError

KINDS = [HamiltonianKind.x2(), HamiltonianKind.xphi(1.1), HamiltonianKind.xc(0.4)]


class TestRepresentation:

    @mark.parametrize('k', [0.5, 0.75, 2.0])
    def test_commutators(self, k):
        assert commutator_residual(k, 30) < 1e-10

    def test_hamiltonian_entries(self):
        m = hamiltonian_matrix(HamiltonianKind.x2(), 1.0, 4)
        assert m.diag.tolist() == approx([2.0, 4.0, 6.0, 8.0])
        assert m.offdiag.tolist() == approx([-np.sqrt(2.0), -np.sqrt(6.0), -np.sqrt(12.0)])

    def test_single_dimension(self):
        assert truncated_spectrum(HamiltonianKind.x2(), 1.0, 1).tolist() == [2.0]

    @mark.parametrize('k', [0.6, 1.0, 2.5])
    @mark.parametrize('kind, x', [
        (KINDS[0], 0.2),
        (KINDS[0], 1.7),
        (KINDS[0], 9.0),
        (KINDS[1], -2.5),
        (KINDS[1], -0.4),
        (KINDS[1], 3.0),
        (KINDS[2], 0),
        (KINDS[2], 3),
        (KINDS[2], 12),
    ])
    def test_eigen_recurrence(self, kind, x, k):
        coeffs = eigvec_coeffs(kind, k, x, 50)
        assert eigen_residual(coeffs) <= 1e-9

    @mark.parametrize('x', [0, 3, 7])
    def test_xc_coefficients_high_degree(self, x):
        """n = 80 时仍与 Meixner 有限和一致：l_n = √((2k)_n/n!) γ^{n+x} M_n(x; 2k; γ²) / γ^x"""
        k, c, n = 0.7, 0.4, 80
        coeffs = eigvec_coeffs(HamiltonianKind.xc(c), k, x, n).values
        norm = np.exp(0.5 * (gammaln(2 * k + n) - gammaln(2 * k) - gammaln(n + 1)))
        expected = norm * scaled_meixner(n, x, 2 * k, c) / c ** x
        assert coeffs[n] == approx(expected, rel=1e-10)

    def test_xc_requires_integer(self):
        with raises(DomainError):
            eigvec_coeffs(HamiltonianKind.xc(0.4), 0.75, 1.5, 5)

    @mark.parametrize('build', [
        lambda: HamiltonianKind.xphi(0.0),
        lambda: HamiltonianKind.xc(1.0),
    ])
    def test_bad_kind(self, build):
        with raises(DomainError):
            build()

    def test_xc_discrete_spectrum(self):
        kind = HamiltonianKind.xc(0.5)
        values = truncated_spectrum(kind, 1.0, 400)
        predicted = predicted_discrete_spectrum(kind, 1.0, 5)
        # 离零最近的特征值在升序数组末尾
        closest = values[::-1][:5]
        assert np.max(np.abs(closest - predicted)) <= 1e-5

    def test_continuous_kind_has_no_prediction(self):
        with raises(DomainError):
            predicted_discrete_spectrum(HamiltonianKind.x2(), 1.0, 3)


class TestCoupling:

    @mark.parametrize('k1, k2', [(0.75, 1.25), (0.5, 0.5), (2.0, 0.6)])
    def test_gram(self, k1, k2):
        assert coupled_gram_residual(k1, k2, 8) <= 1e-10

    def test_intertwining(self):
        assert cgc_intertwining_residual(0.75, 1.25, 4, 6) <= 1e-10

    def test_cgc_support(self):
        vector = cgc(CoupledLabel(0.75, 1.25, 2), 3)
        assert all(n1 + n2 == 5 for n1, n2 in vector)

    @mark.parametrize('j, n', [(0, 0), (1, 2), (3, 1), (2, 4)])
    @mark.parametrize('z1, z2', [(0.3, 0.2), (0.0, 0.4), (-0.2 + 0.1j, 0.3)])
    def test_realized(self, j, n, z1, z2):
        assert realization_residual(CoupledLabel(0.7, 1.1, j), n, z1, z2) <= 1e-12

    def test_realized_random_points(self, rng):
        label = CoupledLabel(0.9, 1.4, 3)
        for z1, z2 in rng.uniform(-0.6, 0.6, size=(10, 2)):
            assert realization_residual(label, 4, z1, z2) <= 1e-10

    def test_bad_label(self):
        with raises(DomainError):
            CoupledLabel(0.0, 1.0, 0)
        with raises(DomainError):
            CoupledLabel(1.0, 1.0, -1)

    @mark.parametrize('kind, x1, x2', [
        (KINDS[0], 0.7, 1.3),
        (KINDS[1], 0.3, -0.6),
        (KINDS[2], 1, 2),
    ])
    @mark.parametrize('j, n', [(0, 0), (1, 2), (2, 3), (3, 1)])
    def test_convolution(self, kind, x1, x2, j, n):
        lhs, rhs = convolution_sides(kind, 0.7, 1.2, j, n, x1, x2)
        assert abs(lhs - rhs) <= 1e-8 * max(abs(lhs), abs(rhs), 1.0)

    def test_convolution_residual(self):
        lhs, rhs = convolution_sides(KINDS[0], 1.2, 0.7, 2, 2, 0.4, 0.9)
        residual = convolution_residual(KINDS[0], 1.2, 0.7, 2, 2, 0.4, 0.9)
        assert residual == abs(lhs - rhs)
        assert residual <= 1e-8 * max(abs(lhs), 1.0)

    def test_xc_convolution_worked_example(self):
        assert convolution_residual(HamiltonianKind.xc(0.4), 0.7, 1.2, 1, 2, 2, 3) <= 1e-9

    @mark.parametrize('j, n', [(1, 2), (2, 0), (2, 4), (3, 3)])
    def test_xc_convolution_equal_labels(self, j, n):
        lhs, rhs = convolution_sides(HamiltonianKind.xc(0.4), 0.7, 0.7, j, n, 1, 2)
        assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), 1.0)

    def test_coupled_argument_shifts_for_xc(self):
        assert coupled_argument(KINDS[0], 2, 0.5, 1.0) == 1.5
        assert coupled_argument(KINDS[1], 2, 0.5, 1.0) == 1.5
        assert coupled_argument(KINDS[2], 2, 3, 4) == 5

    def test_xc_component_beyond_total_is_empty(self):
        lhs, rhs = convolution_sides(KINDS[2], 0.7, 0.7, 4, 1, 1, 2)
        assert rhs == 0.0
        assert abs(lhs) <= 1e-10

    def test_hahn_coefficient_vanishes(self):
        assert s_coeff(KINDS[2], 4, 0.7, 0.7, 1, 2) == 0.0

    @mark.parametrize('j', [1, 2, 4, 6])
    def test_continuous_hahn_recurrence_matches_sum(self, j):
        """低阶时递推与终止 3F2 一致"""
        total = 0.3 - 0.6
        family = PolyFamily.continuous_hahn(0.7, 0.7 - 1j * total, 0.7, 0.7 + 1j * total)
        rec = eval_sequence(family, j, 0.3)[-1]
        hyp = eval_result(family, j, 0.3, HYPERGEOMETRIC)
        assert abs(rec - hyp.value) <= 1e-10 * abs(hyp.value) + 1e-13 * hyp.condition

    @mark.parametrize('j', [20, 30, 40])
    def test_xphi_coefficient_high_order(self, j):
        """高阶 j 不再因 3F2 抵消误判为非实数"""
        value = s_coeff(KINDS[1], j, 0.7, 0.7, 0.3, -0.6)
        assert np.isfinite(value)

    @mark.parametrize('kind, x1, x2', [
        (KINDS[0], 0.5, 1.3),
        (KINDS[1], 0.3, -0.6),
        (KINDS[2], 1, 2),
    ])
    def test_expansion(self, kind, x1, x2):
        assert expansion_residual(kind, 0.7, 0.7, x1, x2, 0.3, 0.2, 40) <= 1e-8


class TestTransform:

    def test_alpha(self):
        assert alpha_from_c(0.5) == approx(np.log(3.0))
        with raises(DomainError):
            alpha_from_c(1.0)

    @mark.parametrize('m', [0, 1, 2, 5])
    def test_column_matches_meixner(self, m):
        assert exp_column_deviation(0.75, 0.3, m, 300) <= 1e-6

    def test_column_is_unit(self):
        column = exp_j2_column(0.75, alpha_from_c(0.3), 2, 300)
        assert np.linalg.norm(column.values[:150]) == approx(1.0, abs=1e-8)

    def test_exp_identity(self):
        assert exp_identity_residual(0.75, alpha_from_c(0.3), 300) <= 1e-8

    @mark.parametrize('c', [0.3, 0.5])
    def test_xc_conjugation(self, c):
        assert xc_conjugation_residual(0.75, c, 300) <= 1e-8
