"""
Tests for the rational-function definition and its specializations
"""
import logging
from fractions import Fraction

import pytest
import sympy

from qtcatalan.core.catalan_combinatorics import Partition, area_polynomial, pc_poly
from qtcatalan.core.qt_algebra import QtPoly
from qtcatalan.core.rational_formula import (
    build_grid, certify_interpolant, gaussian_specialization, interpolate_1d, mu_data, rc_poly,
    rc_specialize_t1, rc_specialize_t_qinv,
)
from qtcatalan.exceptions import InterpolationError, PreconditionError

q = QtPoly.q()
t = QtPoly.t()


class TestMuData:
    """T, B, Pi and w of a partition"""

    def test_single_cell(self):
        """mu = (1): T = 1, B = 1, Pi = 1, w = (1-t)(1-q)"""
        data = mu_data(Partition((1,)))
        assert data.T == QtPoly.one()
        assert data.B == QtPoly.one()
        assert data.Pi == QtPoly.one()
        assert data.w == (1 - t) * (1 - q)

    def test_row_of_two(self):
        """mu = (2): T = q, B = 1 + q, Pi = 1 - q"""
        data = mu_data(Partition((2,)))
        assert data.T == q
        assert data.B == 1 + q
        assert data.Pi == 1 - q

    def test_column_of_two(self):
        """mu = (1,1) swaps the roles of q and t"""
        data = mu_data(Partition((1, 1)))
        assert data.T == t
        assert data.B == 1 + t
        assert data.Pi == 1 - t
        assert data.w.swap() == mu_data(Partition((2,))).w

    def test_empty_rejected(self):
        with pytest.raises(PreconditionError):
            mu_data(Partition())


class TestInterpolation:
    """Exact one-variable interpolation"""

    def test_recovers_cubic(self):
        """Coefficients of 3 - x + 2x^3 from four samples"""
        xs = [Fraction(v) for v in (2, 3, 5, 7)]
        ys = [3 - x + 2 * x ** 3 for x in xs]
        assert interpolate_1d(xs, ys) == [3, -1, 0, 2]

    def test_matches_sympy(self):
        """Agrees with sympy's interpolating polynomial"""
        xs = [Fraction(v) for v in (2, 4, 5, 9, 11)]
        ys = [Fraction(1, 3), Fraction(-2), Fraction(7, 5), Fraction(0), Fraction(4)]
        x = sympy.symbols('x')
        expected = sympy.interpolate(list(zip(xs, ys)), x)
        coeffs = interpolate_1d(xs, ys)
        for probe in (0, 13, -6):
            value = sum(c * probe ** i for i, c in enumerate(coeffs))
            assert sympy.Rational(value.numerator, value.denominator) == expected.subs(x, probe)


class TestRcPoly:
    """RC by evaluation and interpolation"""

    def test_n1(self):
        assert rc_poly(3, 1) == QtPoly.one()

    def test_catalan_3(self):
        """RC_3^{(1)} = q^3 + q^2t + qt + qt^2 + t^3"""
        assert rc_poly(1, 3) == q ** 3 + q ** 2 * t + q * t + q * t ** 2 + t ** 3

    @pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (1, 4), (2, 3), (3, 3)])
    def test_matches_partition_version(self, m, n):
        assert rc_poly(m, n) == pc_poly(m, n)

    def test_grid_avoids_zeros(self):
        """Abscissae start at 2 and never hit a zero of a denominator"""
        grid, _ = build_grid(1, 3)
        assert grid.q_values[0] >= 2 and grid.t_values[0] >= 2
        assert len(grid.q_values) == len(grid.t_values) == 4

    def test_rejects_nonpositive(self):
        with pytest.raises(PreconditionError):
            rc_poly(0, 2)


class TestCertification:
    """Interpolant against the rational sum at points off the grid"""

    def test_certified_at_fresh_points(self):
        grid, summands = build_grid(1, 3)
        start_q, start_t = max(grid.q_values) + 1, max(grid.t_values) + 1
        assert certify_interpolant(rc_poly(1, 3), summands, start_q, start_t) == 3

    def test_steps_over_zeros(self):
        """(5, 5) is a zero of q - t, so the next three points are used"""
        summands = [([q - t], [q - t])]
        assert certify_interpolant(QtPoly.one(), summands, 5, 5, retry_budget=1) == 3

    def test_warns_when_no_point_usable(self, caplog):
        summands = [([QtPoly.one()], [QtPoly.zero()])]
        with caplog.at_level(logging.WARNING):
            assert certify_interpolant(QtPoly.one(), summands, 5, 5, retry_budget=2) == 0
        assert "certified at only 0 of 3 points" in caplog.text

    def test_disagreement_raises(self):
        summands = [([q], [QtPoly.one()])]
        with pytest.raises(InterpolationError):
            certify_interpolant(QtPoly.one(), summands, 5, 5)


class TestSpecializations:
    """t = 1 and t = 1/q"""

    def test_gaussian_small(self):
        """m=1, n=2: [4 choose 2]/[3] = 1 + q^2"""
        assert gaussian_specialization(1, 2) == 1 + q ** 2

    @pytest.mark.parametrize("m, n", [(1, 3), (2, 3), (1, 4)])
    def test_t_inverse_q(self, m, n):
        """q^{mC(n,2)} RC(q, 1/q) is the Gaussian quotient"""
        assert rc_specialize_t_qinv(m, n) == gaussian_specialization(m, n)

    @pytest.mark.parametrize("m, n", [(1, 3), (2, 3)])
    def test_t_one(self, m, n):
        """RC(q, 1) is the area polynomial"""
        assert rc_specialize_t1(m, n) == area_polynomial(m, n)

    def test_reuses_given_polynomial(self):
        """A precomputed RC is specialized without recomputation"""
        rc = q + t
        assert rc_specialize_t1(5, 5, rc) == q + 1
        assert rc_specialize_t_qinv(1, 2, rc) == 1 + q ** 2
