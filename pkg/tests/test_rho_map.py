"""
Tests for the rho ring and the determinant map phi
"""
import pytest

from qtcatalan.core.rho_map import (
    RhoPoly, h_poly, phi, phi_injectivity_check, phi_matrix, phi_rank, phi_welldefined_check,
)
from qtcatalan.diagonal_ideal.pointsets import PointSet, enumerate_pointsets
from qtcatalan.exceptions import PreconditionError
from qtcatalan.utils.partition_numbers import partition_count_bounded

rho1 = RhoPoly.rho(1)
rho2 = RhoPoly.rho(2)


class TestRhoPoly:
    """Arithmetic in C[rho_1, rho_2, ...]"""

    def test_rho_zero_is_one(self):
        """rho_0 = 1 is dropped from keys"""
        assert RhoPoly({(0, 2): 3}) == RhoPoly({(2,): 3})
        assert RhoPoly.rho(0) == RhoPoly.one()

    def test_product(self):
        assert (1 + rho1) ** 2 == 1 + 2 * rho1 + rho1 * rho1
        assert (rho1 * rho2).coefficient((1, 2)) == 1

    def test_weights(self):
        f = rho2 + rho1 * rho1 + 5
        assert f.weights == [0, 2]
        assert f.homogeneous_weight() is None
        assert f.weight_part(2) == rho2 + rho1 * rho1

    def test_records(self):
        f = 3 * rho2 - rho1
        assert f.to_records() == [{'nu': [1], 'c': -1}, {'nu': [2], 'c': 3}]
        assert RhoPoly.from_records(f.to_records()) == f

    def test_negative_index(self):
        with pytest.raises(PreconditionError):
            RhoPoly.rho(-1)


class TestHPoly:
    """Weight parts of (1 + rho_1 + rho_2 + ...)^b"""

    def test_values(self):
        """h(2,2) = 2rho_2 + rho_1^2, h(3,1) = 3rho_1"""
        assert h_poly(2, 2) == 2 * rho2 + rho1 * rho1
        assert h_poly(3, 1) == 3 * rho1
        assert h_poly(0, 0) == RhoPoly.one()
        assert h_poly(0, 1).is_zero()
        assert h_poly(4, -1).is_zero()

    @pytest.mark.parametrize("b", [1, 2, 3])
    def test_matches_expansion(self, b):
        """Agrees with the weight parts of the truncated power"""
        base = RhoPoly.one() + rho1 + rho2 + RhoPoly.rho(3)
        expanded = base ** b
        for w in range(4):
            assert h_poly(b, w) == expanded.weight_part(w)


class TestPhi:
    """phi(D) and its induced map on M"""

    def test_staircase_is_one(self):
        assert phi(PointSet(((0, 0), (1, 0)))) == RhoPoly.one()
        assert phi(PointSet(((0, 0), (1, 0), (1, 1)))) == RhoPoly.one()

    def test_weight_one(self):
        """{(0,0),(0,1),(1,0)} maps to rho_1"""
        D = PointSet(((0, 0), (1, 0), (0, 1)))
        assert phi(D) == rho1
        assert phi_matrix(D)[1][2] == rho1

    @pytest.mark.parametrize("n, d1, d2", [(3, 1, 1), (4, 2, 2), (4, 3, 1)])
    def test_homogeneous(self, n, d1, d2):
        """Every phi(D) is zero or homogeneous of weight k(D)"""
        for D in enumerate_pointsets(n, d1, d2):
            image = phi(D)
            assert image.is_zero() or image.homogeneous_weight() == D.k

    def test_well_defined(self):
        assert phi_welldefined_check(3, 2, 1)
        assert phi_welldefined_check(4, 3, 2)

    @pytest.mark.parametrize("n, d1, d2", [(3, 2, 1), (4, 4, 1), (4, 2, 3)])
    def test_injective(self, n, d1, d2):
        assert phi_injectivity_check(n, d1, d2)

    def test_rank_is_bounded_partition_count(self):
        """dim M_{d1,d2} = p(d2, k) inside the injective range"""
        rank, dim = phi_rank(4, 4, 1)
        assert rank == dim == partition_count_bounded(1, 1)

    def test_injectivity_range(self):
        with pytest.raises(PreconditionError):
            phi_injectivity_check(3, 0, 0)
