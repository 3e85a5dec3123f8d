"""
Tests for multivariate polynomials, alternants, point sets and sparse rank
"""
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from qtcatalan.diagonal_ideal.multipoly import (
    MultiPoly, delta, power_sum_action, sort_with_sign, sort_weakly,
)
from qtcatalan.diagonal_ideal.pointsets import (
    PointSet, count_pointsets, enumerate_pointsets, staircase_points,
)
from qtcatalan.diagonal_ideal.sparse_rank import SparseEchelon, rank_of
from qtcatalan.exceptions import PreconditionError

points_strategy = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=2, max_size=4, unique=True
)


def to_sympy(poly: MultiPoly):
    xs = sympy.symbols(f"x1:{poly.n + 1}")
    ys = sympy.symbols(f"y1:{poly.n + 1}")
    expr = 0
    for key, value in poly.items():
        term = sympy.Rational(value.numerator, value.denominator)
        for i, (a, b) in enumerate(key):
            term *= xs[i] ** a * ys[i] ** b
        expr += term
    return sympy.expand(expr), xs, ys


class TestMultiPoly:
    """Arithmetic and symmetry operations"""

    def test_variables_are_one_based(self):
        """x(1, 2) is x_1"""
        assert MultiPoly.x(1, 2) == MultiPoly.monomial(((1, 0), (0, 0)))
        assert MultiPoly.y(2, 2) == MultiPoly.monomial(((0, 0), (0, 1)))

    def test_difference_of_squares(self):
        """(x1 - x2)(x1 + x2) = x1^2 - x2^2"""
        x1, x2 = MultiPoly.x(1, 2), MultiPoly.x(2, 2)
        assert (x1 - x2) * (x1 + x2) == x1 ** 2 - x2 ** 2

    def test_mixed_variable_counts(self):
        with pytest.raises(PreconditionError):
            MultiPoly.x(1, 2) + MultiPoly.x(1, 3)

    def test_power_sum(self):
        """p_{1,1} in two variable pairs"""
        p = MultiPoly.power_sum(1, 1, 2)
        assert p == MultiPoly.x(1, 2) * MultiPoly.y(1, 2) + MultiPoly.x(2, 2) * MultiPoly.y(2, 2)
        assert p.bidegree == (1, 1)
        assert p.isotypic_parity() == 0

    def test_bidegree_none_when_mixed(self):
        assert (MultiPoly.x(1, 2) + MultiPoly.y(1, 2) ** 2).bidegree is None

    def test_swap_pairs(self):
        assert MultiPoly.x(1, 3).swap_pairs(0, 2) == MultiPoly.x(3, 3)

    def test_swap_xy(self):
        assert (MultiPoly.x(1, 2) * MultiPoly.y(2, 2) ** 2).swap_xy() == MultiPoly.y(1, 2) * MultiPoly.x(2, 2) ** 2


class TestDelta:
    """Alternants Delta_D"""

    def test_two_points(self):
        """{(0,0),(1,0)} gives x2 - x1 and {(0,0),(0,1)} gives y2 - y1"""
        assert delta(((0, 0), (1, 0))) == MultiPoly.x(2, 2) - MultiPoly.x(1, 2)
        assert delta(((0, 0), (0, 1))) == MultiPoly.y(2, 2) - MultiPoly.y(1, 2)

    def test_vandermonde(self):
        """Points (0,0),(1,0),(2,0) give prod_{i<j} (x_j - x_i)"""
        xs = [MultiPoly.x(i, 3) for i in (1, 2, 3)]
        expected = (xs[1] - xs[0]) * (xs[2] - xs[0]) * (xs[2] - xs[1])
        assert delta(((0, 0), (1, 0), (2, 0))) == expected

    def test_repeated_points(self):
        with pytest.raises(PreconditionError):
            delta(((1, 0), (1, 0)))

    @given(points_strategy)
    def test_alternating(self, points):
        """Delta is alternating, bihomogeneous and matches sympy's determinant"""
        poly = delta(points)
        n = len(points)
        assert poly.isotypic_parity() == 1
        assert poly.bidegree == (sum(a for a, _ in points), sum(b for _, b in points))
        assert poly.swap_pairs(0, 1) == -poly
        expr, xs, ys = to_sympy(poly)
        matrix = sympy.Matrix(n, n, lambda i, j: xs[i] ** points[j][0] * ys[i] ** points[j][1])
        assert sympy.expand(matrix.det() - expr) == 0

    def test_cofactor_path(self):
        """Six points go through cofactor expansion and still alternate"""
        points = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
        poly = delta(points)
        assert poly.n == 6
        assert len(poly) == 720
        assert poly.swap_pairs(2, 5) == -poly


class TestIsotypic:
    """Sorted-key coordinates and the power-sum action"""

    def test_sort_with_sign(self):
        assert sort_with_sign(((1, 0), (0, 0))) == (((0, 0), (1, 0)), -1)
        assert sort_with_sign(((1, 0), (1, 0)))[1] == 0
        assert sort_weakly(((0, 1), (1, 0), (0, 0))) == ((0, 0), (0, 1), (1, 0))

    def test_power_sum_action_odd(self):
        """p_{1,0} * Delta({(0,0),(0,1)}) in coordinates matches the product"""
        base = delta(((0, 0), (0, 1)))
        product = MultiPoly.power_sum(1, 0, 2) * base
        coords = power_sum_action(1, 0, base.isotypic_coordinates(1), 1)
        assert coords == product.isotypic_coordinates(1)

    def test_power_sum_action_even(self):
        """p_{0,1} * p_{1,0} in symmetric coordinates"""
        base = MultiPoly.power_sum(1, 0, 2)
        product = MultiPoly.power_sum(0, 1, 2) * base
        coords = power_sum_action(0, 1, base.isotypic_coordinates(0), 0)
        assert coords == product.isotypic_coordinates(0)


class TestPointSets:
    """PointSet and its enumerations"""

    def test_sorted_graded_lex(self):
        D = PointSet(((1, 1), (0, 0), (2, 0)))
        assert D.points == ((0, 0), (1, 1), (2, 0))
        assert D.bidegree == (3, 1)
        assert D.k == -1
        assert D.levels == (0, 2, 2)
        assert D.level(4) == 3

    def test_rejects_repeats_and_negatives(self):
        with pytest.raises(PreconditionError):
            PointSet(((0, 0), (0, 0)))
        with pytest.raises(PreconditionError):
            PointSet(((-1, 0), (0, 0)))

    def test_staircase_points(self):
        """n=3, bidegree (2,1): {(0,0),(1,0),(1,1)}"""
        assert staircase_points(3, 2, 1).points == ((0, 0), (1, 0), (1, 1))
        assert staircase_points(3, 0, 3).points == ((0, 0), (0, 1), (0, 2))

    def test_staircase_points_wrong_degree(self):
        with pytest.raises(PreconditionError):
            staircase_points(3, 1, 1)

    def test_enumeration(self):
        """Two-point sets of bidegree (1,1)"""
        listed = {D.points for D in enumerate_pointsets(2, 1, 1)}
        assert listed == {((0, 0), (1, 1)), ((0, 1), (1, 0))}
        assert count_pointsets(3, 0, 3) == 1
        assert count_pointsets(2, 0, 0) == 0


class TestSparseEchelon:
    """Exact rank over the rationals"""

    def test_dependent_rows(self):
        echelon = SparseEchelon()
        assert echelon.add({'a': 1, 'b': 2})
        assert echelon.add({'b': 1, 'c': Fraction(1, 3)})
        assert not echelon.add({'a': 1, 'b': 3, 'c': Fraction(1, 3)})
        assert echelon.rank == 2
        assert echelon.contains({'a': 2, 'b': 4})

    def test_copy_is_independent(self):
        echelon = SparseEchelon()
        echelon.add({'a': 1})
        other = echelon.copy()
        other.add({'b': 1})
        assert echelon.rank == 1 and other.rank == 2

    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), max_size=6))
    def test_rank_matches_sympy(self, rows):
        """Agrees with sympy's matrix rank"""
        dict_rows = [{i: v for i, v in enumerate(row) if v} for row in rows]
        expected = sympy.Matrix(rows).rank() if rows else 0
        assert rank_of(dict_rows) == expected
