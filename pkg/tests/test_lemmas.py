"""
Tests for the transfactor, grafting, N-subspace, embedding and spanning checks
"""
import random

import pytest

from qtcatalan.diagonal_ideal.lemmas import (
    first_lemma44_failure, graft, graft_forms, grafting_check, grafting_staircase_identity,
    higher_transfactor_check, lemma44_holds, n_subspace, embedding_injectivity_check,
    random_grafting_instances, random_pointset, random_transfactor_instances,
    staircase_spanning_check, transfactor_check, transfactor_move, transfactor_pairs,
)
from qtcatalan.diagonal_ideal.pointsets import PointSet
from qtcatalan.diagonal_ideal.staircase import StaircaseForm
from qtcatalan.exceptions import PreconditionError

STAIRCASE_3 = PointSet(((0, 0), (0, 1), (1, 1)))


class TestTransfactor:
    """Moving one point southeast and another northwest"""

    def test_move(self):
        moved = transfactor_move(STAIRCASE_3, 2, 3)
        assert moved.points == ((0, 0), (1, 0), (0, 2))
        assert moved.bidegree == STAIRCASE_3.bidegree

    def test_pairs(self):
        assert transfactor_pairs(STAIRCASE_3) == [(2, 3)]

    def test_point_on_x_axis_cannot_move_southeast(self):
        with pytest.raises(PreconditionError):
            transfactor_move(STAIRCASE_3, 1, 3)

    def test_same_index(self):
        with pytest.raises(PreconditionError):
            transfactor_move(STAIRCASE_3, 2, 2)

    def test_class_preserved(self):
        assert transfactor_check(STAIRCASE_3, 2, 3)

    def test_random_instances(self):
        """Seeded sampling is reproducible and every instance is a legal move"""
        first = random_transfactor_instances(4, 5, seed=7)
        assert first == random_transfactor_instances(4, 5, seed=7)
        assert len(first) == 5
        for D, i, j in first:
            assert (i, j) in transfactor_pairs(D)

    def test_random_pointset_distinct(self):
        rng = random.Random(3)
        for _ in range(20):
            D = random_pointset(5, rng)
            assert D.n == 5
            assert D.levels[0] == 0


class TestGrafting:
    """Swapping the tails of two point sets or staircase forms"""

    def test_graft_sequences(self):
        D1 = PointSet(((0, 0), (1, 0), (1, 1)))
        D2 = PointSet(((0, 0), (0, 1), (0, 2)))
        assert graft(D1, D2, 3) == (((0, 0), (1, 0), (0, 2)), ((0, 0), (0, 1), (1, 1)))

    def test_graft_needs_common_level(self):
        D1 = PointSet(((0, 0), (1, 0), (2, 0)))
        D2 = PointSet(((0, 0), (0, 1), (1, 0)))
        with pytest.raises(PreconditionError):
            graft(D1, D2, 3)

    def test_staircase_identity(self):
        """det(S1)det(S2) = det(S1')det(S2') for two n = 5 forms grafted at column 3"""
        S1 = StaircaseForm(('', 'x', 'xy', 'xx', 'xxx'))
        S2 = StaircaseForm(('', 'y', 'yy', 'xy', 'xx'))
        T1, T2 = graft_forms(S1, S2, 3)
        assert T1.words == ('', 'x', 'yy', 'xy', 'xx')
        assert T2.words == ('', 'y', 'xy', 'xx', 'xxx')
        assert grafting_staircase_identity(S1, S2, 3)

    def test_product_class_preserved(self):
        D1 = PointSet(((0, 0), (1, 0), (1, 1)))
        D2 = PointSet(((0, 0), (0, 1), (0, 2)))
        assert grafting_check(D1, D2, 3)

    def test_random_instances_have_common_level(self):
        for D1, D2, r in random_grafting_instances(4, 5, seed=11):
            assert D1.level(r) == r - 1 and D2.level(r) == r - 1


class TestSubspaces:
    """N-subspaces of M^{(2)} and the embedding M' -> M"""

    def test_n_subspace_square_of_vandermonde(self):
        """N_{12,0} at n=4 is spanned by the square of the Vandermonde"""
        assert n_subspace(4, 12, 0, 0).rank == 1

    def test_n_subspace_bounds(self):
        with pytest.raises(PreconditionError):
            n_subspace(4, 11, 0, 1)

    def test_higher_transfactor(self):
        assert higher_transfactor_check(4, 12, 0, 0)

    @pytest.mark.slow
    def test_higher_transfactor_mixed_bidegree(self):
        """Every M_{d1',d2'} * f lands in N_{6,6} at n=4"""
        assert higher_transfactor_check(4, 6, 6, 0)

    def test_embedding(self):
        """M'_{2,1} at n=3 embeds into M_{4,2} at n=4"""
        assert embedding_injectivity_check(4, 4, 2, 2)

    def test_embedding_bounds(self):
        with pytest.raises(PreconditionError):
            embedding_injectivity_check(4, 1, 1, 0)

    @pytest.mark.slow
    @pytest.mark.parametrize("d1, d2", [(9, 1), (8, 1)])
    def test_staircase_spanning(self, d1, d2):
        """Minimal staircase determinants span M_{d1,d2} at n=5"""
        assert staircase_spanning_check(1, 5, d1, d2)

    def test_staircase_spanning_bounds(self):
        with pytest.raises(PreconditionError):
            staircase_spanning_check(1, 4, 3, 3)


class TestPartitionIdentity:
    """sum_i p(i, a-i) = p(a)"""

    def test_holds(self):
        assert lemma44_holds(30)
        assert first_lemma44_failure(12) is None
