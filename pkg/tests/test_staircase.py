"""
Tests for staircase forms, their block structure and minimal forms
"""
import pytest

from qtcatalan.diagonal_ideal.graded_engine import equiv_mod_lower
from qtcatalan.diagonal_ideal.multipoly import delta
from qtcatalan.diagonal_ideal.staircase import (
    PartitionType, StaircaseForm, block_diagonal, lemma41_holds, minimal_staircase,
    staircase_delta, staircase_det,
)
from qtcatalan.exceptions import PreconditionError, SearchExhaustedError

MINIMAL_EXAMPLE = StaircaseForm(('', 'x', 'xy', 'xx'))
NON_MINIMAL_EXAMPLE = StaircaseForm(('', 'y', 'x', 'yyx', 'yxx', 'xxx'))


class TestStaircaseForm:
    """Construction and entries"""

    def test_points_and_levels(self):
        assert MINIMAL_EXAMPLE.points == ((0, 0), (1, 0), (1, 1), (2, 0))
        assert MINIMAL_EXAMPLE.levels == (0, 1, 2, 2)
        assert MINIMAL_EXAMPLE.point_set().bidegree == (4, 1)

    def test_rejects_bad_letters(self):
        with pytest.raises(PreconditionError):
            StaircaseForm(('', 'z'))

    def test_rejects_unsorted_points(self):
        with pytest.raises(PreconditionError):
            StaircaseForm(('', 'xx', 'x'))

    def test_zero_above_level(self):
        """Entry (i, j) vanishes for i <= |P_j|"""
        assert MINIMAL_EXAMPLE.word(2, 3) is None
        assert MINIMAL_EXAMPLE.entry(2, 3).is_zero()
        assert MINIMAL_EXAMPLE.word(3, 4) == 'xx'

    def test_from_points(self):
        assert StaircaseForm.from_points([(0, 0), (0, 1), (2, 1)]).words == ('', 'y', 'xxy')

    def test_triangular_det(self):
        """A form with levels 0, 1, 2 has a lower-triangular matrix"""
        form = StaircaseForm(('', 'x', 'xy'))
        matrix = form.matrix()
        assert staircase_det(form) == matrix[0][0] * matrix[1][1] * matrix[2][2]


class TestBlockDiagonal:
    """Blocks, partition type and minimality"""

    def test_minimal_example(self):
        structure = block_diagonal(MINIMAL_EXAMPLE)
        assert structure.blocks == ((1, 1), (2, 1), (3, 2))
        assert structure.partition_type.mu.parts == (1,)
        assert structure.is_minimal
        assert structure.unit_blocks == 2

    def test_non_minimal_example(self):
        structure = block_diagonal(NON_MINIMAL_EXAMPLE)
        assert structure.blocks == ((1, 1), (2, 2), (4, 3))
        assert structure.partition_type.mu.parts == (3, 1)
        assert not structure.is_minimal

    def test_partition_type_of(self):
        mu = PartitionType.of([0, 1, 2])
        assert mu.mu.parts == (2, 1)
        assert mu.ascending == (1, 2)
        assert mu.size == 3

    @pytest.mark.parametrize("form", [MINIMAL_EXAMPLE, NON_MINIMAL_EXAMPLE])
    def test_unit_block_bound(self, form):
        """At least n - 2k blocks have size one"""
        assert lemma41_holds(form)


class TestMinimalStaircase:
    """Search for a minimal form of a given type"""

    def test_finds_example(self):
        mu = PartitionType.of([1])
        form = minimal_staircase(4, 4, 1, mu)
        structure = block_diagonal(form)
        assert structure.is_minimal
        assert structure.partition_type == mu
        assert form.point_set().bidegree == (4, 1)

    def test_empty_type(self):
        """k = 0 gives a single-column-block staircase"""
        form = minimal_staircase(5, 9, 1, PartitionType())
        assert form.levels == (0, 1, 2, 3, 4)
        assert form.point_set().bidegree == (9, 1)

    def test_wrong_size(self):
        with pytest.raises(PreconditionError):
            minimal_staircase(4, 4, 1, PartitionType.of([2]))

    def test_no_arrangement(self):
        """Two points cannot share level zero"""
        with pytest.raises(SearchExhaustedError):
            minimal_staircase(3, 1, 0, PartitionType.of([2]))

    def test_staircase_delta(self):
        assert staircase_delta(3, 2, 1) == delta(((0, 0), (1, 0), (1, 1)))


class TestCongruence:
    """det(S) agrees with delta of its points modulo lower degrees"""

    def test_three_points(self):
        form = StaircaseForm(('', 'x', 'xy'))
        assert equiv_mod_lower(staircase_det(form), delta(form.points))

    @pytest.mark.slow
    def test_four_points(self):
        assert equiv_mod_lower(staircase_det(MINIMAL_EXAMPLE), delta(MINIMAL_EXAMPLE.points))
