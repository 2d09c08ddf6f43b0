from algebra.cells import cell_representation, induce_cell, right_cell_of_tableau
from algebra.characters import (
    CHARACTER_RANK,
    character_check,
    class_representative,
    cycle_type,
    specht_character_table,
)
from algebra.ring import ONE
from algebra.symgroup import Permutation
from algebra.tableaux import StandardTableau, hook_length_count, partitions_of


def test_cycle_types():
    assert cycle_type(Permutation.identity(3)) == (1, 1, 1)
    assert cycle_type(Permutation([2, 3, 1])) == (3,)
    for rho in partitions_of(4):
        assert cycle_type(class_representative(rho)) == rho


def test_character_table_of_s3():
    table = specht_character_table(3)
    assert table[(3,)] == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    assert table[(1, 1, 1)] == {(3,): 1, (2, 1): -1, (1, 1, 1): 1}
    assert table[(2, 1)] == {(3,): -1, (2, 1): 0, (1, 1, 1): 2}


def test_character_degrees_are_hook_counts():
    table = specht_character_table(4)
    for lam in partitions_of(4):
        assert table[lam][(1, 1, 1, 1)] == hook_length_count(lam)


def test_character_check_matches_cell_shape(kl4, cells4):
    factors = induce_cell(right_cell_of_tableau(StandardTableau([[1, 2], [3]]))).factors
    for factor in factors:
        matrices, _ = cell_representation(factor.cell, kl4, cells4)
        assert character_check(matrices, factor.shape) == ([], True)


def test_character_check_tells_equal_degree_shapes_apart(kl4, cells4):
    factors = induce_cell(right_cell_of_tableau(StandardTableau([[1, 2], [3]]))).factors
    by_shape = {factor.shape: factor for factor in factors}
    assert hook_length_count((3, 1)) == hook_length_count((2, 1, 1))
    matrices, _ = cell_representation(by_shape[(3, 1)].cell, kl4, cells4)
    problems, checked = character_check(matrices, (2, 1, 1))
    assert checked
    assert problems


def test_character_check_reports_wrong_dimension(kl4, cells4):
    factors = induce_cell(right_cell_of_tableau(StandardTableau([[1, 2], [3]]))).factors
    by_shape = {factor.shape: factor for factor in factors}
    matrices, _ = cell_representation(by_shape[(2, 2)].cell, kl4, cells4)
    problems, checked = character_check(matrices, (3, 1))
    assert checked
    assert "dimension" in problems[0]


def test_character_check_skipped_above_bound():
    shape = (CHARACTER_RANK + 1,)
    assert character_check({1: [[ONE]]}, shape) == ([], False)


def test_character_check_without_generators():
    assert character_check({}, (1,)) == ([], True)
