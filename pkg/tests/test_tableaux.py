import pytest
from hypothesis import given, strategies as st

from algebra.errors import PreconditionError
from algebra.symgroup import Permutation, all_permutations
from algebra.tableaux import (
    Diagram,
    StandardTableau,
    TypedTableau,
    c_semistandard_tableaux,
    compositions_of,
    conjugate,
    corners,
    dominance_leq,
    dominance_lt,
    hook_length_count,
    kostka_number,
    partition,
    partitions_of,
    rs_insert,
    rs_reverse_insert,
    rs_shape,
    semistandard_tableaux,
    special_diagram,
    standard_tableaux,
    w_of_diagram,
)


def test_partitions_of_four():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(compositions_of(3)) == 4


def test_partition_rejects_bad_input():
    with pytest.raises(PreconditionError):
        partition((1, 2))
    with pytest.raises(PreconditionError):
        partition((2, 0))


def test_conjugate_and_dominance():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 2, 1))) == (4, 2, 2, 1)
    assert dominance_leq((2, 1, 1), (2, 2))
    assert dominance_lt((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    with pytest.raises(PreconditionError):
        dominance_leq((2,), (1, 1, 1))


def test_hook_length_counts():
    assert hook_length_count((2, 1)) == 2
    assert hook_length_count((2, 2)) == 2
    assert hook_length_count((3, 2)) == 5
    for m in range(1, 6):
        assert sum(hook_length_count(lam) ** 2 for lam in partitions_of(m)) == len(all_permutations(m))


def test_standard_tableaux_match_hook_formula():
    for lam in partitions_of(5):
        found = standard_tableaux(lam)
        assert len(found) == hook_length_count(lam)
        assert all(t.is_standard() and t.shape == lam for t in found)


def test_corners_of_two_one():
    inner, outer = corners((2, 1))
    assert inner == [(1, 2), (2, 1)]
    assert outer == [(1, 3), (2, 2), (3, 1)]


def test_rs_example():
    p, q = rs_insert(Permutation([3, 1, 2]))
    assert p == StandardTableau([[1, 2], [3]])
    assert q == StandardTableau([[1, 3], [2]])
    assert rs_shape(Permutation([3, 1, 2])) == (2, 1)


def test_rs_is_a_bijection_on_s4():
    seen = set()
    for w in all_permutations(4):
        p, q = rs_insert(w)
        assert p.shape == q.shape
        assert rs_reverse_insert(p, q) == w
        seen.add((p, q))
    assert len(seen) == 24


@given(st.permutations(range(1, 6)))
def test_rs_of_inverse_swaps_tableaux(images):
    w = Permutation(images)
    p, q = rs_insert(w)
    assert rs_insert(w.inverse()) == (q, p)


def test_reverse_insert_needs_matching_shapes():
    with pytest.raises(PreconditionError):
        rs_reverse_insert(StandardTableau([[1, 2]]), StandardTableau([[1], [2]]))


def test_kostka_numbers():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((2, 1), (2, 1)) == 1
    assert kostka_number((2, 1), (3,)) == 0
    assert kostka_number((3, 1), (2, 1, 1)) == 2
    assert semistandard_tableaux((2, 1), (2, 2)) == []


def test_single_c_semistandard_tableau():
    found = c_semistandard_tableaux((2, 1), (2, 1))
    assert found == [TypedTableau([[1, 2], [1]], (2, 1))]
    assert found[0].is_c_semistandard()
    assert found[0].column_word() == (1, 1, 2)


def test_c_semistandard_counts_are_conjugate_kostka_numbers():
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            assert len(c_semistandard_tableaux(lam, mu)) == kostka_number(conjugate(lam), mu)


def test_typed_tableau_checks_its_type():
    with pytest.raises(PreconditionError):
        TypedTableau([[1, 2], [2]], (2, 1))
    with pytest.raises(PreconditionError):
        TypedTableau([[1, 3]], (1, 1))


def test_special_diagram():
    diagram = special_diagram((1, 2), (2, 1))
    assert diagram.row_composition() == (1, 2)
    assert diagram.column_composition() == (2, 1)
    assert diagram.is_principal()
    with pytest.raises(PreconditionError, match="lambda''=mu' required"):
        special_diagram((2, 1), (3,))


def test_w_of_young_diagram():
    assert w_of_diagram(Diagram.young((2, 1))) == Permutation([1, 3, 2])
    assert w_of_diagram(Diagram.young((3,))) == Permutation.identity(3)
    assert Diagram.young((2, 1)).is_young()
