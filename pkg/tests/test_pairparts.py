import pytest

from algebra import pairparts
from algebra.errors import PreconditionError
from algebra.pairparts import (
    PairOfPartitions,
    TypedSequence,
    cell_union_sets,
    count_cells_and_tableaux,
    d_mu,
    describe_cell_union,
    explore_downward_closure,
    has_decreasing_runs,
    l_mu,
    left_cells,
    pairs_for,
    preceq,
    quality_and_sharp,
    sequence_of_permutation,
    typed_sequences,
    verify_cell_unions,
    verify_column_criterion,
    verify_kostka_cell_count,
    verify_prefix_monotonicity,
    verify_ptableau_shortcut,
    verify_sequence_bijection,
    verify_special_cases,
    w_of_sequence,
    word_and_ptableau,
)
from algebra.symgroup import Permutation, all_permutations
from algebra.tableaux import StandardTableau, TypedTableau, compositions_of, partitions_of

SMALL_COMPOSITIONS = [mu for m in range(1, 5) for mu in compositions_of(m)]


def test_runs():
    assert d_mu((2, 2), 1) == (2, 1)
    assert d_mu((2, 2), 2) == (4, 3)
    assert d_mu((1, 3), 2) == (4, 3, 2)
    with pytest.raises(PreconditionError):
        d_mu((2, 2), 3)


def test_preceq_pads_with_zeros():
    assert preceq((1,), (1, 1))
    assert preceq((), (2,))
    assert not preceq((1, 1), (2,))


def test_sequence_all_good():
    t = TypedSequence((1, 2, 1, 2), (2, 2))
    assert w_of_sequence(t) == Permutation([2, 4, 1, 3])
    assert t.quality() == (True, True, True, True)
    assert quality_and_sharp(t) == ((True, True, True, True), (2, 2))


def test_sequence_with_a_bad_entry():
    t = TypedSequence((2, 1), (1, 1))
    assert t.quality() == (False, True)
    assert t.sharp() == (1,)
    assert str(t) == "21"


def test_sequence_checks_its_type():
    with pytest.raises(PreconditionError):
        TypedSequence((1, 1, 2), (1, 2))


def test_sequences_and_permutations_correspond():
    mu = (2, 1)
    sequences = typed_sequences(mu)
    assert [t.symbols for t in sequences] == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    images = {w_of_sequence(t) for t in sequences}
    assert images == l_mu(mu)
    for t in sequences:
        assert sequence_of_permutation(w_of_sequence(t), mu) == t
    with pytest.raises(PreconditionError):
        sequence_of_permutation(Permutation.identity(3), mu)


def test_decreasing_runs_describe_l_mu():
    mu = (1, 2, 1)
    found = {w for w in all_permutations(4) if has_decreasing_runs(w, mu)}
    assert found == l_mu(mu)
    assert len(found) == 12


def test_decreasing_runs_of_two_one():
    mu = (2, 1)
    assert has_decreasing_runs(Permutation([2, 1, 3]), mu)
    assert has_decreasing_runs(Permutation([3, 2, 1]), mu)
    assert not has_decreasing_runs(Permutation([1, 2, 3]), mu)
    assert not has_decreasing_runs(Permutation([3, 1, 2]), mu)
    assert l_mu(mu) == {Permutation([2, 1, 3]), Permutation([2, 3, 1]), Permutation([3, 2, 1])}


def test_pair_of_partitions_validation():
    pair = PairOfPartitions((1, 0), (2, 1))
    assert pair.lam == (1,)
    assert pair.m == 3
    assert PairOfPartitions((), (2,)).lam == ()
    with pytest.raises(PreconditionError):
        PairOfPartitions((3,), (2, 1))
    with pytest.raises(PreconditionError):
        PairOfPartitions((1, 2), (2, 2))


def test_pairs_for_two_two():
    assert [p.lam for p in pairs_for((2, 2))] == [(2, 2), (2, 1), (2,), (1, 1), (1,), ()]
    assert [p.lam for p in pairs_for((1, 2))] == [(1, 1), (1,), ()]


def test_left_cells_from_closure_and_from_insertion(cells4):
    by_closure = left_cells(4, cells4)
    above_closure_rank = left_cells(6)
    assert set(by_closure.values()) == {c for c in cells4.left_cells}
    assert len(set(above_closure_rank.values())) == 76


def test_left_cells_by_insertion_match_closure(monkeypatch, cells4):
    monkeypatch.setattr(pairparts, "CLOSURE_RANK", 3)
    assert set(left_cells(4).values()) == set(cells4.left_cells)


def test_claims_hold_above_closure_rank():
    mu = (3, 3)
    assert sum(mu) > pairparts.CLOSURE_RANK
    bijection = verify_sequence_bijection(mu)
    assert bijection.passed, bijection.counterexamples
    assert bijection.checked == 20
    for report in [verify_kostka_cell_count(mu), verify_cell_unions(mu), *verify_special_cases(mu)]:
        assert report.passed, (report.claim, report.counterexamples)


def test_column_word_and_insertion_tableau():
    tableau = TypedTableau([[1, 2], [1]], (2, 1))
    t, p = word_and_ptableau(tableau)
    assert t.symbols == (1, 1, 2)
    assert p == StandardTableau([[1, 3], [2]])
    with pytest.raises(PreconditionError):
        word_and_ptableau(TypedTableau([[2, 1], [1]], (2, 1)))


def test_cell_counts_match_tableaux():
    assert count_cells_and_tableaux((1, 1, 1), (2, 1)) == (2, 2)
    assert count_cells_and_tableaux((2, 1), (3,)) == (0, 0)
    assert count_cells_and_tableaux((2, 1), (1, 1, 1)) == (1, 1)


def test_cell_union_of_two_one():
    union = cell_union_sets(PairOfPartitions((2, 1), (2, 1)))
    assert union.problems == []
    assert union.exact == union.at_least
    assert union.exact == {Permutation([2, 1, 3]), Permutation([2, 3, 1])}
    description = describe_cell_union(PairOfPartitions((2, 1), (2, 1)))
    assert description.problems == []
    assert description.exact == [StandardTableau([[1, 3], [2]])]


def test_empty_lambda_gives_all_of_l_mu():
    pair = PairOfPartitions((), (2, 2))
    assert cell_union_sets(pair).at_least == l_mu((2, 2))


@pytest.mark.parametrize("mu", SMALL_COMPOSITIONS)
def test_claims_hold_for_small_compositions(mu):
    reports = [
        verify_sequence_bijection(mu),
        verify_kostka_cell_count(mu),
        verify_ptableau_shortcut(mu),
        verify_column_criterion(mu),
        verify_cell_unions(mu),
    ]
    reports += verify_prefix_monotonicity(mu)
    for report in reports:
        assert report.passed, (report.claim, report.counterexamples)
        assert not report.experimental


@pytest.mark.parametrize("mu", [mu for m in range(1, 5) for mu in partitions_of(m)])
def test_special_cases(mu):
    reports = verify_special_cases(mu)
    assert reports
    assert all(r.passed for r in reports)
    if len(mu) > 1 and mu[-1] == 1:
        assert len(reports) == 2


def test_special_cases_skip_compositions():
    assert verify_special_cases((1, 2)) == []


def test_downward_closure_is_reported_as_experimental():
    report = explore_downward_closure((2, 1), (1,))
    assert report.experimental
    assert report.lam == [1]


@pytest.mark.slow
@pytest.mark.parametrize("mu", compositions_of(5))
def test_claims_hold_in_rank_five(mu):
    for report in [verify_sequence_bijection(mu), verify_kostka_cell_count(mu), verify_cell_unions(mu)]:
        assert report.passed, (report.claim, report.counterexamples)
