from algebra.preorders import kl_invariants_report, verify_parabolic_compatibility, verify_parabolic_expansion
from algebra.symgroup import Permutation, all_permutations, longest_element
from algebra.tableaux import q_tableau


def test_right_cell_of_s1_in_s3(cells3):
    assert cells3.right_cell_of(Permutation([2, 1, 3])) == frozenset({Permutation([2, 1, 3]), Permutation([3, 1, 2])})


def test_cell_counts(cells3, cells4):
    assert len(cells3.right_cells) == 4
    assert len(cells3.left_cells) == 4
    assert len(cells3.two_sided_cells) == 3
    assert len(cells4.right_cells) == 10
    assert len(cells4.two_sided_cells) == 5


def test_cells_partition_the_group(cells4):
    for cells in (cells4.right_cells, cells4.left_cells, cells4.two_sided_cells):
        members = [w for cell in cells for w in cell]
        assert len(members) == 24
        assert set(members) == set(all_permutations(4))


def test_right_cells_are_q_fibres(cells4):
    for cell in cells4.right_cells:
        assert len({q_tableau(w) for w in cell}) == 1


def test_left_cells_are_inverse_right_cells(cells4):
    for w in all_permutations(4):
        assert cells4.left_cell_of(w) == frozenset(x.inverse() for x in cells4.right_cell_of(w.inverse()))


def test_agreement_with_rs_and_dominance(cells3, cells4):
    assert cells3.rs_agreement() == []
    assert cells4.rs_agreement() == []
    assert cells4.dominance_agreement() == []


def test_identity_is_on_top_and_longest_at_the_bottom(cells4):
    e = Permutation.identity(4)
    w0 = longest_element(4)
    for w in all_permutations(4):
        assert cells4.leq_right(w, e)
        assert cells4.leq_right(w0, w)
        assert cells4.leq_two_sided(w0, w)
    assert not cells4.leq_right(e, w0)
    assert cells4.down_set_right(e) == frozenset(all_permutations(4))
    assert cells4.strict_down_set_right(w0) == frozenset()


def test_preorder_is_transitive(cells3):
    elements = all_permutations(3)
    for x in elements:
        for y in elements:
            for z in elements:
                if cells3.leq_right(x, y) and cells3.leq_right(y, z):
                    assert cells3.leq_right(x, z)
                if cells3.leq_left(x, y) and cells3.leq_left(y, z):
                    assert cells3.leq_left(x, z)


def test_dump(cells3):
    dump = cells3.to_dump()
    assert dump.m == 3
    assert dump.rs_agreement and dump.dominance_agreement
    assert dump.problems == []
    assert sorted(len(c.elements) for c in dump.right_cells) == [1, 1, 2, 2]


def test_kl_invariants_hold():
    for report in kl_invariants_report(4):
        assert report.passed, report.counterexamples
        assert report.checked > 0


def test_parabolic_claims_hold():
    for n in (2, 3):
        for report in verify_parabolic_compatibility(n) + verify_parabolic_expansion(n):
            assert report.passed, report.counterexamples
