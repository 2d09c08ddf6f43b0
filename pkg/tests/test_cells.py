import pytest

from algebra.cells import (
    cell_module_basis,
    cell_representation,
    induce_cell,
    induced_cell_filtration,
    recording_tableau,
    restrict_cell,
    restricted_cell_filtration,
    right_cell_of_tableau,
)
from algebra.characters import character_check
from algebra.errors import PreconditionError
from algebra.ring import LaurentPoly
from algebra.symgroup import Permutation
from algebra.tableaux import StandardTableau


def cell_of(rows):
    return right_cell_of_tableau(StandardTableau(rows))


def test_right_cell_of_tableau_round_trips():
    cell = cell_of([[1, 3], [2]])
    assert cell == frozenset({Permutation([2, 1, 3]), Permutation([3, 1, 2])})
    assert recording_tableau(cell) == StandardTableau([[1, 3], [2]])


def test_recording_tableau_rejects_non_cells():
    with pytest.raises(PreconditionError):
        recording_tableau({Permutation([1, 2]), Permutation([2, 1])})


def test_induce_sign_cell_of_s2():
    decomposition = induce_cell({Permutation([2, 1])})
    assert decomposition.verified
    assert [f.corner for f in decomposition.factors] == [(1, 2), (3, 1)]
    assert [f.shape for f in decomposition.factors] == [(2, 1), (1, 1, 1)]
    assert sum(len(f.cell) for f in decomposition.factors) == 3


def test_induce_every_cell_of_s3(cells3):
    for cell in cells3.right_cells:
        decomposition = induce_cell(cell)
        assert decomposition.verified, decomposition.problems
        report = decomposition.to_report()
        assert report.kind == "induce"
        assert report.source_rank == 3


def test_restrict_cell_of_shape_two_one():
    decomposition = restrict_cell(cell_of([[1, 2], [3]]))
    assert decomposition.verified, decomposition.problems
    assert [f.shape for f in decomposition.factors] == [(1, 1), (2,)]
    for factor in decomposition.factors:
        assert factor.translate() <= decomposition.source_cell
        assert factor.d_k.rank == 3


def test_restrict_every_cell_of_s4(cells4):
    for cell in cells4.right_cells:
        decomposition = restrict_cell(cell)
        assert decomposition.verified, decomposition.problems
        assert decomposition.to_report().kind == "restrict"


def test_restriction_needs_rank_two():
    with pytest.raises(PreconditionError):
        restrict_cell({Permutation([1])})


def test_cell_module_basis(cells3):
    basis = cell_module_basis(Permutation([2, 1, 3]), cells3)
    assert basis.cell <= basis.down_set
    assert basis.strict_down_set == basis.down_set - basis.cell
    assert Permutation([3, 2, 1]) in basis.strict_down_set


def test_cell_representation_has_no_stray_terms(kl4, cells4):
    for cell in cells4.right_cells:
        matrices, problems = cell_representation(cell, kl4, cells4)
        assert problems == []
        assert set(matrices) == {1, 2, 3}
        assert all(len(rows) == len(cell) for rows in matrices.values())


def test_induced_filtration_of_sign_cell():
    report = induced_cell_filtration({Permutation([2, 1])})
    assert report.verified, report.problems
    assert [layer.shape for layer in report.factors] == [[1, 1, 1], [2, 1]]
    assert all(layer.closure_verified and layer.isomorphism_verified for layer in report.factors)


def test_restricted_filtration_of_s3_cells(cells3):
    for cell in cells3.right_cells:
        report = restricted_cell_filtration(cell)
        assert report.verified, report.problems
        assert report.source_rank == 3


def test_induced_filtration_base_is_hat_module_times_cosets():
    report = induced_cell_filtration({Permutation.identity(2)})
    assert report.verified, report.problems
    # {e} sits on top of S_2, so the hat module is spanned by C_{s1}
    assert report.base_size == 3


def layer_matrices(layer):
    return {
        int(s): [[LaurentPoly([tuple(term) for term in entry]) for entry in row] for row in rows]
        for s, rows in layer.matrices.items()
    }


def test_induced_filtration_layers_carry_their_own_characters():
    report = induced_cell_filtration(cell_of([[1, 2], [3]]))
    assert report.verified, report.problems
    assert [layer.shape for layer in report.factors] == [[2, 1, 1], [2, 2], [3, 1]]
    assert all(layer.isomorphism_verified and not layer.character_skipped for layer in report.factors)
    bottom, _, top = report.factors
    assert bottom.cell_size == top.cell_size == 3
    assert character_check(layer_matrices(bottom), bottom.shape) == ([], True)
    assert character_check(layer_matrices(bottom), top.shape)[0]
    assert character_check(layer_matrices(top), bottom.shape)[0]
