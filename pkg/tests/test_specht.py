import pytest

from algebra.errors import PreconditionError, VerificationError
from algebra.hecke import Basis, HeckeElement, c_basis_element, cprime_basis_element
from algebra.ring import LaurentPoly, v_power
from algebra.specht import (
    admissible_pairs,
    branching_oracle,
    induced_specht_filtration,
    kernel_identity,
    restricted_specht_filtration,
    specht_basis,
    x_y_elements,
)
from algebra.symgroup import Permutation


def test_admissible_pairs_of_three():
    pairs = admissible_pairs(3)
    assert ((2, 1), (2, 1)) in pairs
    assert ((1, 2), (2, 1)) in pairs
    assert ((3,), (1, 1, 1)) in pairs
    assert ((2, 1), (1, 2)) in pairs
    assert all(sum(lam) == 3 and sum(mu) == 3 for lam, mu in pairs)


def test_specht_basis_sizes():
    for lam, mu in admissible_pairs(3):
        module = specht_basis(lam, mu)
        assert module.independent
        assert len(module.cell) == module.expected_size
        assert module.problems == []


def test_specht_basis_rejects_inadmissible_pairs():
    with pytest.raises(PreconditionError, match="lambda''=mu' required"):
        specht_basis((2, 1), (3,))


def test_induced_filtration_of_two_one():
    report = induced_specht_filtration((2, 1), (2, 1))
    assert report.verified, report.problems
    assert [layer.shape for layer in report.chain] == [[2, 1, 1], [2, 2], [3, 1]]
    assert report.basis_size == report.expected_basis_size == 8
    assert report.independent
    assert report.branching_oracle == [[2, 1, 1], [2, 2], [3, 1]]


def test_restricted_filtration_of_two_one():
    report = restricted_specht_filtration((2, 1), (2, 1))
    assert report.verified, report.problems
    assert [layer.shape for layer in report.chain] == [[1, 1], [2]]
    assert all(layer.d_k is not None for layer in report.chain)
    assert report.model_dump(by_alias=True)["lambda"] == [2, 1]


def test_filtrations_for_every_pair_of_three():
    for lam, mu in admissible_pairs(3):
        assert induced_specht_filtration(lam, mu).verified
        assert restricted_specht_filtration(lam, mu).verified


def test_kernel_identity():
    for lam, mu in admissible_pairs(3):
        report = kernel_identity(lam, mu)
        assert report.passed, report.counterexamples
        assert not report.experimental


def test_branching_oracle():
    assert branching_oracle((2, 1), "induce") == [(2, 1, 1), (2, 2), (3, 1)]
    assert branching_oracle((2, 1), "restrict") == [(1, 1), (2,)]


def test_x_y_elements_of_two_one(kl3):
    x, y = x_y_elements((2, 1), 3, kl3)
    e, s1 = Permutation.identity(3), Permutation((2, 1, 3))
    assert x == HeckeElement({e: 1, s1: 1}, Basis.T, 3)
    assert y == HeckeElement({e: 1, s1: LaurentPoly.monomial(-2, -1)}, Basis.T, 3)


def test_x_y_elements_trivial_parabolic():
    x, y = x_y_elements((1, 1, 1), 3)
    assert x == y == HeckeElement.one(3)


def test_x_y_elements_match_kl_bases_in_s4(kl4):
    x, y = x_y_elements((2, 2), 4, kl4)
    e, s1, s3 = Permutation.identity(4), Permutation([2, 1, 3, 4]), Permutation([1, 2, 4, 3])
    top = Permutation([2, 1, 4, 3])
    assert x == HeckeElement({e: 1, s1: 1, s3: 1, top: 1}, Basis.T, 4)
    minus_q_inv = LaurentPoly.monomial(-2, -1)
    assert y == HeckeElement({e: 1, s1: minus_q_inv, s3: minus_q_inv, top: LaurentPoly.monomial(-4)}, Basis.T, 4)
    assert x == cprime_basis_element(top, kl4).scale(v_power(2))
    assert y == c_basis_element(top, kl4).scale(v_power(-2))


def test_x_y_elements_reject_wrong_size():
    with pytest.raises(VerificationError):
        x_y_elements((2, 1), 4)
