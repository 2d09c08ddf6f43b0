import pytest
from hypothesis import given, settings, strategies as st

from algebra.errors import PreconditionError, RankMismatchError
from algebra.hecke import (
    Basis,
    HeckeElement,
    bar_involution,
    c_basis_element,
    c_structure_constants_by_expansion,
    c_structure_constants_right,
    cprime_basis_element,
    j_involution,
    structure_constants_right,
    structure_constants_right_by_expansion,
    t_element,
    t_word,
    to_basis,
)
from algebra.ring import Q, V, V_INV, LaurentPoly
from algebra.symgroup import Permutation, all_permutations


def s(m, i):
    return Permutation.generator(m, i)


@st.composite
def t_basis_element(draw, m=3):
    support = draw(st.lists(st.permutations(range(1, m + 1)), max_size=3))
    coeffs = {}
    for images in support:
        coeffs[Permutation(images)] = LaurentPoly({draw(st.integers(-3, 3)): draw(st.integers(-3, 3))})
    return HeckeElement(coeffs, Basis.T, m)


def test_quadratic_relation():
    e = Permutation.identity(3)
    expected = HeckeElement({s(3, 1): Q - 1, e: Q}, Basis.T, 3)
    assert t_word(3, [1, 1]) == expected


def test_braid_relation():
    assert t_word(3, [1, 2, 1]) == t_word(3, [2, 1, 2])
    assert t_word(4, [1, 3]) == t_word(4, [3, 1])


def test_reduced_words_give_t_basis_elements():
    for w in all_permutations(4):
        assert t_word(4, w.reduced_word()) == t_element(w)


def test_kl_basis_of_a_generator(kl3):
    e = Permutation.identity(3)
    assert cprime_basis_element(s(3, 1), kl3) == HeckeElement({s(3, 1): V_INV, e: V_INV}, Basis.T, 3)
    assert c_basis_element(s(3, 1), kl3) == HeckeElement({s(3, 1): V_INV, e: -V}, Basis.T, 3)


def test_kl_bases_are_bar_invariant(kl4):
    for y in all_permutations(4):
        assert bar_involution(cprime_basis_element(y, kl4)) == cprime_basis_element(y, kl4)
        assert bar_involution(c_basis_element(y, kl4)) == c_basis_element(y, kl4)


def test_j_involution_exchanges_the_kl_bases(kl4):
    for y in all_permutations(4):
        sign = -1 if y.length() % 2 else 1
        assert j_involution(cprime_basis_element(y, kl4)) == c_basis_element(y, kl4).scale(sign)


@settings(max_examples=30, deadline=None)
@given(t_basis_element(), t_basis_element(), t_basis_element())
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * HeckeElement.one(3) == a


@settings(max_examples=30, deadline=None)
@given(t_basis_element())
def test_basis_changes_round_trip(h):
    from algebra.kl import get_kl_table

    kl = get_kl_table(3)
    for target in (Basis.TTILDE, Basis.C, Basis.CPRIME):
        converted = to_basis(h, target, kl)
        assert converted.basis == target
        assert to_basis(converted, Basis.T, kl) == h


def test_structure_constants_match_expansion(kl4):
    for y in all_permutations(4):
        for i in (1, 2, 3):
            assert structure_constants_right(y, i, kl4) == structure_constants_right_by_expansion(y, i, kl4)
            assert c_structure_constants_right(y, i, kl4) == c_structure_constants_by_expansion(y, i, kl4)


def test_structure_constants_on_a_descent(kl3):
    assert structure_constants_right(s(3, 1), 1, kl3) == {s(3, 1): Q}


def test_rank_and_basis_mismatch():
    with pytest.raises(RankMismatchError):
        HeckeElement.one(2) * HeckeElement.one(3)
    with pytest.raises(PreconditionError):
        HeckeElement.one(3) + HeckeElement.zero(3, Basis.C)
    with pytest.raises(PreconditionError):
        HeckeElement({})


def test_conversion_to_kl_basis_needs_a_table():
    with pytest.raises(PreconditionError):
        to_basis(HeckeElement.one(3), Basis.C)


def test_json_form():
    payload = t_word(2, [1]).to_json()
    assert payload == {"basis": "T", "m": 2, "terms": [{"w": [2, 1], "c": [[0, 1]]}]}
