import pytest
from hypothesis import given, strategies as st

from algebra.errors import PreconditionError, RankMismatchError
from algebra.symgroup import (
    Permutation,
    all_permutations,
    bruhat_leq,
    compose,
    coset_rep_x_star,
    factor_through_parabolic,
    j_of_composition,
    longest_element,
    parabolic,
    prefixes,
    split_left_coset,
    x_cycle,
)


def s(m, i):
    return Permutation.generator(m, i)


@st.composite
def permutation(draw, m=4):
    return Permutation(draw(st.permutations(range(1, m + 1))))


def test_rejects_non_permutations():
    with pytest.raises(PreconditionError):
        Permutation([1, 1, 2])


def test_compose_examples():
    e = Permutation.identity(3)
    assert compose(s(3, 1), s(3, 1)) == e
    assert compose(s(3, 2), s(3, 1)).images == (2, 3, 1)
    assert compose(s(3, 1), s(3, 2)).images == (3, 1, 2)
    w = Permutation([3, 1, 2])
    assert compose(w, e) == w


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatchError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_length_examples():
    assert Permutation.identity(4).length() == 0
    assert longest_element(3).length() == 3
    assert compose(s(3, 1), s(3, 2)).length() == 2


def test_bruhat_examples():
    e = Permutation.identity(3)
    for w in all_permutations(3):
        assert bruhat_leq(e, w)
        assert bruhat_leq(w, w)
    assert not bruhat_leq(s(3, 1), s(3, 2))
    assert bruhat_leq(s(3, 1), longest_element(3))


def test_bruhat_order_is_strictly_monotone_in_length():
    elements = all_permutations(4)
    for x in elements:
        for y in elements:
            if x != y and bruhat_leq(x, y):
                assert x.length() < y.length()
                assert not bruhat_leq(y, x)


def test_parabolic_j1_in_s3():
    data = parabolic(3, frozenset({1}))
    assert data.longest == s(3, 1)
    assert set(data.coset_reps) == {Permutation.identity(3), s(3, 2), compose(s(3, 2), s(3, 1))}


def test_parabolic_extremes():
    m = 4
    trivial = parabolic(m, frozenset())
    assert len(trivial.coset_reps) == 24
    assert trivial.longest == Permutation.identity(m)
    full = parabolic(m, frozenset({1, 2, 3}))
    assert full.coset_reps == (Permutation.identity(m),)
    assert full.longest == longest_element(m)


def test_parabolic_longest_is_an_involution():
    for J in (frozenset({1}), frozenset({1, 3}), frozenset({2, 3})):
        w_j = parabolic(4, J).longest
        assert compose(w_j, w_j) == Permutation.identity(4)


def test_parabolic_factorisation_is_unique_and_length_additive():
    for J in (frozenset({1}), frozenset({2}), frozenset({1, 3}), frozenset({1, 2})):
        data = parabolic(4, J)
        seen = set()
        for w in all_permutations(4):
            u, x = factor_through_parabolic(w, J)
            assert u in data.subgroup
            assert x in data.coset_reps
            assert compose(u, x) == w
            assert u.length() + x.length() == w.length()
            seen.add((u, x))
        assert len(seen) == 24


def test_j_of_composition_examples():
    assert j_of_composition((2, 1)) == frozenset({1})
    assert j_of_composition((4,)) == frozenset({1, 2, 3})
    assert j_of_composition((1, 1, 1)) == frozenset()
    assert j_of_composition((1, 2, 1)) == frozenset({2})


def test_prefixes_examples():
    e = Permutation.identity(3)
    assert prefixes(e) == {e}
    assert prefixes(s(3, 1)) == {e, s(3, 1)}
    x1 = compose(s(3, 2), s(3, 1))
    assert prefixes(x1) == {e, s(3, 2), x1}


@given(permutation())
def test_prefixes_are_prefix_closed(w):
    found = prefixes(w)
    for d in found:
        assert prefixes(d) <= found
        assert d.length() + compose(d.inverse(), w).length() == w.length()


def test_coset_reps_prime_and_star():
    primes, stars = coset_rep_x_star(2)
    assert primes == (compose(s(3, 2), s(3, 1)), s(3, 2), Permutation.identity(3))
    assert all(compose(x, d) == Permutation.identity(3) for x, d in zip(primes, stars))
    assert len(coset_rep_x_star(4)[0]) == 5
    assert x_cycle(3, 4) == Permutation.identity(4)


@given(permutation())
def test_split_left_coset(w):
    i, d, u = split_left_coset(w)
    assert u(4) == 4
    assert compose(d, u) == w
    assert w.position(4) == i
    assert d == x_cycle(3, i).inverse()


@given(permutation())
def test_inverse_and_length(w):
    assert w.inverse().inverse() == w
    assert w.inverse().length() == w.length()
    assert Permutation.from_word(4, w.reduced_word()) == w
    assert len(w.reduced_word()) == w.length()


@given(permutation(), st.integers(1, 3))
def test_descents(w, i):
    assert w.is_right_descent(i) == (w.times_generator(i).length() < w.length())
    assert w.is_left_descent(i) == (w.generator_times(i).length() < w.length())
    assert w.times_generator(i) == compose(w, s(4, i))
    assert w.generator_times(i) == compose(s(4, i), w)


def test_embed_and_restrict():
    w = Permutation([2, 1])
    big = w.embed(4)
    assert big.images == (2, 1, 3, 4)
    assert big.restrict(2) == w
    with pytest.raises(PreconditionError):
        Permutation([1, 3, 2]).restrict(2)
