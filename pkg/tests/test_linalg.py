from algebra.linalg import EVALUATION_POINTS, exact_rank, is_independent, rank_at
from algebra.ring import ONE, Q, V, V_INV, LaurentPoly


def vanishing_at_every_point():
    poly = ONE
    for point in EVALUATION_POINTS:
        poly = poly * (V - point)
    return poly


def test_rank_drops_at_evaluation_roots():
    vectors = [{"e": vanishing_at_every_point()}]
    assert all(rank_at(vectors, point) == 0 for point in EVALUATION_POINTS)


def test_nonzero_vector_with_roots_at_every_point_is_independent():
    assert is_independent([{"e": vanishing_at_every_point()}])


def test_independent_pair_with_shared_root_factor():
    f = vanishing_at_every_point()
    vectors = [{"a": f}, {"a": f * V_INV, "b": f * Q}]
    assert exact_rank(vectors) == 2
    assert is_independent(vectors)


def test_scalar_multiple_over_a_is_dependent():
    first = {"a": ONE, "b": V}
    second = {"a": V_INV, "b": ONE}
    assert exact_rank([first, second]) == 1
    assert not is_independent([first, second])


def test_dependent_combination_with_laurent_coefficients():
    a = {"x": ONE, "y": Q}
    b = {"y": V_INV, "z": ONE}
    combo = {"x": V, "y": Q * V + V_INV * 2, "z": LaurentPoly.constant(2)}
    assert exact_rank([a, b, combo]) == 2
    assert not is_independent([a, b, combo])


def test_more_vectors_than_coordinates_is_dependent():
    assert not is_independent([{"a": ONE}, {"a": V}])


def test_empty_family_is_independent():
    assert is_independent([])
    assert exact_rank([]) == 0
