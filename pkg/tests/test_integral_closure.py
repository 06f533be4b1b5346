import random
from fractions import Fraction

import pytest

from dqp.errors import BudgetError, ValidationError
from dqp.integral_closure import (
    FACET_VARIABLE_LIMIT,
    Monomial,
    MonomialIdeal,
    WeightVector,
    blowup_fiber_bound,
    default_witnesses,
    in_integral_closure_facets,
    in_integral_closure_newton,
    in_integral_closure_valuative,
    is_reduction,
    newton_facet_normals,
    power_ideal,
    reduction_generator_count,
)


def ideal(*exponent_rows):
    width = len(exponent_rows[0])
    return MonomialIdeal(width, tuple(Monomial(tuple(e)) for e in exponent_rows))


def maximal_ideal(p):
    return ideal(*[[int(i == j) for j in range(p)] for i in range(p)])


def squares_ideal(p):
    return ideal(*[[2 * int(i == j) for j in range(p)] for i in range(p)])


def random_ideal(rng, max_vars=4, max_expo=5):
    nvars = rng.randint(1, max_vars)
    rows = [
        [rng.randint(0, max_expo) for _ in range(nvars)]
        for _ in range(rng.randint(1, 5))
    ]
    return ideal(*rows)


def test_monomial_validation():
    with pytest.raises(ValidationError):
        Monomial(())
    with pytest.raises(ValidationError):
        Monomial((1, -1))
    assert Monomial((1, 2)).total_degree == 3
    assert Monomial((1, 0)).divides(Monomial((2, 1)))
    assert not Monomial((1, 2)).divides(Monomial((2, 1)))
    with pytest.raises(ValidationError):
        Monomial((1,)).divides(Monomial((1, 1)))


def test_ideal_minimalization():
    i = ideal([1, 0], [2, 0], [0, 2], [1, 1])
    assert [g.exponents for g in i.generators] == [(1, 0), (0, 2)]
    # duplicates collapse
    j = ideal([1, 1], [1, 1])
    assert len(j.generators) == 1
    assert i == ideal([0, 2], [1, 0])


def test_ideal_validation():
    with pytest.raises(ValidationError):
        MonomialIdeal(2, ())
    with pytest.raises(ValidationError):
        MonomialIdeal(2, (Monomial((1, 0, 0)),))
    with pytest.raises(ValidationError):
        MonomialIdeal(0, (Monomial((1,)),))


def test_contains_monomial():
    j = squares_ideal(2)
    assert j.contains_monomial(Monomial((2, 1)))
    assert not j.contains_monomial(Monomial((1, 1)))
    with pytest.raises(ValidationError):
        j.contains_monomial(Monomial((1,)))


def test_weight_vector():
    w = WeightVector((1, Fraction(1, 2)))
    assert w.pairing((2, 4)) == 4
    with pytest.raises(ValidationError):
        WeightVector((0, 0))
    with pytest.raises(ValidationError):
        WeightVector((-1, 2))


def test_power_ideal():
    m2 = power_ideal(maximal_ideal(2), 2)
    assert [g.exponents for g in m2.generators] == [(2, 0), (1, 1), (0, 2)]
    m3 = power_ideal(maximal_ideal(3), 2)
    assert len(m3.generators) == 6
    same = power_ideal(squares_ideal(2), 1)
    assert same == squares_ideal(2)
    with pytest.raises(ValidationError):
        power_ideal(maximal_ideal(2), 0)


def test_newton_membership_basic():
    j = squares_ideal(2)
    assert in_integral_closure_newton(j, Monomial((1, 1)))
    assert not in_integral_closure_newton(j, Monomial((1, 0)))
    k = ideal([3, 0], [0, 3])
    assert in_integral_closure_newton(k, Monomial((2, 2)))
    assert not in_integral_closure_newton(k, Monomial((2, 0)))
    assert not in_integral_closure_newton(k, Monomial((1, 1)))


def test_newton_membership_generators_and_multiples():
    for p in range(1, 5):
        j = squares_ideal(p)
        for g in j.generators:
            assert in_integral_closure_newton(j, g)
            bumped = Monomial(tuple(e + 1 for e in g.exponents))
            assert in_integral_closure_newton(j, bumped)


def test_newton_dimension_mismatch():
    with pytest.raises(ValidationError):
        in_integral_closure_newton(squares_ideal(2), Monomial((1, 1, 1)))


def test_facet_normals_of_square_ideal():
    normals = newton_facet_normals(squares_ideal(2))
    assert normals == [((0, 1), 0), ((1, 0), 0), ((1, 1), 2)]


def test_facet_route_agrees_on_knowns():
    k = ideal([3, 0], [0, 3])
    assert in_integral_closure_facets(k, Monomial((2, 2)))
    assert not in_integral_closure_facets(k, Monomial((1, 1)))


def test_facet_budget():
    wide = ideal([1, 0, 0, 0, 0], [0, 1, 0, 0, 0])
    with pytest.raises(BudgetError):
        newton_facet_normals(wide)
    assert FACET_VARIABLE_LIMIT == 4


def test_newton_vs_facets_seeded():
    for case in range(150):
        rng = random.Random(f"test:closure:{case}")
        i = random_ideal(rng)
        m = Monomial(tuple(rng.randint(0, 7) for _ in range(i.variable_count)))
        assert in_integral_closure_newton(i, m) == in_integral_closure_facets(i, m)


def test_valuative_examples():
    j = squares_ideal(2)
    witnesses = [WeightVector(w) for w in ((1, 0), (0, 1), (1, 1), (2, 1))]
    assert in_integral_closure_valuative(j, Monomial((1, 1)), witnesses)
    assert not in_integral_closure_valuative(
        j, Monomial((1, 0)), [WeightVector((1, 1))]
    )
    for g in j.generators:
        assert in_integral_closure_valuative(j, g, default_witnesses(2))


def test_valuative_dimension_mismatch():
    with pytest.raises(ValidationError):
        in_integral_closure_valuative(
            squares_ideal(2), Monomial((1, 1)), [WeightVector((1, 1, 1))]
        )


def test_default_witnesses_shape():
    witnesses = default_witnesses(3, seed=7)
    assert len(witnesses) == 3 + 1 + 50
    assert witnesses[0].weights == (Fraction(1), Fraction(0), Fraction(0))
    assert witnesses[3].weights == (Fraction(1), Fraction(1), Fraction(1))
    assert default_witnesses(3, seed=7) == witnesses


def test_witnesses_never_refute_members():
    for case in range(60):
        rng = random.Random(f"test:closure-wit:{case}")
        i = random_ideal(rng)
        m = Monomial(tuple(rng.randint(0, 7) for _ in range(i.variable_count)))
        if in_integral_closure_newton(i, m):
            assert in_integral_closure_valuative(
                i, m, default_witnesses(i.variable_count, seed=case)
            )


def test_membership_monotone_under_enlargement():
    for case in range(60):
        rng = random.Random(f"test:closure-mono:{case}")
        i = random_ideal(rng)
        m = Monomial(tuple(rng.randint(0, 6) for _ in range(i.variable_count)))
        if not in_integral_closure_newton(i, m):
            continue
        extra = tuple(
            Monomial(tuple(rng.randint(0, 5) for _ in range(i.variable_count)))
            for _ in range(2)
        )
        bigger = MonomialIdeal(i.variable_count, i.generators + extra)
        assert in_integral_closure_newton(bigger, m)


def test_is_reduction_examples():
    squares = squares_ideal(2)
    full = power_ideal(maximal_ideal(2), 2)
    assert is_reduction(squares, full)
    assert is_reduction(full, full)
    assert not is_reduction(ideal([2, 0]), squares)
    with pytest.raises(ValidationError):
        is_reduction(squares, ideal([2, 0, 0]))


def test_square_reduction_family():
    for p in range(1, 7):
        assert is_reduction(squares_ideal(p), power_ideal(maximal_ideal(p), 2))


def test_reduction_fails_when_not_contained():
    'sub must sit inside full as an ideal, not only integrally'
    sub = ideal([1, 1])
    full = squares_ideal(2)
    assert not is_reduction(sub, full)


def test_reduction_counts():
    assert reduction_generator_count(1) == 2
    assert reduction_generator_count(2) == 4
    assert reduction_generator_count(3) == 6
    assert blowup_fiber_bound(1) == 1
    assert blowup_fiber_bound(2) == 3
    assert blowup_fiber_bound(3) == 5
    with pytest.raises(ValidationError):
        reduction_generator_count(0)
