import itertools

import pytest

from dqp.core import reduced_euler_characteristic
from dqp.errors import BudgetError, ValidationError
from dqp.ffcount import (
    NormalFormSpec,
    count_nonzero_y_slice,
    count_points,
    counting_polynomial,
    eval_normal_form,
    evaluate_polynomial,
    polynomial_string,
    predicted_count,
)


def test_spec_layout():
    spec = NormalFormSpec(p=2, q1=1)
    assert spec.matrix_variable_count == 3
    assert spec.n == 6
    params = spec.params
    assert (params.n, params.q, params.p) == (6, 4, 2)
    assert params.k == 0


def test_spec_validation():
    with pytest.raises(ValidationError):
        NormalFormSpec(p=0)
    with pytest.raises(ValidationError):
        NormalFormSpec(p=1, q1=-1)


def test_eval_normal_form():
    assert eval_normal_form(NormalFormSpec(p=1), (1, 1), 3) == 1
    assert eval_normal_form(NormalFormSpec(p=2), (1, 0, 1, 1, 2), 5) == 0
    # inert coordinate is ignored
    assert eval_normal_form(NormalFormSpec(p=1, q1=1), (2, 4, 1), 5) == 2


def test_eval_normal_form_brute_force_cross_check():
    'the vectorized counter agrees with pointwise evaluation on a tiny case'
    spec = NormalFormSpec(p=2)
    prime = 3
    direct = sum(
        1
        for point in itertools.product(range(prime), repeat=spec.n)
        if eval_normal_form(spec, point, prime) == 1
    )
    assert direct == count_points(spec, prime).observed_count == 72


def test_eval_validation():
    with pytest.raises(ValidationError, match="coordinates"):
        eval_normal_form(NormalFormSpec(p=1), (1, 1, 1), 3)
    with pytest.raises(ValidationError, match="odd prime"):
        eval_normal_form(NormalFormSpec(p=1), (1, 1), 2)
    with pytest.raises(ValidationError, match="odd prime"):
        eval_normal_form(NormalFormSpec(p=1), (1, 1), 9)


def test_predicted_count_values():
    assert predicted_count(NormalFormSpec(p=1), 3) == 2
    assert predicted_count(NormalFormSpec(p=2), 3) == 72
    assert predicted_count(NormalFormSpec(p=2, q1=1), 3) == 216


def test_count_p1_all_small_primes():
    for prime in (3, 5, 7, 11):
        report = count_points(NormalFormSpec(p=1), prime)
        assert report.observed_count == prime - 1
        assert report.agree


def test_count_p2_values():
    assert count_points(NormalFormSpec(p=2), 3).observed_count == 72
    assert count_points(NormalFormSpec(p=2), 5).observed_count == 600
    assert count_points(NormalFormSpec(p=2, q1=1), 3).observed_count == 216


def test_count_report_fields():
    report = count_points(NormalFormSpec(p=2), 3, target=2)
    assert report.observed_count == 72
    assert report.enumerated == 3**5
    assert report.target == 2
    assert report.agree


def test_target_independence_exhaustive():
    for p, q1 in ((1, 0), (1, 1), (2, 0)):
        spec = NormalFormSpec(p=p, q1=q1)
        for prime in (3, 5, 7):
            counts = {
                count_points(spec, prime, target=t).observed_count
                for t in range(1, prime)
            }
            assert len(counts) == 1


def test_count_budget_refusal():
    with pytest.raises(BudgetError) as info:
        count_points(NormalFormSpec(p=3), 11, budget=10**6)
    assert info.value.required == 11**9


def test_count_rejects_zero_target():
    with pytest.raises(ValidationError, match="nonzero"):
        count_points(NormalFormSpec(p=1), 3, target=0)
    with pytest.raises(ValidationError, match="nonzero"):
        count_points(NormalFormSpec(p=1), 3, target=3)


def test_jobs_do_not_change_the_count():
    expected = count_points(NormalFormSpec(p=2), 5, jobs=1).observed_count
    for jobs in (2, 3, 8):
        assert count_points(NormalFormSpec(p=2), 5, jobs=jobs).observed_count == expected


def test_slice_partition_sums():
    spec = NormalFormSpec(p=2)
    prime = 5
    whole = count_nonzero_y_slice(spec, prime, 1, 0, prime**2)
    for split in (1, 4, 7, 25):
        edges = [round(j * prime**2 / split) for j in range(split + 1)]
        total = sum(
            count_nonzero_y_slice(spec, prime, 1, lo, hi)
            for lo, hi in zip(edges, edges[1:])
        )
        assert total == whole


def test_slice_validation():
    spec = NormalFormSpec(p=1)
    with pytest.raises(ValidationError):
        count_nonzero_y_slice(spec, 3, 1, 2, 1)
    with pytest.raises(ValidationError):
        count_nonzero_y_slice(spec, 3, 1, 0, 4)


def test_counting_polynomial_values():
    assert counting_polynomial(NormalFormSpec(p=1)) == (-1, 1)
    assert counting_polynomial(NormalFormSpec(p=2)) == (0, 0, -1, 0, 1)
    assert counting_polynomial(NormalFormSpec(p=2, q1=1)) == (0, 0, 0, -1, 0, 1)


def test_counting_polynomial_properties():
    for p in (1, 2, 3):
        for q1 in (0, 1):
            spec = NormalFormSpec(p=p, q1=q1)
            coeffs = counting_polynomial(spec)
            assert len(coeffs) == spec.n
            assert coeffs[-1] == 1
            assert evaluate_polynomial(coeffs, 1) == 0
            # chi(M) = 0 so the reduced Euler characteristic is -1
            assert reduced_euler_characteristic(spec.params) == -1
            for prime in (3, 5, 7):
                assert evaluate_polynomial(coeffs, prime) == predicted_count(
                    spec, prime
                )


def test_counting_polynomial_matches_sympy_factorization():
    sympy = pytest.importorskip("sympy")
    t = sympy.Symbol("t")
    for p in (1, 2, 3):
        spec = NormalFormSpec(p=p)
        coeffs = counting_polynomial(spec)
        ours = sum(c * t**k for k, c in enumerate(coeffs))
        closed = sympy.expand((t**p - 1) * t ** (spec.n - p - 1))
        assert sympy.simplify(ours - closed) == 0


def test_polynomial_string():
    assert polynomial_string((-1, 1)) == "t - 1"
    assert polynomial_string((0, 0, -1, 0, 1)) == "t^4 - t^2"
    assert polynomial_string((0,)) == "0"
    assert polynomial_string((2, 0, 3)) == "3*t^2 + 2"
