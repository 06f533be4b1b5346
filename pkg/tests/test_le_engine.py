from math import comb

import pytest

from dqp.core import le_numbers, minimal_params, polar_multiplicities_sigma1
from dqp.errors import BudgetError, ValidationError
from dqp.le_engine import (
    MAX_DET_SIZE,
    SymbolicPolynomial,
    build_le_system,
    det_multiplicity,
    generic_symmetric_det,
    le_number_via_chow,
    underlying_multiplicity_via_chow,
)


def test_build_le_system_classes():
    spec = build_le_system(3, 2)
    assert spec.system.ambient_n == 5
    assert spec.system.ambient_m == 2
    counts = {}
    for c in spec.system.classes:
        counts[(c.a, c.b)] = counts.get((c.a, c.b), 0) + 1
    assert counts == {(1, 1): 3, (0, 2): 1, (1, 0): 3}
    assert len(spec.system.classes) == 7


def test_build_le_system_rejects_bad_inputs():
    with pytest.raises(ValidationError, match="p must satisfy p >= 2"):
        build_le_system(1, 1)
    with pytest.raises(ValidationError, match="i must satisfy"):
        build_le_system(3, 0)
    with pytest.raises(ValidationError, match="i must satisfy"):
        build_le_system(3, 4)


def test_le_number_via_chow_matches_closed_form():
    for p in range(2, 6):
        q = p * (p + 1) // 2
        table = le_numbers(minimal_params(p)).entries
        for i in range(1, p + 1):
            assert le_number_via_chow(p, i) == 2**i * comb(p, p - i)
            assert le_number_via_chow(p, i) == table[q - i]


def test_underlying_multiplicity_is_half_le_and_polar_entry():
    for p in range(2, 6):
        q = p * (p + 1) // 2
        polar = polar_multiplicities_sigma1(p).entries
        for i in range(1, p + 1):
            mult = underlying_multiplicity_via_chow(p, i)
            assert 2 * mult == le_number_via_chow(p, i)
            assert mult == polar[q - i]


def test_multiplicity_of_determinantal_slice_is_p():
    'the i=1 system recovers the multiplicity of the det hypersurface'
    for p in range(2, 7):
        assert underlying_multiplicity_via_chow(p, 1) == p


def test_symbolic_polynomial_arithmetic():
    x = SymbolicPolynomial.variable(2, 0)
    y = SymbolicPolynomial.variable(2, 1)
    s = x + y
    assert s.monomial_count == 2
    square = s * s
    assert square.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (square - square).monomial_count == 0
    assert (-x).terms == {(1, 0): -1}
    assert square.is_homogeneous()
    assert not (square + x).is_homogeneous()
    assert (square + x).min_total_degree == 1
    assert (square + x).max_total_degree == 2


def test_zero_polynomial_has_no_degree():
    zero = SymbolicPolynomial.zero(3)
    with pytest.raises(ValidationError):
        zero.min_total_degree


def test_det_p1_p2():
    assert generic_symmetric_det(1).terms == {(1,): 1}
    # variables x11, x12, x22: det = x11 x22 - x12^2
    assert generic_symmetric_det(2).terms == {(1, 0, 1): 1, (0, 2, 0): -1}


def test_det_p3_expansion():
    'five distinct monomials; the off-diagonal product carries coefficient 2'
    det = generic_symmetric_det(3)
    # variables x11 x12 x13 x22 x23 x33
    assert det.terms == {
        (1, 0, 0, 1, 0, 1): 1,
        (1, 0, 0, 0, 2, 0): -1,
        (0, 2, 0, 0, 0, 1): -1,
        (0, 1, 1, 0, 1, 0): 2,
        (0, 0, 2, 1, 0, 0): -1,
    }
    assert det.monomial_count == 5
    assert det.is_homogeneous()


@pytest.mark.parametrize("p", range(1, 6))
def test_det_matches_sympy(p):
    'independent oracle: sympy symbolic determinant of the same matrix'
    sympy = pytest.importorskip("sympy")
    names = [
        sympy.Symbol(f"x{i}{j}") for i in range(p) for j in range(i, p)
    ]
    index = {}
    pos = 0
    for i in range(p):
        for j in range(i, p):
            index[(i, j)] = pos
            pos += 1
    matrix = sympy.Matrix(
        p, p, lambda r, c: names[index[(min(r, c), max(r, c))]]
    )
    expanded = sympy.expand(matrix.det(method="berkowitz"))
    poly = sympy.Poly(expanded, *names)
    expected = {tuple(monom): int(coeff) for monom, coeff in poly.terms()}
    assert generic_symmetric_det(p).terms == expected


def test_det_multiplicity_values():
    for p in range(1, 7):
        assert det_multiplicity(p) == p


def test_det_budget():
    with pytest.raises(BudgetError):
        generic_symmetric_det(MAX_DET_SIZE + 1)
    with pytest.raises(ValidationError):
        generic_symmetric_det(0)
