"""Lê numbers of D(q,p) germs recomputed through intersection theory.

The Lê cycle of dimension q - i of the minimal D(p(p+1)/2, p) germ is a
cone, and its multiplicity at the origin equals the number of points cut
out on an incidence variety in P^{p(p+1)/2 - 1} x P^{p - 1}: the locus
where a symmetric p x p matrix of x-coordinates annihilates the
y-direction, sliced by i - 1 generic quadrics in y and enough generic
hyperplanes to reach dimension zero.  The hypersurface classes involved
have bidegrees

    (1,1)  for each of the p rows of the matrix-kernel equations,
    (0,2)  for each of the i - 1 quadrics,
    (1,0)  for each of the p(p+1)/2 - i - 1 generic hyperplanes,

and the resulting intersection number is 2^{i-1} * C(p, p-i), the
multiplicity of the underlying set.  The Lê cycle carries multiplicity
2, so doubling recovers the closed form 2^i * C(p, p-i) of
:mod:`dqp.core`.  This module builds those bidegree systems, evaluates
them through :mod:`dqp.chow`, and expands the generic symmetric
determinant symbolically to verify that the degenerate-matrix locus has
multiplicity exactly p at the origin.

Genericity of the quadrics and hyperplanes is not witnessed: the count
is a statement about classes, and the class of a generic representative
is all the intersection number consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chow import Bidegree, BidegreeSystem, intersection_number_ring
from .errors import BudgetError, ValidationError

__all__ = [
    "LeSystemSpec",
    "SymbolicPolynomial",
    "build_le_system",
    "le_number_via_chow",
    "underlying_multiplicity_via_chow",
    "generic_symmetric_det",
    "det_multiplicity",
    "MAX_DET_SIZE",
]

# Cofactor expansion touches ~p! terms; p = 8 is still instant, larger
# sizes are refused.
MAX_DET_SIZE = 8


@dataclass(frozen=True)
class LeSystemSpec:
    """Bidegree system encoding one Lê cycle of the minimal germ."""

    p: int
    i: int
    system: BidegreeSystem


@dataclass(frozen=True)
class SymbolicPolynomial:
    """Sparse integer polynomial: exponent vector -> nonzero coefficient."""

    variable_count: int
    terms: dict[tuple[int, ...], int]

    @classmethod
    def zero(cls, variable_count: int) -> SymbolicPolynomial:
        return cls(variable_count, {})

    @classmethod
    def variable(cls, variable_count: int, index: int) -> SymbolicPolynomial:
        exponents = [0] * variable_count
        exponents[index] = 1
        return cls(variable_count, {tuple(exponents): 1})

    def __add__(self, other: SymbolicPolynomial) -> SymbolicPolynomial:
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            new = terms.get(expo, 0) + coeff
            if new == 0:
                terms.pop(expo, None)
            else:
                terms[expo] = new
        return SymbolicPolynomial(self.variable_count, terms)

    def __neg__(self) -> SymbolicPolynomial:
        return SymbolicPolynomial(
            self.variable_count, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other: SymbolicPolynomial) -> SymbolicPolynomial:
        return self + (-other)

    def __mul__(self, other: SymbolicPolynomial) -> SymbolicPolynomial:
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(expo, 0) + c1 * c2
                if new == 0:
                    terms.pop(expo, None)
                else:
                    terms[expo] = new
        return SymbolicPolynomial(self.variable_count, terms)

    @property
    def monomial_count(self) -> int:
        return len(self.terms)

    @property
    def min_total_degree(self) -> int:
        if not self.terms:
            raise ValidationError("the zero polynomial has no order at the origin")
        return min(sum(e) for e in self.terms)

    @property
    def max_total_degree(self) -> int:
        if not self.terms:
            raise ValidationError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return not self.terms or self.min_total_degree == self.max_total_degree


def build_le_system(p: int, i: int) -> LeSystemSpec:
    """Bidegree system of the dimension-(q - i) Lê cycle, q = p(p+1)/2.

    Ambient P^{p(p+1)/2 - 1} x P^{p-1}; classes are p copies of (1,1),
    i - 1 copies of (0,2) and p(p+1)/2 - i - 1 copies of (1,0).  Needs
    p >= 2 (for p = 1 the hyperplane count would go negative) and
    1 <= i <= p.
    """
    if not isinstance(p, int) or p < 2:
        raise ValidationError(f"p must satisfy p >= 2 (got p={p})")
    if not isinstance(i, int) or not 1 <= i <= p:
        raise ValidationError(f"i must satisfy 1 <= i <= p (got i={i}, p={p})")
    ambient_n = p * (p + 1) // 2 - 1
    ambient_m = p - 1
    hyperplanes = p * (p + 1) // 2 - i - 1
    classes = (
        (Bidegree(1, 1),) * p
        + (Bidegree(0, 2),) * (i - 1)
        + (Bidegree(1, 0),) * hyperplanes
    )
    system = BidegreeSystem(ambient_n=ambient_n, ambient_m=ambient_m, classes=classes)
    return LeSystemSpec(p=p, i=i, system=system)


def underlying_multiplicity_via_chow(p: int, i: int) -> int:
    """Multiplicity at 0 of the underlying set of the dimension-(q - i) Lê cycle.

    Evaluates the incidence bidegree system; equals 2^{i-1} * C(p, p-i),
    which is half the Lê number and matches the polar multiplicity of
    the degenerate-matrix locus at the same dimension.
    """
    return intersection_number_ring(build_le_system(p, i).system)


def le_number_via_chow(p: int, i: int) -> int:
    """lambda^{q - i} of the minimal germ via the incidence system.

    Twice the underlying multiplicity, the cycle carrying multiplicity 2.
    """
    return 2 * underlying_multiplicity_via_chow(p, i)


def _symmetric_variable_index(i: int, j: int, p: int) -> int:
    """Index of x_{ij} (i <= j, 0-based) in row-major upper-triangle order."""
    return i * p - i * (i - 1) // 2 + (j - i)


def generic_symmetric_det(p: int) -> SymbolicPolynomial:
    """Exact expansion of det of the generic symmetric p x p matrix.

    The p(p+1)/2 variables are the upper-triangle entries x_{ij}, i <= j,
    in row-major order; off-diagonal entries enter as whole variables
    (order at the origin is invariant under rescaling coordinates, so
    nothing is lost by avoiding halves).  Homogeneous of degree p.
    """
    if not isinstance(p, int) or p < 1:
        raise ValidationError(f"p must satisfy p >= 1 (got p={p})")
    if p > MAX_DET_SIZE:
        raise BudgetError(
            f"symbolic determinant refuses p={p} (limit {MAX_DET_SIZE})",
            required=p,
        )
    nvars = p * (p + 1) // 2
    matrix = [
        [
            SymbolicPolynomial.variable(
                nvars, _symmetric_variable_index(min(r, c), max(r, c), p)
            )
            for c in range(p)
        ]
        for r in range(p)
    ]
    return _cofactor_det(matrix, nvars)


def _cofactor_det(
    matrix: list[list[SymbolicPolynomial]], nvars: int
) -> SymbolicPolynomial:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    result = SymbolicPolynomial.zero(nvars)
    for col in range(size):
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = matrix[0][col] * _cofactor_det(minor, nvars)
        result = result + term if col % 2 == 0 else result - term
    return result


def det_multiplicity(p: int) -> int:
    """Order at the origin of the symmetric determinant: its minimal total degree."""
    return generic_symmetric_det(p).min_total_degree
