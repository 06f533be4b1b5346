"""Intersection numbers of hypersurface classes on P^n x P^m.

The cohomology ring of P^n x P^m is Z[h, k] / (h^{n+1}, k^{m+1}), with h
and k the hyperplane classes of the two factors.  A hypersurface of
bidegree (a, b) has class a*h + b*k, and the intersection number of
n + m such hypersurfaces is the coefficient of h^n k^m in the product of
their classes.  Two independent algorithms compute it:

* ``intersection_number_ring`` multiplies the classes one at a time into
  a truncated coefficient array, O((n+1)(m+1)) per class;
* ``intersection_number_fulton`` sums, over all splittings of the class
  list into an n-subset of a-factors and the complementary m-subset of
  b-factors, the product a_{i_1}..a_{i_n} * b_{j_1}..b_{j_m}.

The two must agree on every input; the verification suite cross-checks
them on a seeded random corpus.  The subset sum is exponential in n + m,
so it refuses systems with more than FULTON_SUBSET_LIMIT classes; larger
systems use the ring route only.

Coefficients are arbitrary-precision integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BudgetError, ValidationError

__all__ = [
    "Bidegree",
    "BidegreeSystem",
    "TruncatedBivariatePoly",
    "intersection_number_ring",
    "intersection_number_fulton",
    "FULTON_SUBSET_LIMIT",
]

# combinations(24, 12) is about 2.7M subsets; beyond that the subset sum
# stops being a reasonable cross-check and only the ring route runs.
FULTON_SUBSET_LIMIT = 24


@dataclass(frozen=True)
class Bidegree:
    """The class a*h + b*k of a hypersurface in P^n x P^m."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise ValidationError(f"bidegree entries must be integers (got {self!r})")
        if self.a < 0 or self.b < 0:
            raise ValidationError(
                f"bidegree entries must be nonnegative (got ({self.a},{self.b}))"
            )
        if self.a == 0 and self.b == 0:
            raise ValidationError("bidegree (0,0) does not define a hypersurface")


@dataclass(frozen=True)
class BidegreeSystem:
    """n + m hypersurface classes on P^n x P^m, for a zero-dimensional count."""

    ambient_n: int
    ambient_m: int
    classes: tuple[Bidegree, ...]

    def __post_init__(self):
        if self.ambient_n < 0 or self.ambient_m < 0:
            raise ValidationError("ambient dimensions must be nonnegative")
        expected = self.ambient_n + self.ambient_m
        if len(self.classes) != expected:
            raise ValidationError(
                f"class count must equal ambient_n + ambient_m "
                f"(got {len(self.classes)} classes for n+m={expected})"
            )


@dataclass(frozen=True)
class TruncatedBivariatePoly:
    """Element of Z[h, k] / (h^{n+1}, k^{m+1}) as an (n+1) x (m+1) array.

    ``coeffs[u][v]`` is the coefficient of h^u k^v; powers beyond the
    ambient dimensions are truncated away.
    """

    ambient_n: int
    ambient_m: int
    coeffs: tuple[tuple[int, ...], ...]

    @classmethod
    def unit(cls, ambient_n: int, ambient_m: int) -> TruncatedBivariatePoly:
        rows = [[0] * (ambient_m + 1) for _ in range(ambient_n + 1)]
        rows[0][0] = 1
        return cls(ambient_n, ambient_m, tuple(tuple(r) for r in rows))

    def multiply_class(self, a: int, b: int) -> TruncatedBivariatePoly:
        """Multiply by a*h + b*k, truncating h^{n+1} and k^{m+1} to zero."""
        n, m = self.ambient_n, self.ambient_m
        rows = [[0] * (m + 1) for _ in range(n + 1)]
        for u in range(n + 1):
            for v in range(m + 1):
                c = self.coeffs[u][v]
                if c == 0:
                    continue
                if u + 1 <= n:
                    rows[u + 1][v] += a * c
                if v + 1 <= m:
                    rows[u][v + 1] += b * c
        return TruncatedBivariatePoly(n, m, tuple(tuple(r) for r in rows))

    def coefficient(self, u: int, v: int) -> int:
        return self.coeffs[u][v]


def intersection_number_ring(system: BidegreeSystem) -> int:
    """Coefficient of h^n k^m in the truncated product of the classes."""
    poly = TruncatedBivariatePoly.unit(system.ambient_n, system.ambient_m)
    for cls in system.classes:
        poly = poly.multiply_class(cls.a, cls.b)
    return poly.coefficient(system.ambient_n, system.ambient_m)


def intersection_number_fulton(system: BidegreeSystem) -> int:
    """Subset-sum form of the same intersection number.

    Sums a_{i_1}..a_{i_n} * b_{j_1}..b_{j_m} over all partitions of the
    class list into an increasing n-subset and its complement.
    """
    n, m = system.ambient_n, system.ambient_m
    total = n + m
    if total > FULTON_SUBSET_LIMIT:
        raise BudgetError(
            f"subset enumeration refuses n+m={total} classes "
            f"(limit {FULTON_SUBSET_LIMIT}, {comb(total, n)} subsets); "
            "use the ring algorithm",
            required=comb(total, n),
        )
    a = [cls.a for cls in system.classes]
    b = [cls.b for cls in system.classes]
    result = 0
    for a_subset in combinations(range(total), n):
        term = 1
        chosen = set(a_subset)
        for i in a_subset:
            term *= a[i]
            if term == 0:
                break
        if term == 0:
            continue
        for j in range(total):
            if j not in chosen:
                term *= b[j]
                if term == 0:
                    break
        result += term
    return result
