"""Closed-form invariants of D(q,p) hypersurface singularities.

A germ f : (C^n, 0) -> (C, 0) with a non-isolated singularity of type
D(q,p) has, after a change of coordinates, the normal form

    f(x, y) = sum_{i<=j} x_{ij} y_i y_j + y_{p+1}^2 + ... + y_{p+k}^2,

where the x_{ij} fill a symmetric p x p matrix.  Here q is the dimension
of the singular locus, n = p + k + q is the ambient dimension, k is the
number of square terms and q1 = q - p(p+1)/2 is the number of inert
coordinates that do not appear in the normal form at all.

This module holds the parameter bookkeeping and every invariant that is
a closed form in (n, q, p):

* the dimension of the sphere the Milnor fiber is homotopy equivalent to,
  and its reduced Euler characteristic;
* the table of Lê numbers lambda^d, with the two fixed Lê cycles as
  metadata;
* the polar multiplicities at the origin of the hypersurface of
  degenerate symmetric p x p matrices (kernel rank >= 1);
* the Euler obstructions of that determinantal hypersurface and of the
  D(q,p) hypersurface itself;
* the alternating-sum identity tying the Lê numbers to the reduced Euler
  characteristic of the Milnor fiber.

All arithmetic is exact arbitrary-precision integer arithmetic.  Tables
are dicts indexed by dimension, zero-filled over their whole range, so
consumers never do index arithmetic.  Every value is immutable after
construction and every function is pure, so concurrent use needs no
locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CheckError, ValidationError

__all__ = [
    "DqpParams",
    "FixedCycle",
    "LeNumberTable",
    "PolarMultiplicityTable",
    "validate_params",
    "minimal_params",
    "milnor_sphere_dimension",
    "reduced_euler_characteristic",
    "le_numbers",
    "polar_multiplicities_sigma1",
    "euler_obstruction_sigma1",
    "euler_obstruction_hypersurface",
    "verify_massey_identity",
]


@dataclass(frozen=True)
class DqpParams:
    """The triple (n, q, p) defining a D(q,p) germ in C^n.

    n is the ambient dimension, q the dimension of the singular locus
    and p the size of the symmetric matrix in the normal form.  The
    derived counts are k = n - q - p square terms and q1 = q - p(p+1)/2
    inert coordinates.  Construction validates:

        p >= 1,   q >= p(p+1)/2,   n >= q + p,

    which is equivalent to k >= 0 and q1 >= 0, with n = p + k + q
    holding exactly by definition of k.
    """

    n: int
    q: int
    p: int

    def __post_init__(self):
        for name, value in (("n", self.n), ("q", self.q), ("p", self.p)):
            if not isinstance(value, int):
                raise ValidationError(f"{name} must be an integer (got {value!r})")
        if self.p < 1:
            raise ValidationError(f"p must satisfy p >= 1 (got p={self.p})")
        bound = self.p * (self.p + 1) // 2
        if self.q < bound:
            raise ValidationError(
                f"q must satisfy q >= p(p+1)/2 (got q={self.q}, p(p+1)/2={bound})"
            )
        if self.n < self.q + self.p:
            raise ValidationError(
                f"n must satisfy n >= q + p (got n={self.n}, q + p={self.q + self.p})"
            )

    @property
    def k(self) -> int:
        """Number of square terms in the normal form."""
        return self.n - self.q - self.p

    @property
    def q1(self) -> int:
        """Number of inert coordinates absent from the normal form."""
        return self.q - self.p * (self.p + 1) // 2


@dataclass(frozen=True)
class FixedCycle:
    """One fixed Lê cycle: a named cycle with a dimension and a multiplicity."""

    name: str
    dimension: int
    cycle_multiplicity: int


@dataclass(frozen=True)
class LeNumberTable:
    """Lê numbers of a D(q,p) germ, indexed by dimension d over 0..q.

    ``entries[d]`` is lambda^d; dimensions carrying no Lê cycle hold 0.
    ``fixed_cycles`` lists the exactly two fixed Lê cycles: the singular
    locus itself (a smooth q-plane, cycle multiplicity 1) and its slice
    by the vanishing of the symmetric determinant (dimension q - 1,
    cycle multiplicity 2).  The multiplicities come from the transversal
    singularity type at a generic point of each cycle (a Morse point,
    respectively a Whitney umbrella) and are fixed data, not computed.
    """

    params: DqpParams
    entries: dict[int, int]
    fixed_cycles: tuple[FixedCycle, FixedCycle]


@dataclass(frozen=True)
class PolarMultiplicityTable:
    """Polar multiplicities m^d at the zero matrix of the degenerate locus.

    The ambient space is the space C^{p(p+1)/2} of symmetric p x p
    matrices; the locus is the determinant hypersurface (kernel rank
    >= 1), of dimension p(p+1)/2 - 1.  ``entries[d]`` is the polar
    multiplicity of the d-dimensional polar variety, zero-filled over
    0..p(p+1)/2 - 1.
    """

    p: int
    entries: dict[int, int]


def validate_params(n: int, q: int, p: int) -> DqpParams:
    """Validate raw integers (n, q, p) and return the parameter triple.

    Raises ValidationError naming the violated inequality otherwise.
    """
    return DqpParams(n, q, p)


def minimal_params(p: int) -> DqpParams:
    """Parameters of the minimal D(q,p) germ: q = p(p+1)/2, k = 0, q1 = 0."""
    q = p * (p + 1) // 2
    return validate_params(q + p, q, p)


def milnor_sphere_dimension(params: DqpParams) -> int:
    """Dimension of the sphere the Milnor fiber is homotopy equivalent to.

    For the minimal germ the fiber {f = 1} fibers over C^p minus the
    origin with contractible affine-hyperplane fibers, so it retracts to
    S^{2p-1}; inert coordinates change nothing and each square term
    suspends once.  The result is p + n - q - 1.
    """
    return params.p + params.n - params.q - 1


def reduced_euler_characteristic(params: DqpParams) -> int:
    """Reduced Euler characteristic of the Milnor fiber: (-1)^(p+n-q-1)."""
    return (-1) ** milnor_sphere_dimension(params)


def le_numbers(params: DqpParams) -> LeNumberTable:
    """The full Lê number table of a D(q,p) germ.

    lambda^{q-i} = 2^i * C(p, p-i) for 0 <= i <= p and lambda^d = 0 for
    every other dimension d in 0..q.  The inert coordinates only shift
    the cycle dimensions up by q1 and the square terms leave the cycles
    unchanged, so the table depends on (q, p) alone.
    """
    q, p = params.q, params.p
    entries = {d: 0 for d in range(q + 1)}
    for i in range(p + 1):
        entries[q - i] = 2**i * comb(p, p - i)
    cycles = (
        FixedCycle(name="singular locus", dimension=q, cycle_multiplicity=1),
        FixedCycle(name="determinantal locus", dimension=q - 1, cycle_multiplicity=2),
    )
    return LeNumberTable(params=params, entries=entries, fixed_cycles=cycles)


def polar_multiplicities_sigma1(p: int) -> PolarMultiplicityTable:
    """Polar multiplicities at 0 of the degenerate symmetric matrices.

    m^{p(p+1)/2 - i - 1} = 2^i * C(p, p-i-1) for 0 <= i < p, zero at
    every other dimension.  Each entry is exactly half the Lê number of
    the minimal D(p(p+1)/2, p) germ at the same dimension, because the
    corresponding Lê cycles carry multiplicity 2.
    """
    if not isinstance(p, int) or p < 1:
        raise ValidationError(f"p must satisfy p >= 1 (got p={p})")
    top = p * (p + 1) // 2 - 1
    entries = {d: 0 for d in range(top + 1)}
    for i in range(p):
        entries[top - i] = 2**i * comb(p, p - i - 1)
    return PolarMultiplicityTable(p=p, entries=entries)


def euler_obstruction_sigma1(p: int) -> int:
    """Euler obstruction at 0 of the degenerate symmetric p x p matrices.

    Computed as the alternating sum of the polar multiplicities, signed
    so the top-dimensional term is positive, then checked against the
    parity closed form: 0 for p even, 1 for p odd.
    """
    table = polar_multiplicities_sigma1(p)
    top = p * (p + 1) // 2 - 1
    obstruction = sum(
        (-1) ** (top - d) * value for d, value in table.entries.items()
    )
    expected = p % 2
    if obstruction != expected:
        raise CheckError(
            f"polar alternating sum {obstruction} disagrees with parity value "
            f"{expected} for p={p}"
        )
    return obstruction


def euler_obstruction_hypersurface(params: DqpParams) -> int:
    """Euler obstruction at 0 of the hypersurface cut out by a D(q,p) germ.

    Only the two fixed Lê cycles contribute and the relative polar curve
    is empty, so the obstruction reduces to

        Eu(X) = 1 + (-1)^(n-q) + (-1)^(n-q-1) * Eu(degenerate locus),

    which collapses to 1 + (-1)^(n-q) for p even and to 1 for p odd.
    The reduction is only established for p > 1; p = 1 is rejected
    rather than guessed.
    """
    if params.p == 1:
        raise ValidationError(
            "p must satisfy p > 1 for the hypersurface Euler obstruction (got p=1)"
        )
    n, q, p = params.n, params.q, params.p
    sigma = euler_obstruction_sigma1(p)
    obstruction = 1 + (-1) ** (n - q) + (-1) ** (n - q - 1) * sigma
    expected = 1 + (-1) ** (n - q) if p % 2 == 0 else 1
    if obstruction != expected:
        raise CheckError(
            f"fixed-cycle sum {obstruction} disagrees with parity value "
            f"{expected} for (n,q,p)=({n},{q},{p})"
        )
    return obstruction


def verify_massey_identity(params: DqpParams) -> bool:
    """Check the alternating-sum identity against the reduced Euler characteristic.

    sum_d (-1)^((n-1)-d) * lambda^d must equal (-1)^(p+n-q-1), i.e. the
    expansion of (2-1)^p.  True for every valid parameter triple; a
    False return signals an internal bug, not bad input.
    """
    table = le_numbers(params)
    n = params.n
    total = sum((-1) ** ((n - 1) - d) * value for d, value in table.entries.items())
    return total == reduced_euler_characteristic(params)
