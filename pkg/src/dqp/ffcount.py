"""Point counts of the normal-form fiber over small prime fields.

The Milnor fiber of the homogeneous germ f = sum_{i<=j} x_{ij} y_i y_j
can be replaced by the affine set {f = 1}, which fibers over the
nonzero y-vectors: once y = b is nonzero, b^t X b = 1 is a single
nontrivial affine-linear condition on the remaining coordinates.  Over
F_prime that reasoning predicts exactly

    (prime^p - 1) * prime^(n - p - 1)

points, a polynomial in the field size whose value at t = 1 is 0, the
Euler characteristic of an odd sphere.  This module checks the
prediction by exhaustive enumeration and recovers the counting
polynomial by exact Lagrange interpolation rather than trusting the
closed form.

Only the square-free normal form (no y^2 suspension terms, k = 0) is
counted: suspension terms would drag quadratic character sums into the
count, while the k = 0 case stays elementary and exact.  Odd primes
only, since characteristic 2 breaks the symmetric-form calculus.

The enumeration puts the y-block outermost so the y = 0 slab (where f
vanishes identically) is skipped, and coordinates that the formula
never reads contribute an analytic factor prime^q1.  The x-block is
swept with one vectorized matrix product per y-vector.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import DqpParams
from .errors import BudgetError, CheckError, ValidationError

__all__ = [
    "NormalFormSpec",
    "PointCountReport",
    "eval_normal_form",
    "predicted_count",
    "count_points",
    "count_nonzero_y_slice",
    "counting_polynomial",
    "evaluate_polynomial",
    "polynomial_string",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class NormalFormSpec:
    """Shape of the square-free normal form: matrix size p, q1 unread coordinates.

    Coordinate layout, in order: the p(p+1)/2 matrix entries x_{ij}
    (i <= j, row-major), then q1 coordinates the formula ignores, then
    y_1 ... y_p.  Total n = p(p+1)/2 + q1 + p.
    """

    p: int
    q1: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 1:
            raise ValidationError(f"p must satisfy p >= 1 (got p={self.p})")
        if not isinstance(self.q1, int) or self.q1 < 0:
            raise ValidationError(f"q1 must satisfy q1 >= 0 (got q1={self.q1})")

    @property
    def matrix_variable_count(self) -> int:
        return self.p * (self.p + 1) // 2

    @property
    def n(self) -> int:
        return self.matrix_variable_count + self.q1 + self.p

    @property
    def params(self) -> DqpParams:
        """The germ parameters this shape realizes (k = 0, so n = q + p)."""
        q = self.matrix_variable_count + self.q1
        return DqpParams(n=self.n, q=q, p=self.p)


@dataclass(frozen=True)
class PointCountReport:
    """One exhaustive count against its prediction."""

    spec: NormalFormSpec
    prime: int
    target: int
    observed_count: int
    predicted_count: int
    enumerated: int
    elapsed: float

    @property
    def agree(self) -> bool:
        return self.observed_count == self.predicted_count


def _require_odd_prime(prime: int) -> None:
    if not isinstance(prime, int) or prime < 3 or prime % 2 == 0:
        raise ValidationError(f"the modulus must be an odd prime (got {prime})")
    d = 3
    while d * d <= prime:
        if prime % d == 0:
            raise ValidationError(f"the modulus must be an odd prime (got {prime})")
        d += 2


def eval_normal_form(
    spec: NormalFormSpec, point: tuple[int, ...], prime: int
) -> int:
    """Value of sum_{i<=j} x_{ij} y_i y_j at one point of F_prime^n."""
    _require_odd_prime(prime)
    if len(point) != spec.n:
        raise ValidationError(
            f"point has {len(point)} coordinates, the normal form needs {spec.n}"
        )
    x = point[: spec.matrix_variable_count]
    y = point[spec.matrix_variable_count + spec.q1 :]
    total = 0
    idx = 0
    for i in range(spec.p):
        for j in range(i, spec.p):
            total += x[idx] * y[i] * y[j]
            idx += 1
    return total % prime


def predicted_count(spec: NormalFormSpec, prime: int) -> int:
    """(prime^p - 1) * prime^(n - p - 1): one linear condition per nonzero y."""
    _require_odd_prime(prime)
    return (prime**spec.p - 1) * prime ** (spec.n - spec.p - 1)


@lru_cache(maxsize=16)
def _x_grid(prime: int, width: int) -> np.ndarray:
    """All of F_prime^width as rows, lexicographic, int64."""
    axes = np.meshgrid(*([np.arange(prime, dtype=np.int64)] * width), indexing="ij")
    return np.stack(axes).reshape(width, -1).T


def count_nonzero_y_slice(
    spec: NormalFormSpec, prime: int, target: int, start: int, stop: int
) -> int:
    """Count of {f = target} over y-vectors with lexicographic index in [start, stop).

    Indices run over all prime^p y-vectors; the y = 0 slab contributes
    nothing because f vanishes there and target is nonzero.  The count
    covers the x-block only; unread coordinates are a flat factor
    prime^q1 applied by the caller.  Disjoint slices add up to the full
    count, whatever the partition.
    """
    _require_odd_prime(prime)
    if not 0 < target % prime:
        raise ValidationError(f"target must be nonzero mod {prime} (got {target})")
    if not 0 <= start <= stop <= prime**spec.p:
        raise ValidationError(
            f"slice [{start}, {stop}) out of range for {prime}^{spec.p} y-vectors"
        )
    target_value = target % prime
    grid = _x_grid(prime, spec.matrix_variable_count)
    total = 0
    y_vectors = itertools.islice(
        itertools.product(range(prime), repeat=spec.p), start, stop
    )
    for y in y_vectors:
        if not any(y):
            continue
        coeffs = np.array(
            [y[i] * y[j] % prime for i in range(spec.p) for j in range(i, spec.p)],
            dtype=np.int64,
        )
        values = (grid @ coeffs) % prime
        total += int(np.count_nonzero(values == target_value))
    return total


def count_points(
    spec: NormalFormSpec,
    prime: int,
    target: int = 1,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> PointCountReport:
    """Exhaustive count of {f = target} in F_prime^n, compared to the prediction.

    With jobs > 1 the y-range is split into that many contiguous slices
    counted on worker threads; integer addition of disjoint slice counts
    makes the result independent of the partition and the scheduling.
    """
    _require_odd_prime(prime)
    if not isinstance(jobs, int) or jobs < 1:
        raise ValidationError(f"jobs must be a positive integer (got {jobs})")
    enumerated = prime**spec.n
    if enumerated > budget:
        raise BudgetError(
            f"counting {prime}^{spec.n} = {enumerated} points exceeds the "
            f"budget of {budget}",
            required=enumerated,
        )
    started = time.perf_counter()
    total_y = prime**spec.p
    if jobs == 1:
        base = count_nonzero_y_slice(spec, prime, target, 0, total_y)
    else:
        edges = [round(j * total_y / jobs) for j in range(jobs + 1)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            base = sum(
                pool.map(
                    lambda bounds: count_nonzero_y_slice(
                        spec, prime, target, bounds[0], bounds[1]
                    ),
                    zip(edges, edges[1:]),
                )
            )
    observed = base * prime**spec.q1
    elapsed = time.perf_counter() - started
    return PointCountReport(
        spec=spec,
        prime=prime,
        target=target % prime,
        observed_count=observed,
        predicted_count=predicted_count(spec, prime),
        enumerated=enumerated,
        elapsed=elapsed,
    )


def _first_odd_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 3
    while len(primes) < count:
        if all(candidate % p for p in primes) and all(
            candidate % d for d in range(3, int(candidate**0.5) + 1, 2)
        ):
            primes.append(candidate)
        candidate += 2
    return primes


def counting_polynomial(spec: NormalFormSpec) -> tuple[int, ...]:
    """Coefficients (ascending) of N(t), the point count as a polynomial in t.

    Interpolated exactly from predicted counts at the first n odd primes,
    then checked against the closed form t^(n-1) - t^(n-p-1); a mismatch
    means the prediction is not the polynomial it claims to be.
    """
    samples = [
        (Fraction(prime), Fraction(predicted_count(spec, prime)))
        for prime in _first_odd_primes(spec.n)
    ]
    coeffs = _lagrange_coefficients(samples)
    if any(c.denominator != 1 for c in coeffs):
        raise CheckError(
            f"interpolated count for p={spec.p}, q1={spec.q1} is not an "
            f"integer polynomial: {coeffs}"
        )
    interpolated = tuple(int(c) for c in coeffs)
    closed = [0] * spec.n
    closed[spec.n - 1] = 1
    closed[spec.n - spec.p - 1] -= 1
    if interpolated != tuple(closed):
        raise CheckError(
            f"interpolated counting polynomial {interpolated} differs from "
            f"the closed form {tuple(closed)} for p={spec.p}, q1={spec.q1}"
        )
    return interpolated


def _lagrange_coefficients(
    samples: list[tuple[Fraction, Fraction]]
) -> list[Fraction]:
    degree_bound = len(samples)
    result = [Fraction(0)] * degree_bound
    for i, (xi, yi) in enumerate(samples):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(samples):
            if j == i:
                continue
            # Multiply the running basis polynomial by (t - xj).
            shifted = [Fraction(0)] + basis
            basis = [
                s - xj * b
                for s, b in zip(shifted, basis + [Fraction(0)])
            ]
            denom *= xi - xj
        scale = yi / denom
        for k, c in enumerate(basis):
            result[k] += scale * c
    return result


def evaluate_polynomial(coeffs: tuple[int, ...], t: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * t + c
    return value


def polynomial_string(coeffs: tuple[int, ...], indeterminate: str = "t") -> str:
    """Readable rendering, highest degree first, e.g. 't^4 - t^2'."""
    pieces: list[str] = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        if degree == 0:
            body = str(abs(c))
        else:
            power = indeterminate if degree == 1 else f"{indeterminate}^{degree}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"
