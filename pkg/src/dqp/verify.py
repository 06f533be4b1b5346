"""Cross-route verification suites behind the `verify` command.

Every closed form in the package has an independent computational
route, and these suites drive the two against each other at a
configurable scale:

  core     closed-form Lê numbers vs the intersection-theory engine,
           polar entries as halved Lê numbers, the alternating-sum
           identity against the reduced Euler characteristic, Euler
           obstruction parity, determinant order at the origin;
  chow     truncated-ring products vs subset-sum intersection numbers
           on seeded random systems, plus the algebraic properties
           (permutation invariance, multilinearity, forced vanishing);
  closure  Newton-polyhedron membership vs facet-normal enumeration on
           seeded random monomial ideals, the square-ideal reduction
           family, monotonicity, and transitivity of reduction;
  ffcount  exhaustive finite-field counts vs the fibration prediction
           for every shape that fits the enumeration limit, target and
           partition independence, and the interpolated counting
           polynomial against the reduced Euler characteristic.

All randomness is derived from a per-case string seed, so a fixed seed
gives a bit-identical report.  Check details carry case counts and
parameter ranges, never timings; timings live on the report object for
the table rendering only.
"""

from __future__ import annotations

import itertools
import random
import time

from . import chow, core, ffcount, integral_closure, le_engine
from .errors import ValidationError
from .report import Check, Report

__all__ = [
    "SCOPES",
    "DEFAULT_PMAX",
    "DEFAULT_SWEEP_LIMIT",
    "SWEEP_PRIMES",
    "core_checks",
    "chow_checks",
    "closure_checks",
    "ffcount_checks",
    "run_verify",
]

SCOPES = ("all", "core", "chow", "closure", "ffcount")
DEFAULT_PMAX = 4
DEFAULT_SWEEP_LIMIT = 10**7
SWEEP_PRIMES = (3, 5, 7, 11)


def _check(name: str, ok: bool, pass_detail: str, fail_detail: str = "") -> Check:
    if ok:
        return Check(name=name, status="pass", detail=pass_detail)
    return Check(name=name, status="fail", detail=fail_detail or pass_detail)


def core_checks(pmax: int = DEFAULT_PMAX) -> list[Check]:
    checks: list[Check] = []

    mismatches: list[tuple[int, int, int, int]] = []
    cases = 0
    for p in range(2, pmax + 1):
        params = core.minimal_params(p)
        table = core.le_numbers(params).entries
        for i in range(1, p + 1):
            cases += 1
            engine = le_engine.le_number_via_chow(p, i)
            closed = table[params.q - i]
            if engine != closed:
                mismatches.append((p, i, engine, closed))
    checks.append(
        _check(
            "le-closed-form-vs-chow",
            not mismatches,
            f"{cases} cases, 2 <= p <= {pmax}",
            f"mismatches (p, i, engine, closed): {mismatches}",
        )
    )

    halving_bad: list[tuple[int, int]] = []
    for p in range(2, pmax + 1):
        le = core.le_numbers(core.minimal_params(p)).entries
        polar = core.polar_multiplicities_sigma1(p).entries
        for d, m in polar.items():
            if 2 * m != le[d]:
                halving_bad.append((p, d))
    checks.append(
        _check(
            "polar-equals-half-le",
            not halving_bad,
            f"all dimensions, 2 <= p <= {pmax}",
            f"failing (p, dimension) pairs: {halving_bad}",
        )
    )

    massey_bad: list[tuple[int, int, int]] = []
    massey_cases = 0
    for p in range(1, pmax + 1):
        q_min = p * (p + 1) // 2
        for q in range(q_min, q_min + 3):
            for n in range(q + p, q + p + 3):
                massey_cases += 1
                if not core.verify_massey_identity(core.DqpParams(n=n, q=q, p=p)):
                    massey_bad.append((n, q, p))
    checks.append(
        _check(
            "massey-alternating-sum",
            not massey_bad,
            f"{massey_cases} parameter triples, p <= {pmax}",
            f"failing (n, q, p) triples: {massey_bad}",
        )
    )

    parity_bad: list[int] = []
    for p in range(1, 9):
        if core.euler_obstruction_sigma1(p) != p % 2:
            parity_bad.append(p)
    checks.append(
        _check(
            "euler-obstruction-parity",
            not parity_bad,
            "p = 1..8",
            f"failing p: {parity_bad}",
        )
    )

    hyper_bad: list[tuple[int, int, int]] = []
    hyper_cases = 0
    for p in range(2, pmax + 1):
        q = p * (p + 1) // 2
        for delta in (p, p + 1, p + 2):
            hyper_cases += 1
            params = core.DqpParams(n=q + delta, q=q, p=p)
            expected = 1 + (-1) ** delta if p % 2 == 0 else 1
            if core.euler_obstruction_hypersurface(params) != expected:
                hyper_bad.append((params.n, q, p))
    checks.append(
        _check(
            "euler-obstruction-hypersurface",
            not hyper_bad,
            f"{hyper_cases} cases, 2 <= p <= {pmax}",
            f"failing (n, q, p): {hyper_bad}",
        )
    )

    det_top = min(pmax, le_engine.MAX_DET_SIZE)
    det_bad = [
        p for p in range(1, det_top + 1) if le_engine.det_multiplicity(p) != p
    ]
    checks.append(
        _check(
            "det-multiplicity",
            not det_bad,
            f"p = 1..{det_top}",
            f"failing p: {det_bad}",
        )
    )
    return checks


def _random_system(
    rng: random.Random, max_total: int = 10, max_entry: int = 3
) -> chow.BidegreeSystem:
    total = rng.randint(2, max_total)
    ambient_n = rng.randint(0, total)
    classes = []
    for _ in range(total):
        a = rng.randint(0, max_entry)
        b = rng.randint(0, max_entry)
        if a == 0 and b == 0:
            a = rng.randint(1, max_entry)
        classes.append(chow.Bidegree(a, b))
    return chow.BidegreeSystem(
        ambient_n=ambient_n, ambient_m=total - ambient_n, classes=tuple(classes)
    )


def chow_checks(seed: int | str = 0, cases: int = 200) -> list[Check]:
    checks: list[Check] = []

    dual_bad: list[int] = []
    for c in range(cases):
        rng = random.Random(f"{seed}:chow-dual:{c}")
        system = _random_system(rng)
        if chow.intersection_number_ring(system) != chow.intersection_number_fulton(
            system
        ):
            dual_bad.append(c)
    checks.append(
        _check(
            "ring-vs-subset-sum",
            not dual_bad,
            f"{cases} seeded systems, class count <= 10, entries <= 3",
            f"disagreeing case ids: {dual_bad}",
        )
    )

    perm_bad: list[int] = []
    for c in range(cases // 4):
        rng = random.Random(f"{seed}:chow-perm:{c}")
        system = _random_system(rng)
        shuffled = list(system.classes)
        rng.shuffle(shuffled)
        reordered = chow.BidegreeSystem(
            ambient_n=system.ambient_n,
            ambient_m=system.ambient_m,
            classes=tuple(shuffled),
        )
        if chow.intersection_number_ring(system) != chow.intersection_number_ring(
            reordered
        ):
            perm_bad.append(c)
    checks.append(
        _check(
            "permutation-invariance",
            not perm_bad,
            f"{cases // 4} seeded reorderings",
            f"disagreeing case ids: {perm_bad}",
        )
    )

    linear_bad: list[int] = []
    for c in range(cases // 4):
        rng = random.Random(f"{seed}:chow-linear:{c}")
        system = _random_system(rng)
        a = rng.randint(1, 3)
        b = rng.randint(1, 3)
        rest = system.classes[1:]
        whole = chow.BidegreeSystem(
            system.ambient_n, system.ambient_m, (chow.Bidegree(a, b),) + rest
        )
        h_part = chow.BidegreeSystem(
            system.ambient_n, system.ambient_m, (chow.Bidegree(a, 0),) + rest
        )
        k_part = chow.BidegreeSystem(
            system.ambient_n, system.ambient_m, (chow.Bidegree(0, b),) + rest
        )
        total = chow.intersection_number_ring(h_part) + chow.intersection_number_ring(
            k_part
        )
        if total != chow.intersection_number_ring(whole):
            linear_bad.append(c)
    checks.append(
        _check(
            "multilinearity",
            not linear_bad,
            f"{cases // 4} seeded split-and-sum cases",
            f"disagreeing case ids: {linear_bad}",
        )
    )

    vanish_bad: list[int] = []
    for c in range(cases // 4):
        rng = random.Random(f"{seed}:chow-vanish:{c}")
        total = rng.randint(3, 10)
        ambient_n = rng.randint(1, total - 1)
        ambient_m = total - ambient_n
        classes = [
            chow.Bidegree(0, rng.randint(1, 3)) for _ in range(ambient_m + 1)
        ]
        for _ in range(total - ambient_m - 1):
            a = rng.randint(0, 3)
            b = rng.randint(0, 3)
            if a == 0 and b == 0:
                a = 1
            classes.append(chow.Bidegree(a, b))
        system = chow.BidegreeSystem(
            ambient_n=ambient_n, ambient_m=ambient_m, classes=tuple(classes)
        )
        if (
            chow.intersection_number_ring(system) != 0
            or chow.intersection_number_fulton(system) != 0
        ):
            vanish_bad.append(c)
    checks.append(
        _check(
            "forced-vanishing",
            not vanish_bad,
            f"{cases // 4} systems with more k-only classes than the k-budget",
            f"nonvanishing case ids: {vanish_bad}",
        )
    )
    return checks


def _random_ideal(
    rng: random.Random, max_vars: int = 4, max_expo: int = 5
) -> integral_closure.MonomialIdeal:
    nvars = rng.randint(1, max_vars)
    count = rng.randint(1, 5)
    gens = tuple(
        integral_closure.Monomial(
            tuple(rng.randint(0, max_expo) for _ in range(nvars))
        )
        for _ in range(count)
    )
    return integral_closure.MonomialIdeal(nvars, gens)


def _square_reduction_pair(
    p: int,
) -> tuple[integral_closure.MonomialIdeal, integral_closure.MonomialIdeal]:
    maximal = integral_closure.MonomialIdeal(
        p,
        tuple(
            integral_closure.Monomial(tuple(int(i == j) for j in range(p)))
            for i in range(p)
        ),
    )
    squares = integral_closure.MonomialIdeal(
        p,
        tuple(
            integral_closure.Monomial(tuple(2 * int(i == j) for j in range(p)))
            for i in range(p)
        ),
    )
    return squares, integral_closure.power_ideal(maximal, 2)


def closure_checks(seed: int | str = 0, cases: int = 100) -> list[Check]:
    checks: list[Check] = []

    family_bad = []
    for p in range(1, 7):
        squares, squared = _square_reduction_pair(p)
        if not integral_closure.is_reduction(squares, squared):
            family_bad.append(p)
    checks.append(
        _check(
            "square-ideal-reduction-family",
            not family_bad,
            "p = 1..6",
            f"failing p: {family_bad}",
        )
    )

    dual_bad: list[int] = []
    degree_bad: list[int] = []
    for c in range(cases):
        rng = random.Random(f"{seed}:closure-dual:{c}")
        ideal = _random_ideal(rng)
        m = integral_closure.Monomial(
            tuple(rng.randint(0, 7) for _ in range(ideal.variable_count))
        )
        newton = integral_closure.in_integral_closure_newton(ideal, m)
        facets = integral_closure.in_integral_closure_facets(ideal, m)
        if newton != facets:
            dual_bad.append(c)
        if newton and m.total_degree < min(
            g.total_degree for g in ideal.generators
        ):
            degree_bad.append(c)
    checks.append(
        _check(
            "newton-vs-facet-enumeration",
            not dual_bad,
            f"{cases} seeded ideals in <= 4 variables",
            f"disagreeing case ids: {dual_bad}",
        )
    )
    checks.append(
        _check(
            "member-degree-necessity",
            not degree_bad,
            f"{cases} seeded membership cases",
            f"violating case ids: {degree_bad}",
        )
    )

    witness_bad: list[int] = []
    for c in range(cases // 2):
        rng = random.Random(f"{seed}:closure-wit:{c}")
        ideal = _random_ideal(rng)
        m = integral_closure.Monomial(
            tuple(rng.randint(0, 7) for _ in range(ideal.variable_count))
        )
        witnesses = integral_closure.default_witnesses(
            ideal.variable_count, seed=f"{seed}:closure-wit:{c}"
        )
        newton = integral_closure.in_integral_closure_newton(ideal, m)
        valuative = integral_closure.in_integral_closure_valuative(
            ideal, m, witnesses
        )
        # Finite witness lists can only refute, never certify.
        if newton and not valuative:
            witness_bad.append(c)
    checks.append(
        _check(
            "witness-refutation-soundness",
            not witness_bad,
            f"{cases // 2} seeded witness batteries",
            f"unsound case ids: {witness_bad}",
        )
    )

    mono_bad: list[int] = []
    for c in range(cases // 2):
        rng = random.Random(f"{seed}:closure-mono:{c}")
        ideal = _random_ideal(rng)
        m = integral_closure.Monomial(
            tuple(rng.randint(0, 7) for _ in range(ideal.variable_count))
        )
        if not integral_closure.in_integral_closure_newton(ideal, m):
            continue
        extra = tuple(
            integral_closure.Monomial(
                tuple(rng.randint(0, 5) for _ in range(ideal.variable_count))
            )
            for _ in range(rng.randint(1, 3))
        )
        larger = integral_closure.MonomialIdeal(
            ideal.variable_count, ideal.generators + extra
        )
        if not integral_closure.in_integral_closure_newton(larger, m):
            mono_bad.append(c)
    checks.append(
        _check(
            "membership-monotonicity",
            not mono_bad,
            f"{cases // 2} seeded enlargements",
            f"violating case ids: {mono_bad}",
        )
    )

    trans_bad: list[tuple[int, int]] = []
    for p in range(2, 5):
        squares, squared = _square_reduction_pair(p)
        for c in range(5):
            rng = random.Random(f"{seed}:closure-trans:{p}:{c}")
            picked = tuple(
                g for g in squared.generators if rng.random() < 0.5
            )
            middle = integral_closure.MonomialIdeal(
                p, squares.generators + picked
            )
            legs = integral_closure.is_reduction(
                squares, middle
            ) and integral_closure.is_reduction(middle, squared)
            if not (legs and integral_closure.is_reduction(squares, squared)):
                trans_bad.append((p, c))
    checks.append(
        _check(
            "reduction-transitivity",
            not trans_bad,
            "15 seeded chains through intermediate ideals, p = 2..4",
            f"failing (p, case): {trans_bad}",
        )
    )
    return checks


def _sweep_shapes(sweep_limit: int):
    """Every (spec, prime) with prime ** n within the enumeration limit."""
    for p in itertools.count(1):
        base = ffcount.NormalFormSpec(p=p, q1=0)
        if min(prime**base.n for prime in SWEEP_PRIMES) > sweep_limit:
            return
        for prime in SWEEP_PRIMES:
            q1 = 0
            while prime ** (base.n + q1) <= sweep_limit:
                yield ffcount.NormalFormSpec(p=p, q1=q1), prime
                q1 += 1


def ffcount_checks(
    seed: int | str = 0, sweep_limit: int = DEFAULT_SWEEP_LIMIT
) -> list[Check]:
    checks: list[Check] = []

    sweep_bad: list[tuple[int, int, int]] = []
    sweep_cases = 0
    for spec, prime in _sweep_shapes(sweep_limit):
        sweep_cases += 1
        report = ffcount.count_points(spec, prime, budget=sweep_limit)
        if not report.agree:
            sweep_bad.append((spec.p, spec.q1, prime))
    checks.append(
        _check(
            "observed-equals-predicted",
            not sweep_bad,
            f"{sweep_cases} shape/prime pairs with prime^n <= {sweep_limit}",
            f"disagreeing (p, q1, prime): {sweep_bad}",
        )
    )

    target_bad: list[tuple[int, int, int]] = []
    target_cases = 0
    for p, q1 in ((1, 0), (1, 1), (2, 0)):
        spec = ffcount.NormalFormSpec(p=p, q1=q1)
        for prime in (3, 5, 7):
            reference = ffcount.count_points(spec, prime, target=1).observed_count
            for target in range(2, prime):
                target_cases += 1
                observed = ffcount.count_points(
                    spec, prime, target=target
                ).observed_count
                if observed != reference:
                    target_bad.append((p, q1, prime))
                    break
    checks.append(
        _check(
            "target-independence",
            not target_bad,
            f"{target_cases} nonzero targets across three shapes, primes 3..7",
            f"dependent (p, q1, prime): {target_bad}",
        )
    )

    poly_bad: list[tuple[int, int]] = []
    for p in (1, 2, 3):
        for q1 in (0, 1):
            spec = ffcount.NormalFormSpec(p=p, q1=q1)
            coeffs = ffcount.counting_polynomial(spec)
            euler_ok = (
                ffcount.evaluate_polynomial(coeffs, 1) == 0
                and len(coeffs) == spec.n
                and core.reduced_euler_characteristic(spec.params) == -1
            )
            if not euler_ok:
                poly_bad.append((p, q1))
    checks.append(
        _check(
            "counting-polynomial-euler",
            not poly_bad,
            "interpolation matches the closed form and N(1) = 0 = 1 + reduced "
            "Euler characteristic for p <= 3, q1 <= 1",
            f"failing (p, q1): {poly_bad}",
        )
    )

    spec = ffcount.NormalFormSpec(p=2, q1=0)
    prime = 5
    whole = ffcount.count_nonzero_y_slice(spec, prime, 1, 0, prime**spec.p)
    partition_bad: list[int] = []
    for chunks in (1, 2, 8):
        edges = [
            round(j * prime**spec.p / chunks) for j in range(chunks + 1)
        ]
        parts = sum(
            ffcount.count_nonzero_y_slice(spec, prime, 1, lo, hi)
            for lo, hi in zip(edges, edges[1:])
        )
        if parts != whole:
            partition_bad.append(chunks)
    checks.append(
        _check(
            "partition-independence",
            not partition_bad,
            "slice sums identical for 1, 2, 8 chunks (p=2 over F_5)",
            f"diverging chunk counts: {partition_bad}",
        )
    )
    return checks


def run_verify(
    scope: str = "all",
    pmax: int = DEFAULT_PMAX,
    seed: int | str = 0,
    sweep_limit: int = DEFAULT_SWEEP_LIMIT,
) -> Report:
    """Run the selected suites and fold their checks into one report."""
    if scope not in SCOPES:
        raise ValidationError(
            f"scope must be one of {', '.join(SCOPES)} (got {scope!r})"
        )
    if not isinstance(pmax, int) or not 2 <= pmax <= 8:
        raise ValidationError(f"pmax must satisfy 2 <= pmax <= 8 (got {pmax})")
    if not isinstance(sweep_limit, int) or sweep_limit < 1:
        raise ValidationError(
            f"the enumeration limit must be a positive integer (got {sweep_limit})"
        )
    suites = (
        ("core", lambda: core_checks(pmax)),
        ("chow", lambda: chow_checks(seed)),
        ("closure", lambda: closure_checks(seed)),
        ("ffcount", lambda: ffcount_checks(seed, sweep_limit)),
    )
    checks: list[Check] = []
    elapsed: dict[str, float] = {}
    ran: list[str] = []
    for name, runner in suites:
        if scope not in ("all", name):
            continue
        started = time.perf_counter()
        checks.extend(runner())
        elapsed[name] = time.perf_counter() - started
        ran.append(name)
    passed = sum(1 for c in checks if c.passed)
    return Report(
        command="verify",
        inputs={
            "scope": scope,
            "pmax": pmax,
            "seed": str(seed),
            "sweep_limit": sweep_limit,
        },
        results={
            "suites": ran,
            "checks_run": len(checks),
            "checks_passed": passed,
        },
        checks=checks,
        elapsed=elapsed,
    )
