"""Command-line front end.

Subcommands: `invariants` (the full table set for one parameter
triple), `lecycles` (intersection-theory recomputation of each Lê
number), `chow` (raw bidegree intersection numbers), `closure`
(monomial integral-closure membership and reduction tests), `count`
(finite-field point counts), `verify` (the cross-route suites).

Exit codes: 0 when the command and every attached check passed, 1 when
an internal cross-check failed, 2 for invalid input, 3 when a
computation refuses its size budget.  Reports go to stdout (or --out),
diagnostics to stderr.  DQP_BUDGET overrides the enumeration budget.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time

from . import chow, core, ffcount, integral_closure, le_engine, verify
from .errors import BudgetError, CheckError, ValidationError
from .report import Check, Report, dimension_table

__all__ = ["main", "build_parser"]


def _budget_from_env(default: int) -> int:
    raw = os.environ.get("DQP_BUDGET")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"DQP_BUDGET must be an integer (got {raw!r})") from None
    if value < 1:
        raise ValidationError(f"DQP_BUDGET must be positive (got {value})")
    return value


def cmd_invariants(args: argparse.Namespace) -> Report:
    started = time.perf_counter()
    params = core.validate_params(args.n, args.q, args.p)
    le = core.le_numbers(params)
    polar = core.polar_multiplicities_sigma1(params.p)
    results = {
        "params": {
            "n": params.n,
            "q": params.q,
            "p": params.p,
            "k": params.k,
            "q1": params.q1,
        },
        "sphere_dimension": core.milnor_sphere_dimension(params),
        "reduced_euler_characteristic": core.reduced_euler_characteristic(params),
        "le_numbers": dimension_table(le.entries),
        "fixed_cycles": [
            {
                "name": cycle.name,
                "dimension": cycle.dimension,
                "multiplicity": cycle.cycle_multiplicity,
            }
            for cycle in le.fixed_cycles
        ],
        "polar_multiplicities_sigma1": dimension_table(polar.entries),
        "euler_obstruction_sigma1": core.euler_obstruction_sigma1(params.p),
    }
    if params.p == 1:
        results["euler_obstruction_note"] = (
            "the hypersurface Euler obstruction needs p > 1; for p = 1 the "
            "degenerate-matrix locus is the whole singular locus"
        )
    else:
        results["euler_obstruction_hypersurface"] = (
            core.euler_obstruction_hypersurface(params)
        )
    massey = core.verify_massey_identity(params)
    checks = [
        Check(
            name="massey-alternating-sum",
            status="pass" if massey else "fail",
            detail="signed Lê sum equals the reduced Euler characteristic",
        )
    ]
    return Report(
        command="invariants",
        inputs={"n": args.n, "q": args.q, "p": args.p},
        results=results,
        checks=checks,
        elapsed={"invariants": time.perf_counter() - started},
    )


def cmd_lecycles(args: argparse.Namespace) -> Report:
    started = time.perf_counter()
    p = args.p
    indices = [args.i] if args.i is not None else None
    if indices is None:
        if p < 2:
            raise ValidationError(f"p must satisfy p >= 2 (got p={p})")
        indices = list(range(1, p + 1))
    params = core.minimal_params(p)
    closed = core.le_numbers(params).entries
    polar = core.polar_multiplicities_sigma1(p).entries
    rows = []
    engine_bad: list[int] = []
    fulton_bad: list[int] = []
    fulton_checked: list[int] = []
    fulton_skipped: list[int] = []
    for i in indices:
        spec = le_engine.build_le_system(p, i)
        system = spec.system
        le_chow = le_engine.le_number_via_chow(p, i)
        mult_chow = le_engine.underlying_multiplicity_via_chow(p, i)
        dimension = params.q - i
        if le_chow != closed[dimension] or mult_chow != polar[dimension]:
            engine_bad.append(i)
        class_counts: dict[tuple[int, int], int] = {}
        for cls in system.classes:
            key = (cls.a, cls.b)
            class_counts[key] = class_counts.get(key, 0) + 1
        if len(system.classes) <= chow.FULTON_SUBSET_LIMIT:
            fulton_checked.append(i)
            if chow.intersection_number_fulton(system) != mult_chow:
                fulton_bad.append(i)
        else:
            fulton_skipped.append(i)
        rows.append(
            {
                "i": i,
                "dimension": dimension,
                "ambient": [system.ambient_n, system.ambient_m],
                "classes": [
                    [a, b, count] for (a, b), count in sorted(class_counts.items())
                ],
                "le_number_chow": le_chow,
                "le_number_closed_form": closed[dimension],
                "multiplicity_chow": mult_chow,
                "multiplicity_closed_form": polar[dimension],
            }
        )
    checks = [
        Check(
            name="engine-vs-closed-form",
            status="pass" if not engine_bad else "fail",
            detail=(
                f"i = {', '.join(map(str, indices))}"
                if not engine_bad
                else f"disagreeing i: {engine_bad}"
            ),
        )
    ]
    if fulton_checked or fulton_skipped:
        detail = f"cross-checked i = {', '.join(map(str, fulton_checked)) or 'none'}"
        if fulton_skipped:
            detail += (
                f"; skipped i = {', '.join(map(str, fulton_skipped))} "
                f"(class count exceeds subset budget {chow.FULTON_SUBSET_LIMIT})"
            )
        checks.append(
            Check(
                name="ring-vs-subset-sum",
                status="pass" if not fulton_bad else "fail",
                detail=detail if not fulton_bad else f"disagreeing i: {fulton_bad}",
            )
        )
    return Report(
        command="lecycles",
        inputs={"p": p, "i": args.i},
        results={"systems": rows},
        checks=checks,
        elapsed={"lecycles": time.perf_counter() - started},
    )


def _parse_classes(text: str) -> tuple[chow.Bidegree, ...]:
    classes = []
    for piece in text.replace(" ", "").split(";"):
        if not piece:
            continue
        parts = piece.split(",")
        if len(parts) != 2:
            raise ValidationError(
                f"each class must be 'a,b' with classes separated by ';' "
                f"(got {piece!r})"
            )
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValidationError(f"bidegree entries must be integers (got {piece!r})") from None
        classes.append(chow.Bidegree(a, b))
    if not classes:
        raise ValidationError("at least one bidegree class is required")
    return tuple(classes)


def cmd_chow(args: argparse.Namespace) -> Report:
    started = time.perf_counter()
    system = chow.BidegreeSystem(
        ambient_n=args.n, ambient_m=args.m, classes=_parse_classes(args.classes)
    )
    results: dict = {
        "ambient": [args.n, args.m],
        "classes": [[c.a, c.b] for c in system.classes],
    }
    checks: list[Check] = []
    if args.algorithm in ("ring", "both"):
        results["ring"] = chow.intersection_number_ring(system)
    if args.algorithm in ("fulton", "both"):
        results["fulton"] = chow.intersection_number_fulton(system)
    if args.algorithm == "both":
        agree = results["ring"] == results["fulton"]
        checks.append(
            Check(
                name="ring-vs-subset-sum",
                status="pass" if agree else "fail",
                detail=(
                    "both algorithms agree"
                    if agree
                    else f"ring {results['ring']} != subset-sum {results['fulton']}"
                ),
            )
        )
        results["intersection_number"] = results["ring"]
    else:
        results["intersection_number"] = results[args.algorithm]
    return Report(
        command="chow",
        inputs={
            "n": args.n,
            "m": args.m,
            "classes": args.classes,
            "algorithm": args.algorithm,
        },
        results=results,
        checks=checks,
        elapsed={"chow": time.perf_counter() - started},
    )


_VARIABLE_TOKEN = re.compile(r"([xy])(\d+)(?:\^(\d+))?")


def _parse_monomial_text(text: str, prefixes: set[str]) -> dict[int, int]:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValidationError("empty monomial")
    exponents: dict[int, int] = {}
    pos = 0
    while pos < len(compact):
        if compact[pos] == "*":
            pos += 1
            continue
        match = _VARIABLE_TOKEN.match(compact, pos)
        if match is None:
            raise ValidationError(
                f"cannot parse monomial {text!r} near {compact[pos:]!r}; expected "
                f"variables like y1, y2^3 separated by optional '*'"
            )
        letter, index_text, power_text = match.groups()
        prefixes.add(letter)
        index = int(index_text)
        if index < 1:
            raise ValidationError(f"variable indices start at 1 (got {letter}{index})")
        exponents[index - 1] = exponents.get(index - 1, 0) + (
            int(power_text) if power_text is not None else 1
        )
        pos = match.end()
    return exponents


def _parse_ideal_text(text: str, prefixes: set[str]) -> list[dict[int, int]]:
    pieces = [piece for piece in text.split(",") if piece.strip()]
    if not pieces:
        raise ValidationError("an ideal needs at least one generator")
    return [_parse_monomial_text(piece, prefixes) for piece in pieces]


def _build_monomial(
    exponents: dict[int, int], variable_count: int
) -> integral_closure.Monomial:
    return integral_closure.Monomial(
        tuple(exponents.get(i, 0) for i in range(variable_count))
    )


def _monomial_string(m: integral_closure.Monomial, prefix: str) -> str:
    pieces = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            pieces.append(f"{prefix}{i + 1}")
        elif e > 1:
            pieces.append(f"{prefix}{i + 1}^{e}")
    return "*".join(pieces) if pieces else "1"


def cmd_closure(args: argparse.Namespace) -> Report:
    started = time.perf_counter()
    prefixes: set[str] = set()
    ideal_exponents = _parse_ideal_text(args.ideal, prefixes)
    monomial_exponents = None
    full_exponents = None
    if args.mode == "membership":
        if args.monomial is None:
            raise ValidationError("membership mode needs --monomial")
        monomial_exponents = _parse_monomial_text(args.monomial, prefixes)
    else:
        if args.full is None:
            raise ValidationError("reduction mode needs --full")
        full_exponents = _parse_ideal_text(args.full, prefixes)
    if len(prefixes) > 1:
        raise ValidationError(
            "mixing x- and y-variables in one command is ambiguous; use one prefix"
        )
    prefix = prefixes.pop()
    all_exponents = ideal_exponents + (full_exponents or [])
    if monomial_exponents is not None:
        all_exponents = all_exponents + [monomial_exponents]
    variable_count = 1 + max(
        (index for expo in all_exponents for index in expo), default=0
    )
    ideal = integral_closure.MonomialIdeal(
        variable_count,
        tuple(_build_monomial(e, variable_count) for e in ideal_exponents),
    )
    checks: list[Check] = []
    results: dict = {
        "ideal": ", ".join(_monomial_string(g, prefix) for g in ideal.generators),
        "variable_count": variable_count,
        "mode": args.mode,
    }
    if args.mode == "membership":
        m = _build_monomial(monomial_exponents, variable_count)
        member = integral_closure.in_integral_closure_newton(ideal, m)
        results["monomial"] = _monomial_string(m, prefix)
        results["member"] = member
        witnesses = integral_closure.default_witnesses(variable_count, seed=0)
        battery = integral_closure.in_integral_closure_valuative(ideal, m, witnesses)
        results["witness_battery"] = battery
        checks.append(
            Check(
                name="witness-refutation-soundness",
                status="pass" if (not member or battery) else "fail",
                detail="finite curve battery cannot refute a Newton member",
            )
        )
        if variable_count <= integral_closure.FACET_VARIABLE_LIMIT:
            facets = integral_closure.in_integral_closure_facets(ideal, m)
            results["facet_route"] = facets
            checks.append(
                Check(
                    name="newton-vs-facet-enumeration",
                    status="pass" if facets == member else "fail",
                    detail="both membership routes agree",
                )
            )
    else:
        full = integral_closure.MonomialIdeal(
            variable_count,
            tuple(_build_monomial(e, variable_count) for e in full_exponents),
        )
        results["full"] = ", ".join(
            _monomial_string(g, prefix) for g in full.generators
        )
        results["reduction"] = integral_closure.is_reduction(ideal, full)
    return Report(
        command="closure",
        inputs={
            "ideal": args.ideal,
            "monomial": args.monomial,
            "full": args.full,
            "mode": args.mode,
        },
        results=results,
        checks=checks,
        elapsed={"closure": time.perf_counter() - started},
    )


def cmd_count(args: argparse.Namespace) -> Report:
    spec = ffcount.NormalFormSpec(p=args.p, q1=args.q1)
    budget = args.budget if args.budget is not None else _budget_from_env(
        ffcount.DEFAULT_BUDGET
    )
    jobs = args.jobs if args.jobs is not None else os.cpu_count() or 1
    report = ffcount.count_points(
        spec, args.prime, target=args.target, budget=budget, jobs=jobs
    )
    checks = [
        Check(
            name="observed-equals-predicted",
            status="pass" if report.agree else "fail",
            detail=(
                "exhaustive count matches the fibration prediction"
                if report.agree
                else f"observed {report.observed_count} != predicted "
                f"{report.predicted_count}"
            ),
        )
    ]
    return Report(
        command="count",
        inputs={
            "p": args.p,
            "q1": args.q1,
            "prime": args.prime,
            "target": args.target,
            "jobs": jobs,
        },
        results={
            "n": spec.n,
            "prime": report.prime,
            "target": report.target,
            "observed": report.observed_count,
            "predicted": report.predicted_count,
            "enumerated": report.enumerated,
        },
        checks=checks,
        elapsed={"count": report.elapsed},
    )


def cmd_verify(args: argparse.Namespace) -> Report:
    sweep_limit = _budget_from_env(verify.DEFAULT_SWEEP_LIMIT)
    return verify.run_verify(
        scope=args.scope, pmax=args.pmax, seed=args.seed, sweep_limit=sweep_limit
    )


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="report rendering (default: table)",
    )
    output.add_argument("--out", help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="dqp",
        description=(
            "Invariants of D(q,p) hypersurface singularities, with every closed "
            "form cross-checked by an independent computation"
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_inv = sub.add_parser(
        "invariants", parents=[output], help="all invariant tables for one (n, q, p)"
    )
    p_inv.add_argument("--n", type=int, required=True, help="ambient variable count")
    p_inv.add_argument("--q", type=int, required=True, help="singular locus dimension")
    p_inv.add_argument("--p", type=int, required=True, help="symmetric matrix size")
    p_inv.set_defaults(handler=cmd_invariants)

    p_le = sub.add_parser(
        "lecycles",
        parents=[output],
        help="Lê numbers of the minimal germ via intersection theory",
    )
    p_le.add_argument("--p", type=int, required=True, help="symmetric matrix size")
    p_le.add_argument(
        "--i", type=int, default=None, help="single cycle index (default: all 1..p)"
    )
    p_le.set_defaults(handler=cmd_lecycles)

    p_chow = sub.add_parser(
        "chow", parents=[output], help="bidegree intersection numbers on P^n x P^m"
    )
    p_chow.add_argument("--n", type=int, required=True, help="first factor dimension")
    p_chow.add_argument("--m", type=int, required=True, help="second factor dimension")
    p_chow.add_argument(
        "--classes",
        required=True,
        help="semicolon-separated bidegrees, e.g. '1,1;1,1;0,2'",
    )
    p_chow.add_argument(
        "--algorithm", choices=("ring", "fulton", "both"), default="both"
    )
    p_chow.set_defaults(handler=cmd_chow)

    p_closure = sub.add_parser(
        "closure",
        parents=[output],
        help="monomial integral-closure membership and reduction tests",
    )
    p_closure.add_argument(
        "--ideal",
        required=True,
        help="comma-separated monomial generators, e.g. 'y1^2,y2^2'",
    )
    p_closure.add_argument("--monomial", help="membership candidate, e.g. 'y1*y2'")
    p_closure.add_argument("--full", help="larger ideal for reduction mode")
    p_closure.add_argument(
        "--mode", choices=("membership", "reduction"), default="membership"
    )
    p_closure.set_defaults(handler=cmd_closure)

    p_count = sub.add_parser(
        "count", parents=[output], help="finite-field point counts of the normal form"
    )
    p_count.add_argument("--p", type=int, required=True, help="symmetric matrix size")
    p_count.add_argument(
        "--q1", type=int, default=0, help="coordinates the normal form ignores"
    )
    p_count.add_argument("--prime", type=int, required=True, help="odd prime modulus")
    p_count.add_argument("--target", type=int, default=1, help="nonzero field element")
    p_count.add_argument(
        "--budget",
        type=int,
        default=None,
        help="maximum prime^n (default: DQP_BUDGET or 10^8)",
    )
    p_count.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker threads (default: available cores); the count is identical "
        "for every value",
    )
    p_count.set_defaults(handler=cmd_count)

    p_verify = sub.add_parser(
        "verify", parents=[output], help="run the cross-route verification suites"
    )
    p_verify.add_argument(
        "--scope", choices=verify.SCOPES, default="all", help="which suites to run"
    )
    p_verify.add_argument(
        "--pmax",
        type=int,
        default=verify.DEFAULT_PMAX,
        help=f"largest matrix size exercised (default {verify.DEFAULT_PMAX}, max 8)",
    )
    p_verify.add_argument(
        "--seed", default="0", help="seed for the randomized suites (default 0)"
    )
    p_verify.set_defaults(handler=cmd_verify)
    return parser


def _render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.render_json()
    if fmt == "csv":
        return report.render_csv()
    return report.render_table()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except CheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    text = _render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if not report.passed:
        print("one or more checks failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
