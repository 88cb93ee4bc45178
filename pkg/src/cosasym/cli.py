"""Command-line front end: point evaluation, asymptotic evaluation,
identity verification, ratio-convergence sweeps, and CSV grid export.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 truncation budget infeasible.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from .asymptotics import A_closed, A_integral, theorem2_asym, hstar
from .decomposition import QuadratureSpec, theorem1_rhs
from .errors import BudgetError, DomainError
from .series import CoefficientModel, ErrorBudget, eval_F_general, eval_F_kernel, eval_F_lattice, eval_H

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _parse_theta(text: str, dim: int | None) -> tuple[float, ...]:
    try:
        coords = tuple(float(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad theta {text!r}: {exc}") from None
    if dim is not None and len(coords) != dim:
        raise UsageError(f"theta has {len(coords)} coordinates, expected {dim}")
    return coords


def _parse_grid(text: str) -> list[float]:
    try:
        lo_s, hi_s, count_s = text.split(":")
        lo, hi, count = float(lo_s), float(hi_s), int(count_s)
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r} (want lo:hi:count): {exc}") from None
    if count < 2 or hi <= lo:
        raise UsageError("grid needs count >= 2 and hi > lo")
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _parse_perturb(text: str) -> CoefficientModel:
    try:
        kind, _, rest = text.partition(":")
        if kind == "mult":
            c, beta = (float(p) for p in rest.split(","))
            return CoefficientModel.multiplicative(c, beta)
        if kind == "noise":
            a_star_s, a_sup_s, seed_s = rest.split(",")
            return CoefficientModel.bounded_noise(
                float(a_star_s), float(a_sup_s), int(seed_s)
            )
    except (ValueError, DomainError) as exc:
        raise UsageError(f"bad --perturb {text!r}: {exc}") from None
    raise UsageError(f"bad --perturb {text!r} (want mult:c,beta or noise:astar,aupper,seed)")


def _budget(args) -> ErrorBudget:
    if args.shells is not None:
        return ErrorBudget.fixed_shells(args.shells)
    if args.tol is not None:
        return ErrorBudget.tail_tolerance(args.tol)
    return ErrorBudget.fixed_shells(2000)


def _geom_scales(start: float, stop: float, points: int) -> list[float]:
    if not (start > stop > 0) or points < 2:
        raise UsageError("ray sweep needs from > to > 0 and points >= 2")
    ratio = (stop / start) ** (1.0 / (points - 1))
    return [start * ratio**i for i in range(points)]


def _f_adaptive(theta, alpha, model: CoefficientModel, rtol: float):
    """Kernel evaluation with the tail correction, growing N until the
    certified bound is below rtol relative (used by ratio sweeps)."""
    n = 2000
    while True:
        value = eval_F_general(
            theta, alpha, model, ErrorBudget.fixed_shells(n),
            method="kernel", tail_correction=True,
        )
        if value.tail_bound <= rtol * abs(value.value) or n >= 30_000_000:
            return value
        n *= 4


def cmd_eval(args) -> int:
    theta = _parse_theta(args.theta, args.dim)
    budget = _budget(args)
    model = _parse_perturb(args.perturb) if args.perturb else CoefficientModel.pure()
    if len(theta) == 1 and args.method == "h":
        result = eval_H(theta[0], args.alpha, budget)
    elif args.method == "lattice" or model.kind == "bounded-noise":
        result = eval_F_general(theta, args.alpha, model, budget, method="lattice")
    else:
        result = eval_F_general(theta, args.alpha, model, budget, method="kernel")
    print(f"value={result.value!r} tail_bound={result.tail_bound!r} shells={result.shells_used}")
    return EXIT_OK


def cmd_asym(args) -> int:
    theta = _parse_theta(args.theta, args.dim)
    if len(theta) == 1:
        av = hstar(theta[0], args.alpha)
    else:
        av = theorem2_asym(theta, args.alpha)
    print(f"value={av.value!r} regime={av.regime.value} formula={av.formula_id}")
    return EXIT_OK


def _report(case: str, lhs: float, rhs: float, delta: float, tol: float) -> bool:
    ok = delta <= tol
    print(f"case={case} lhs={lhs!r} rhs={rhs!r} delta={delta!r} {'pass' if ok else 'fail'}")
    return ok


def cmd_verify(args) -> int:
    ok = True
    if args.target == "theorem1":
        theta = _parse_theta(args.theta, args.dim)
        tol = args.tol if args.tol is not None else 1e-4
        quad = QuadratureSpec(args.quad_nodes)
        rhs = theorem1_rhs(theta, args.alpha, quad, ErrorBudget.tail_tolerance(1e-8))
        shells = args.shells if args.shells is not None else 100_000
        lhs = eval_F_kernel(
            theta, args.alpha, ErrorBudget.fixed_shells(shells), tail_correction=True
        ).value
        ok = _report("theorem1", lhs, rhs, abs(lhs - rhs), tol)
    elif args.target == "theorem3":
        theta = _parse_theta(args.theta, args.dim)
        tol = args.tol if args.tol is not None else 1e-8
        lhs = A_integral(theta, args.alpha, QuadratureSpec(args.quad_nodes))
        rhs = A_closed(theta, args.alpha)
        ok = _report("theorem3", lhs, rhs, abs(lhs - rhs) / (1.0 + abs(lhs)), tol)
    elif args.target == "ratio":
        ray = _parse_theta(args.ray, args.dim)
        tol = args.tol if args.tol is not None else 0.05
        pure = CoefficientModel.pure()
        prev = math.inf
        for t in _geom_scales(args.start, args.stop, args.points):
            theta = tuple(t * r for r in ray)
            f = _f_adaptive(theta, args.alpha, pure, 1e-6)
            asym = theorem2_asym(theta, args.alpha).value
            delta = abs(f.value / asym - 1.0)
            case_ok = delta <= max(tol, prev)  # monotone approach, final under tol
            ok = _report(f"ratio t={t!r}", f.value, asym, delta, max(tol, prev)) and ok
            prev = delta
        ok = ok and prev <= tol
    elif args.target == "theorem4":
        ray = _parse_theta(args.ray, args.dim)
        tol = args.tol if args.tol is not None else 0.05
        model = _parse_perturb(args.perturb) if args.perturb else CoefficientModel.multiplicative(1.0, 0.5)
        pure = CoefficientModel.pure()
        if model.kind == "bounded-noise":
            for t in _geom_scales(args.start, args.stop, args.points):
                theta = tuple(t * r for r in ray)
                budget = ErrorBudget.fixed_shells(args.shells or 1500)
                f = eval_F_general(theta, args.alpha, model, budget, method="lattice")
                fp = eval_F_lattice(theta, args.alpha, ErrorBudget.fixed_shells(budget.shells))
                slack = f.tail_bound + model.a_sup * fp.tail_bound
                lo = model.a_star * fp.value - slack
                hi = model.a_sup * fp.value + slack
                delta = max(lo - f.value, f.value - hi, 0.0)
                ok = _report(f"sandwich t={t!r}", f.value, fp.value, delta, 0.0) and ok
        else:
            prev = math.inf
            for t in _geom_scales(args.start, args.stop, args.points):
                theta = tuple(t * r for r in ray)
                f = _f_adaptive(theta, args.alpha, model, 1e-6)
                fp = _f_adaptive(theta, args.alpha, pure, 1e-6)
                delta = abs(f.value / fp.value - 1.0)
                ok = _report(f"perturb t={t!r}", f.value, fp.value, delta, max(tol, prev)) and ok
                prev = delta
            ok = ok and prev <= tol
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_sweep(args) -> int:
    axis = _parse_grid(args.grid)
    columns = [c.strip() for c in args.columns.split(",")]
    for c in columns:
        if c not in ("F", "asym", "ratio"):
            raise UsageError(f"unknown column {c!r}")
    d = args.dim
    budget_shells = args.shells if args.shells is not None else 2000

    def rows():
        idx = [0] * d
        while True:
            theta = tuple(axis[i] for i in idx)
            yield theta
            j = d - 1
            while j >= 0:
                idx[j] += 1
                if idx[j] < len(axis):
                    break
                idx[j] = 0
                j -= 1
            if j < 0:
                return

    lines = []
    header = ",".join(f"theta_{i + 1}" for i in range(d)) + "," + ",".join(columns)
    lines.append(header)
    for theta in rows():
        fields = [repr(c) for c in theta]
        fval = None
        if "F" in columns or "ratio" in columns:
            fval = eval_F_kernel(
                theta, args.alpha, ErrorBudget.fixed_shells(budget_shells)
            ).value
        aval = None
        if "asym" in columns or "ratio" in columns:
            try:
                if d == 1:
                    aval = hstar(theta[0], args.alpha).value * 2.0
                else:
                    aval = theorem2_asym(theta, args.alpha).value
            except DomainError:
                aval = math.nan
        for c in columns:
            if c == "F":
                fields.append(repr(fval))
            elif c == "asym":
                fields.append(repr(aval))
            else:
                fields.append(repr(fval / aval if aval else math.nan))
        lines.append(",".join(fields))
    text = "\n".join(lines) + "\n"

    if args.out:
        out_dir = os.path.dirname(os.path.abspath(args.out))
        fd, tmp = tempfile.mkstemp(dir=out_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, args.out)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosasym",
        description="Evaluate multivariate cosine lattice series and their small-angle asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, theta=True):
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--alpha", type=float, required=True)
        if theta:
            p.add_argument("--theta", type=str, required=True)
        p.add_argument("--shells", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--quad-nodes", dest="quad_nodes", type=int, default=32)
        p.add_argument("--threads", type=int, default=1,
                       help="reserved; evaluators currently run single-threaded")

    p_eval = sub.add_parser("eval", help="evaluate the series at one point")
    common(p_eval)
    p_eval.add_argument("--method", choices=["kernel", "lattice", "h"], default="kernel")
    p_eval.add_argument("--perturb", type=str, default=None)
    p_eval.set_defaults(func=cmd_eval)

    p_asym = sub.add_parser("asym", help="evaluate the closed-form asymptotic")
    common(p_asym)
    p_asym.set_defaults(func=cmd_asym)

    p_verify = sub.add_parser("verify", help="verify an identity or asymptotic")
    p_verify.add_argument("target", choices=["theorem1", "theorem3", "ratio", "theorem4"])
    common(p_verify, theta=False)
    p_verify.add_argument("--theta", type=str, default=None)
    p_verify.add_argument("--ray", type=str, default=None)
    p_verify.add_argument("--from", dest="start", type=float, default=1e-1)
    p_verify.add_argument("--to", dest="stop", type=float, default=1e-3)
    p_verify.add_argument("--points", type=int, default=3)
    p_verify.add_argument("--perturb", type=str, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="export a CSV grid of values")
    common(p_sweep, theta=False)
    p_sweep.add_argument("--grid", type=str, required=True, help="lo:hi:count per axis")
    p_sweep.add_argument("--columns", type=str, default="F")
    p_sweep.add_argument("--out", type=str, default=None)
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "verify":
            if args.target in ("theorem1", "theorem3") and args.theta is None:
                raise UsageError(f"verify {args.target} requires --theta")
            if args.target in ("ratio", "theorem4") and args.ray is None:
                raise UsageError(f"verify {args.target} requires --ray")
        if args.command == "sweep" and args.dim is None:
            raise UsageError("sweep requires --dim")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
