"""Command-line interface.

Exit codes: 0 = exists / success, 1 = does not exist, 2 = bound-exhausted
or failed informational check, 3 = input error.  ``--format json`` emits
the same information as the text output with stable keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import grammar, lab, rank as rank_mod, solver
from .presentation import validate_instance
from .grammar import GrammarError

EXIT_EXISTS = 0
EXIT_NOT_EXISTS = 1
EXIT_BOUND = 2
EXIT_INPUT = 3


def _emit(payload: dict, text_lines: list, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GrammarError(0, f"cannot read {path}: {exc.strerror or exc}")


# ----------------------------------------------------------------------
# rank
# ----------------------------------------------------------------------


def cmd_rank(args) -> int:
    try:
        problem = grammar.parse_rank_document(
            _read(args.file), args.mode, args.denominator
        )
    except GrammarError as exc:
        return _fail(f"{args.file}:{exc}")
    problems = problem.validate()
    if problems:
        return _fail(f"{args.file}: " + "; ".join(problems))

    try:
        decision = rank_mod.decide(problem, args.cmax, args.norm, args.queue_cap)
    except ValueError as exc:
        return _fail(str(exc))
    modules = problem.modules
    if decision.exists:
        fn = decision.rank_function
        ranks = {m: str(fn.rank(m)) for m in modules}
        line = "EXISTS " + " ".join(f"rank({m})={ranks[m]}" for m in modules)
        payload = {
            "verdict": "exists",
            "mode": problem.mode,
            "denominator": problem.denominator,
            "ranks": ranks,
            "witness": None,
        }
        _emit(payload, [line.rstrip()], args.format)
        return EXIT_EXISTS

    lines = ["NOT-EXISTS"]
    witness_payload = None
    if decision.witness is not None:
        w = decision.witness
        lines.append(
            "witness: "
            f"{rank_mod.format_vector({rank_mod.R: w.c}, modules)} = "
            f"{rank_mod.format_vector(w.vector, modules)}"
        )
        lines.append("trace:")
        current = {rank_mod.R: w.c}
        lines.append(f"  {rank_mod.format_vector(current, modules)}")
        trace_payload = []
        for step in w.trace:
            lhs, rhs = problem.relations[step.relation]
            src, dst = (lhs, rhs) if step.forward else (rhs, lhs)
            current = rank_mod.vec_add(rank_mod.vec_sub(current, src), dst)
            arrow = "->" if step.forward else "<-"
            lines.append(
                f"  = {rank_mod.format_vector(current, modules)}"
                f"   [relation {step.relation + 1} {arrow}]"
            )
            trace_payload.append({
                "relation": step.relation + 1,
                "direction": "forward" if step.forward else "backward",
                "result": dict(sorted(current.items())),
            })
        witness_payload = {
            "c": w.c,
            "vector": dict(sorted(w.vector.items())),
            "trace": trace_payload,
        }
    else:
        lines.append(
            f"no witness found within bounds (c_max={args.cmax}, norm={args.norm})"
        )
    payload = {
        "verdict": "not-exists",
        "mode": problem.mode,
        "denominator": problem.denominator,
        "ranks": None,
        "witness": witness_payload,
    }
    _emit(payload, lines, args.format)
    return EXIT_NOT_EXISTS


# ----------------------------------------------------------------------
# extend
# ----------------------------------------------------------------------


def cmd_extend(args) -> int:
    try:
        inst = grammar.parse_extension_document(_read(args.file))
    except GrammarError as exc:
        return _fail(f"{args.file}:{exc}")
    violations = validate_instance(inst)
    if violations:
        return _fail(f"{args.file}: " + "; ".join(str(v) for v in violations))

    try:
        report = solver.extend_homomorphism(inst, args.length_bound, args.count_bound)
    except ValueError as exc:
        return _fail(str(exc))
    stats = {
        "nodes_visited": report.nodes_visited,
        "equations_checked": report.equations_checked,
    }
    if report.exists:
        shown = {
            g: inst.target.format_element(report.assignment[g])
            for g in inst.presentation.generators
        }
        line = "EXISTS " + " ".join(f"{g}={shown[g]}" for g in shown)
        payload = {"verdict": "exists", "assignment": shown, "reason": None,
                   "stats": stats}
        _emit(payload, [line], args.format)
        return EXIT_EXISTS
    payload = {"verdict": "not-exists", "assignment": None, "reason": report.reason,
               "stats": stats}
    _emit(payload, ["NOT-EXISTS", f"reason: {report.reason}"], args.format)
    return EXIT_NOT_EXISTS


# ----------------------------------------------------------------------
# weakdiv
# ----------------------------------------------------------------------


def cmd_weakdiv(args) -> int:
    try:
        target = grammar.parse_target_spec(args.target)
        members = tuple(
            target.parse_element(item.strip())
            for item in args.set.split(",")
            if item.strip()
        )
        if not members:
            raise ValueError("the reference set is empty")
        result = target.weak_divisors(members, args.dmax)
    except ValueError as exc:
        return _fail(str(exc))
    shown = [target.format_element(x) for x in result.elements]
    lines = ["weak divisors: {" + ", ".join(shown) + "}"]
    if not result.exact:
        lines.append(f"lower approximation at d <= {result.d_max}")
    payload = {
        "target": target.describe(),
        "set": [target.format_element(m) for m in members],
        "elements": shown,
        "exact": result.exact,
        "d_max": result.d_max,
    }
    _emit(payload, lines, args.format)
    return EXIT_EXISTS if result.exact else EXIT_BOUND


# ----------------------------------------------------------------------
# lab
# ----------------------------------------------------------------------

LAB_SUITES = ("non-idempotence", "ordered-laws", "rational-growth", "structural-claims")


def _run_suite(args) -> lab.LabReport:
    if args.suite == "non-idempotence":
        return lab.non_idempotence_demo(args.dmax or 6)
    if args.suite == "ordered-laws":
        target = grammar.parse_target_spec(args.target)
        return lab.check_ordered_laws(target, args.bound)
    if args.suite == "rational-growth":
        return lab.rational_growth_suite(args.max_k, args.dmax or 12)
    return lab.structural_claims_suite(d_max=args.dmax or 4)


def cmd_lab(args) -> int:
    try:
        report = _run_suite(args)
    except ValueError as exc:
        return _fail(str(exc))
    lines = [f"suite: {report.suite}"]
    for assertion in report.assertions:
        status = assertion.status
        if assertion.bound is not None and status == lab.VERIFIED_AT_BOUND:
            status = f"{status}({assertion.bound})"
        lines.append(f"  {assertion.name}: {status}")
    payload = report.to_dict()
    if args.out:
        from . import figures  # deferred: pulls in matplotlib

        paths = figures.write_report_files(report, Path(args.out))
        written = {kind: str(path) for kind, path in paths.items()}
        payload["files"] = written
        lines.append("written: " + " ".join(sorted(written.values())))
    _emit(payload, lines, args.format)
    return EXIT_EXISTS if report.ok else EXIT_BOUND


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semidiv",
        description="Divisor-bounded decision procedures for semigroup "
        "homomorphism extension and projective rank functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="decide existence of a rank function")
    p_rank.add_argument("file", help="rank problem file")
    p_rank.add_argument("--mode", choices=rank_mod.MODES, default="nonneg")
    p_rank.add_argument("--denominator", type=int, default=1, metavar="N")
    p_rank.add_argument("--cmax", type=int, default=rank_mod.DEFAULT_C_MAX)
    p_rank.add_argument("--norm", type=int, default=rank_mod.DEFAULT_NORM_BOUND)
    p_rank.add_argument("--queue-cap", type=int, default=rank_mod.DEFAULT_QUEUE_CAP)
    p_rank.add_argument("--format", choices=("text", "json"), default="text")
    p_rank.set_defaults(run=cmd_rank)

    p_ext = sub.add_parser("extend", help="decide homomorphism extension")
    p_ext.add_argument("file", help="extension problem file")
    p_ext.add_argument("--length-bound", type=int, default=None)
    p_ext.add_argument("--count-bound", type=int, default=10_000)
    p_ext.add_argument("--format", choices=("text", "json"), default="text")
    p_ext.set_defaults(run=cmd_extend)

    p_wd = sub.add_parser("weakdiv", help="weak divisors of a finite set")
    p_wd.add_argument("--target", required=True, help="target spec, e.g. free[a,b]")
    p_wd.add_argument("--set", required=True, help="comma-separated element literals")
    p_wd.add_argument("--dmax", type=int, default=8)
    p_wd.add_argument("--format", choices=("text", "json"), default="text")
    p_wd.set_defaults(run=cmd_weakdiv)

    p_lab = sub.add_parser("lab", help="run a verification suite")
    p_lab.add_argument("suite", choices=LAB_SUITES)
    p_lab.add_argument("--dmax", type=int, default=None)
    p_lab.add_argument("--bound", type=int, default=20, help="ordered-laws sample bound")
    p_lab.add_argument("--max-k", type=int, default=9, help="rational-growth generators")
    p_lab.add_argument("--target", default="nat", help="ordered-laws target spec")
    p_lab.add_argument("--out", default=None, metavar="DIR",
                       help="also write JSON, CSV and PNG report files")
    p_lab.add_argument("--format", choices=("text", "json"), default="text")
    p_lab.set_defaults(run=cmd_lab)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; usage errors
        # are input errors under this tool's contract.
        return EXIT_EXISTS if exc.code in (0, None) else EXIT_INPUT
    return args.run(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
