"""Deciding whether a partial map into a target semigroup extends to a
homomorphism of the presented source semigroup.

The decision procedure is exact for finitely many generators: every
candidate value for a generator must divide the value of some probe whose
word mentions it, which yields a finite domain per generator; an exhaustive
deterministic backtracking search over those domains then checks all probe
equations (original and rewrite-derived) together with the defining
relations.

``combine_pair`` exposes the equation-combination step that merges two
equations into one with the same in-bounds solution set; it is available
for the cancellative, power-cancellative kinds (the additive integer family
and free commutative targets) and is not needed by the search itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .presentation import ProblemInstance, derived_probes, validate_instance
from .targets import Target

_ADDITIVE_INT_KINDS = ("nat", "posnat", "scalednat")
_COMBINE_KINDS = _ADDITIVE_INT_KINDS + ("freecomm",)


@dataclass(frozen=True)
class Equation:
    """A target constant equated with a word in generator-valued unknowns."""

    value: object
    pattern: str


@dataclass(frozen=True)
class EquationReport:
    equation: Equation
    solution: dict | None

    @property
    def solvable(self) -> bool:
        return self.solution is not None


@dataclass(frozen=True)
class SolveReport:
    """Search outcome: an assignment, or a reason why none exists."""

    assignment: dict | None
    reason: str | None = None
    failing: Equation | None = None
    nodes_visited: int = 0
    equations_checked: int = 0

    @property
    def exists(self) -> bool:
        return self.assignment is not None


def evaluate(target: Target, pattern: str, assignment: dict):
    """The pattern's value under an assignment of all its symbols."""
    out = None
    for symbol in pattern:
        value = assignment[symbol]
        out = value if out is None else target.multiply(out, value)
    if out is None:
        raise ValueError("cannot evaluate an empty pattern")
    return out


def render_equation(target: Target, equation: Equation) -> str:
    """Human-readable form, e.g. ``1 = 2·x`` or ``ab = x·y``."""
    value = target.format_element(equation.value)
    if target.kind in _ADDITIVE_INT_KINDS + ("rational", "freecomm"):
        counts: dict = {}
        for symbol in equation.pattern:
            counts[symbol] = counts.get(symbol, 0) + 1
        terms = [
            symbol if count == 1 else f"{count}·{symbol}"
            for symbol, count in sorted(counts.items())
        ]
        return f"{value} = " + " + ".join(terms)
    return f"{value} = " + "·".join(equation.pattern)


def domain_bounds(inst: ProblemInstance) -> dict:
    """Candidate values per generator: the intersection, over the probes
    whose word mentions the generator, of the divisors of the probe value.

    A generator missing from every probe gets no entry (instance validation
    rejects that); an empty tuple certifies that no extension exists.
    """
    bounds: dict = {}
    for probe in inst.probes:
        divisors = None
        for symbol in inst.presentation.generators:
            if symbol not in probe.word:
                continue
            if divisors is None:
                divisors = inst.target.divisors(probe.value)
            if symbol in bounds:
                keep = set(divisors)
                bounds[symbol] = tuple(v for v in bounds[symbol] if v in keep)
            else:
                bounds[symbol] = divisors
    return {g: bounds[g] for g in inst.presentation.generators if g in bounds}


def _pattern_symbols(equations, order) -> tuple:
    used = set()
    for eq in equations:
        used.update(eq.pattern)
    return tuple(g for g in order if g in used)


def _solutions(target, equation, variables, bounds):
    """All in-bounds assignments of ``variables`` satisfying the equation."""
    out = set()
    for values in itertools.product(*(bounds[v] for v in variables)):
        assignment = dict(zip(variables, values))
        if evaluate(target, equation.pattern, assignment) == equation.value:
            out.add(values)
    return out


def realization_check(target: Target, equations, bounds) -> tuple:
    """Per-equation solvability within the domain bounds.

    Each report carries the first solution in canonical search order, or
    None; the scan over the finite bound sets is exhaustive, so a None is a
    certificate that the single equation has no in-bounds solution.
    """
    reports = []
    for eq in equations:
        variables = tuple(g for g in bounds if g in eq.pattern)
        solution = None
        for values in itertools.product(*(bounds[v] for v in variables)):
            assignment = dict(zip(variables, values))
            if evaluate(target, eq.pattern, assignment) == eq.value:
                solution = assignment
                break
        reports.append(EquationReport(eq, solution))
    return tuple(reports)


def _combine_size(target, value):
    if target.kind == "freecomm":
        return max(value)
    return value


def combine_pair(target: Target, eq1: Equation, eq2: Equation, bounds) -> tuple:
    """The smallest exponent d such that ``value1^d * value2 =
    pattern1^d pattern2`` has, within the bounds, exactly the common
    solutions of the two equations; returns ``(d, combined)``.

    Supported for the additive integer family and free commutative targets
    (both cancellative and power-cancellative).  Termination: an assignment
    that satisfies the combined equation without satisfying the first one
    pins d to a single value not exceeding the sizes involved, so some
    d below ``1 + max(size(value2), max achievable size of pattern2)``
    must work; the scan verifies each d by brute force.
    """
    if target.kind not in _COMBINE_KINDS:
        raise ValueError(f"combine_pair does not support target kind {target.kind!r}")
    variables = _pattern_symbols((eq1, eq2), tuple(bounds))
    sols1 = _solutions(target, eq1, variables, bounds)
    sols2 = _solutions(target, eq2, variables, bounds)
    wanted = sols1 & sols2

    top = {v: max(_combine_size(target, x) for x in bounds[v]) for v in variables}
    reachable = sum(top[v] for v in eq2.pattern)
    limit = 1 + max(_combine_size(target, eq2.value), reachable)

    for d in range(0, limit + 1):
        if d == 0:
            combined = eq2
        else:
            value = target.multiply(target.power(eq1.value, d), eq2.value)
            combined = Equation(value, eq1.pattern * d + eq2.pattern)
        if _solutions(target, combined, variables, bounds) == wanted:
            return d, combined
    raise RuntimeError("no combining exponent found below the termination bound")


def reduce_finite_subset(target: Target, equations, bounds) -> Equation:
    """Left-fold of ``combine_pair``: one equation whose in-bounds solution
    set is the intersection of all the inputs'."""
    if not equations:
        raise ValueError("need at least one equation")
    combined = equations[0]
    for eq in equations[1:]:
        _, combined = combine_pair(target, combined, eq, bounds)
    return combined


def verify_homomorphism(target: Target, assignment: dict, presentation) -> tuple:
    """(True, None) if every defining relation holds under the assignment,
    else (False, first failing relation)."""
    for lhs, rhs in presentation.relations:
        if evaluate(target, lhs, assignment) != evaluate(target, rhs, assignment):
            return False, (lhs, rhs)
    return True, None


def _size_lower_bound(target, value):
    """A monotone size used for pruning partial assignments."""
    kind = target.kind
    if kind in _ADDITIVE_INT_KINDS or kind == "rational":
        return value
    if kind in ("free", "subfree"):
        return len(value)
    return None  # freecomm handled componentwise


def _partial_exceeds(target, equation, assignment) -> bool:
    """True when the assigned symbols alone already overshoot the value."""
    kind = target.kind
    if kind == "freecomm":
        total = [0] * len(equation.value)
        for symbol in equation.pattern:
            value = assignment.get(symbol)
            if value is not None:
                total = [t + v for t, v in zip(total, value)]
        return any(t > limit for t, limit in zip(total, equation.value))
    limit = _size_lower_bound(target, equation.value)
    total = 0
    for symbol in equation.pattern:
        value = assignment.get(symbol)
        if value is not None:
            total += _size_lower_bound(target, value)
    return total > limit


def extend_homomorphism(
    inst: ProblemInstance,
    length_bound: int | None = None,
    count_bound: int = 10_000,
) -> SolveReport:
    """Decide existence of a homomorphism extension matching all probes.

    Complete for finite generator sets: any valid extension maps each
    generator to a divisor of every covering probe value, so the search
    space is the product of the finite domain bounds.  Deterministic:
    generators in declaration order, candidate values in canonical order,
    first solution returned.
    """
    violations = validate_instance(inst)
    if violations:
        raise ValueError(
            "invalid instance: " + "; ".join(str(v) for v in violations)
        )
    target = inst.target
    bounds = domain_bounds(inst)
    for g in inst.presentation.generators:
        if not bounds.get(g):
            return SolveReport(
                None,
                reason=f"no candidate values for generator {g!r}: "
                "its probe values share no common divisor",
            )

    probes = derived_probes(inst, length_bound, count_bound)
    equations = tuple(
        dict.fromkeys(Equation(p.value, p.word) for p in probes)
    )

    checked = 0
    for report in realization_check(target, equations, bounds):
        checked += 1
        if not report.solvable:
            return SolveReport(
                None,
                reason="realization failed: "
                + render_equation(target, report.equation),
                failing=report.equation,
                equations_checked=checked,
            )

    # Relations join the constraint pool as pairs of patterns to compare.
    generators = inst.presentation.generators
    order = {g: i for i, g in enumerate(generators)}
    constraints = []
    for eq in equations:
        last = max(order[s] for s in eq.pattern)
        constraints.append(("equation", eq, last))
    for lhs, rhs in inst.presentation.relations:
        last = max(order[s] for s in lhs + rhs)
        constraints.append(("relation", (lhs, rhs), last))

    by_trigger: dict = {}
    for kind, payload, last in constraints:
        by_trigger.setdefault(last, []).append((kind, payload))

    nodes = 0
    checks = checked
    assignment: dict = {}

    def open_equations(depth: int):
        for kind, payload, last in constraints:
            if kind == "equation" and last > depth:
                yield payload

    def search(depth: int) -> bool:
        nonlocal nodes, checks
        if depth == len(generators):
            return True
        symbol = generators[depth]
        for value in bounds[symbol]:
            assignment[symbol] = value
            nodes += 1
            ok = True
            for kind, payload in by_trigger.get(depth, ()):
                checks += 1
                if kind == "equation":
                    if evaluate(target, payload.pattern, assignment) != payload.value:
                        ok = False
                        break
                else:
                    lhs, rhs = payload
                    if evaluate(target, lhs, assignment) != evaluate(
                        target, rhs, assignment
                    ):
                        ok = False
                        break
            if ok:
                for equation in open_equations(depth):
                    if _partial_exceeds(target, equation, assignment):
                        ok = False
                        break
            if ok and search(depth + 1):
                return True
            del assignment[symbol]
        return False

    if search(0):
        found = dict(assignment)
        return SolveReport(found, nodes_visited=nodes, equations_checked=checks)
    return SolveReport(
        None,
        reason="exhausted search over the divisor-bound domains",
        nodes_visited=nodes,
        equations_checked=checks,
    )
