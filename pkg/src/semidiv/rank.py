"""Integer-valued rank functions on a finitely presented commutative monoid
of module labels.

A problem lists module labels, relations between natural-number vectors over
the labels plus the reserved symbol ``R``, a mode (nonnegative or positive
values) and a denominator n (values live in (1/n) of the naturals, with
``R`` pinned to 1, i.e. t(R) = n internally).  Every label must appear in at
least one relation whose other side is a pure multiple of ``R``; that shape
bounds any solution and makes the exhaustive search complete.

Nonexistence can be certified by a witness relation: a vector derived from
some c*R by replayable congruence steps whose coefficient multiset cannot
produce n*c as a nonnegative (or positive) integer combination.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

R = "R"

DEFAULT_C_MAX = 8
DEFAULT_NORM_BOUND = 30
DEFAULT_QUEUE_CAP = 100_000

MODES = ("nonneg", "positive")


# ----------------------------------------------------------------------
# vectors as sparse mappings label -> positive coefficient
# ----------------------------------------------------------------------


def vec(mapping: dict) -> dict:
    """Normalized copy: drop zero entries, reject negatives."""
    out = {}
    for label, coeff in mapping.items():
        if coeff < 0:
            raise ValueError(f"negative coefficient for {label}: {coeff}")
        if coeff:
            out[label] = coeff
    return out


def vec_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for label, coeff in b.items():
        out[label] = out.get(label, 0) + coeff
    return out


def vec_dominates(a: dict, b: dict) -> bool:
    return all(a.get(label, 0) >= coeff for label, coeff in b.items())


def vec_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for label, coeff in b.items():
        rest = out[label] - coeff
        if rest:
            out[label] = rest
        else:
            del out[label]
    return out


def vec_norm(a: dict) -> int:
    return sum(a.values())


def vec_key(a: dict) -> tuple:
    return tuple(sorted(a.items()))


def format_vector(a: dict, order) -> str:
    labels = list(order)
    if R in a and R not in labels:
        labels.insert(0, R)
    terms = []
    for label in labels:
        coeff = a.get(label, 0)
        if coeff == 1:
            terms.append(label)
        elif coeff:
            terms.append(f"{coeff} {label}")
    return " + ".join(terms)


# ----------------------------------------------------------------------
# problems, rank functions, witnesses
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RankProblem:
    modules: tuple
    relations: tuple  # pairs of vectors over modules + R
    mode: str = "nonneg"
    denominator: int = 1

    def validate(self) -> list:
        """Structural violations; an empty list means the problem is valid."""
        problems = []
        if self.mode not in MODES:
            problems.append(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.denominator < 1:
            problems.append("denominator must be a positive integer")
        if len(set(self.modules)) != len(self.modules):
            problems.append("module labels must be distinct")
        if R in self.modules:
            problems.append(f"{R!r} is reserved and cannot name a module")
        declared = set(self.modules) | {R}
        for i, (lhs, rhs) in enumerate(self.relations):
            for side, name in ((lhs, "left"), (rhs, "right")):
                if not side:
                    problems.append(f"relation {i + 1} {name} side is zero")
                for label in side:
                    if label not in declared:
                        problems.append(
                            f"relation {i + 1} uses undeclared label {label!r}"
                        )
                if any(c < 0 for c in side.values()):
                    problems.append(f"relation {i + 1} {name} side has a negative entry")
        for module in self.modules:
            if self._resolution_bound(module) is None:
                problems.append(
                    f"module {module!r} has no relation pairing it with a pure"
                    f" multiple of {R}"
                )
        return problems

    def _resolution_bound(self, module) -> int | None:
        """Smallest pure-R coefficient c among relations whose other side
        contains the module; None when no such relation exists."""
        best = None
        for lhs, rhs in self.relations:
            for pure, other in ((lhs, rhs), (rhs, lhs)):
                if set(pure) == {R} and other.get(module, 0) >= 1:
                    c = pure[R]
                    best = c if best is None else min(best, c)
        return best

    def require_valid(self) -> None:
        problems = self.validate()
        if problems:
            raise ValueError("invalid rank problem: " + "; ".join(problems))


@dataclass(frozen=True)
class RankFunction:
    """Values on modules and R, all scaled by the denominator."""

    values: dict  # label -> nonnegative int, includes R
    denominator: int

    def rank(self, label) -> Fraction:
        return Fraction(self.values[label], self.denominator)

    def satisfies(self, problem: RankProblem) -> bool:
        if self.values.get(R) != problem.denominator:
            return False
        if problem.mode == "positive" and any(
            self.values[m] < 1 for m in problem.modules
        ):
            return False
        for lhs, rhs in problem.relations:
            if self._dot(lhs) != self._dot(rhs):
                return False
        return True

    def _dot(self, vector: dict) -> int:
        return sum(self.values[label] * coeff for label, coeff in vector.items())


@dataclass(frozen=True)
class TraceStep:
    """Apply relation ``relation`` (1-based in display, 0-based here) at a
    dominating position; ``forward`` replaces the left side by the right."""

    relation: int
    forward: bool


@dataclass(frozen=True)
class WitnessRelation:
    """A derived relation c*R ~ vector whose coefficients cannot combine
    to n*c; certifies that no rank function exists."""

    c: int
    vector: dict
    trace: tuple


def replay_trace(problem: RankProblem, c: int, trace) -> dict:
    """Replay the congruence steps from the vector c*R; raises ValueError
    if any step fails to apply."""
    current = {R: c}
    for step in trace:
        lhs, rhs = problem.relations[step.relation]
        src, dst = (lhs, rhs) if step.forward else (rhs, lhs)
        if not vec_dominates(current, src):
            raise ValueError(
                f"trace step {step} does not apply to {vec_key(current)}"
            )
        current = vec_add(vec_sub(current, src), dst)
    return current


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------


def numerical_feasible(c: int, coeffs, mode: str = "nonneg") -> tuple | None:
    """Multipliers t with sum(t_i * coeffs_i) == c, or None.

    ``nonneg`` asks for t_i >= 0, ``positive`` for t_i >= 1; zero
    coefficients never contribute (they get t_i = 0, or the forced 1 in
    positive mode).  Dynamic programming over the residual value.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if c < 0 or any(x < 0 for x in coeffs):
        raise ValueError("values must be nonnegative integers")
    coeffs = tuple(coeffs)
    base = [0] * len(coeffs)
    residual = c
    if mode == "positive":
        residual = c - sum(coeffs)
        if residual < 0:
            return None
        base = [1] * len(coeffs)
    coins = [(i, x) for i, x in enumerate(coeffs) if x > 0]
    chosen = [None] * (residual + 1)
    reachable = [False] * (residual + 1)
    reachable[0] = True
    for value in range(1, residual + 1):
        for i, x in coins:
            if x <= value and reachable[value - x]:
                reachable[value] = True
                chosen[value] = i
                break
    if not reachable[residual]:
        return None
    counts = list(base)
    value = residual
    while value:
        i = chosen[value]
        counts[i] += 1
        value -= coeffs[i]
    return tuple(counts)


def find_rank_function(problem: RankProblem) -> RankFunction | None:
    """Exhaustive deterministic search for a rank function.

    Each module's value is capped by n*c from its pure-R relation (a
    summand's value cannot exceed the whole free side), so the product
    space is finite and covers every possible rank function; the
    lexicographically smallest solution is returned, None being a complete
    nonexistence verdict.
    """
    problem.require_valid()
    n = problem.denominator
    low = 1 if problem.mode == "positive" else 0
    ranges = []
    for module in problem.modules:
        cap = n * problem._resolution_bound(module)
        if cap < low:
            return None
        ranges.append(range(low, cap + 1))
    for combo in itertools.product(*ranges):
        values = dict(zip(problem.modules, combo))
        values[R] = n
        candidate = RankFunction(values, n)
        if all(
            candidate._dot(lhs) == candidate._dot(rhs)
            for lhs, rhs in problem.relations
        ):
            return candidate
    return None


def _entries(problem: RankProblem, vector: dict) -> list:
    order = list(problem.modules) + [R]
    return [vector[label] for label in order if label in vector]


def _witness_check(problem: RankProblem, c: int, vector: dict) -> bool:
    """True when n*c is not a mode-matched combination of the coefficients."""
    n = problem.denominator
    return numerical_feasible(n * c, _entries(problem, vector), problem.mode) is None


def find_witness(
    problem: RankProblem,
    c_max: int = DEFAULT_C_MAX,
    norm_bound: int = DEFAULT_NORM_BOUND,
    queue_cap: int = DEFAULT_QUEUE_CAP,
) -> WitnessRelation | None:
    """Bounded congruence closure searching for an infeasible derived
    relation c*R ~ w.

    Breadth-first from the seed vectors c*R for c = 1..c_max; moves are
    relation applications at dominating positions in either direction, plus
    additions of pure-R relations (which grow c while the replayed trace
    stays a chain of dominating applications).  The first derived pair
    failing the feasibility check is returned with its trace; None means
    the bounds were exhausted without finding one.
    """
    problem.require_valid()
    if c_max < 1 or norm_bound < 1 or queue_cap < 1:
        raise ValueError("witness-search bounds must be positive")

    pure_r = []
    for idx, (lhs, rhs) in enumerate(problem.relations):
        if set(lhs) == {R}:
            pure_r.append((idx, True, lhs[R], rhs))
        if set(rhs) == {R}:
            pure_r.append((idx, False, rhs[R], lhs))

    queue: deque = deque()
    visited = set()
    pushed = 0
    witness: list = []

    def push(c: int, vector: dict, trace: tuple) -> bool:
        nonlocal pushed
        key = (c, vec_key(vector))
        if key in visited or pushed >= queue_cap:
            return False
        visited.add(key)
        pushed += 1
        if _witness_check(problem, c, vector):
            witness.append(WitnessRelation(c, vector, trace))
            return True
        queue.append((c, vector, trace))
        return False

    for c in range(1, c_max + 1):
        if push(c, {R: c}, ()):
            return witness[0]

    while queue:
        c, vector, trace = queue.popleft()
        for idx, (lhs, rhs) in enumerate(problem.relations):
            for src, dst, forward in ((lhs, rhs, True), (rhs, lhs, False)):
                if not vec_dominates(vector, src):
                    continue
                there = vec_add(vec_sub(vector, src), dst)
                if vec_norm(there) > norm_bound:
                    continue
                if push(c, there, trace + (TraceStep(idx, forward),)):
                    return witness[0]
        for idx, forward, k, other in pure_r:
            if c + k > c_max:
                continue
            there = vec_add(vector, other)
            if vec_norm(there) > norm_bound:
                continue
            if push(c + k, there, (TraceStep(idx, forward),) + trace):
                return witness[0]
    return None


@dataclass(frozen=True)
class RankDecision:
    rank_function: RankFunction | None
    witness: WitnessRelation | None = None

    @property
    def exists(self) -> bool:
        return self.rank_function is not None


def decide(
    problem: RankProblem,
    c_max: int = DEFAULT_C_MAX,
    norm_bound: int = DEFAULT_NORM_BOUND,
    queue_cap: int = DEFAULT_QUEUE_CAP,
) -> RankDecision:
    """Existence verdict with certificates.

    The verdict itself rests on the complete bounded search of
    ``find_rank_function``; a nonexistence verdict is enriched with a
    witness relation when one is found within the given bounds, and stands
    either way.
    """
    found = find_rank_function(problem)
    if found is not None:
        return RankDecision(found)
    return RankDecision(None, find_witness(problem, c_max, norm_bound, queue_cap))
