"""Finitely presented source semigroups, probe data and bounded rewriting.

A presentation fixes single-character generator symbols and a finite list of
word relations.  Probes pair a target value with a source word; an instance
bundles a presentation, a target and probes.  Bounded breadth-first rewriting
enumerates words provably equal to a given word, each carrying a replayable
trace of the relation applications that produced it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .targets import Target

DEFAULT_COUNT_BOUND = 10_000


@dataclass(frozen=True)
class Presentation:
    """Generators and defining relations of the source semigroup."""

    generators: tuple
    relations: tuple = ()

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator symbols must be distinct")
        for g in self.generators:
            if not (isinstance(g, str) and len(g) == 1):
                raise ValueError(f"generators must be single characters, got {g!r}")
        object.__setattr__(self, "relations", _normalize_relations(self.relations))


def _normalize_relations(relations) -> tuple:
    """Drop trivial relations and symmetric or exact duplicates."""
    seen = set()
    kept = []
    for lhs, rhs in relations:
        if lhs == rhs:
            continue
        key = (lhs, rhs) if lhs <= rhs else (rhs, lhs)
        if key in seen:
            continue
        seen.add(key)
        kept.append((lhs, rhs))
    return tuple(kept)


@dataclass(frozen=True)
class Probe:
    """A known target value paired with the source word it must equal."""

    value: object
    word: str


@dataclass(frozen=True)
class ProblemInstance:
    presentation: Presentation
    target: Target
    probes: tuple


@dataclass(frozen=True)
class Violation:
    """One validation failure; ``kind`` is machine-readable."""

    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


def validate_instance(inst: ProblemInstance) -> tuple:
    """All violations in the instance; an empty tuple means valid.

    Checks that every word is nonempty over the declared generators, that
    every probe value is a valid target element, and that every generator
    occurs in at least one probe word (without that coverage the generator
    would have no divisor-derived candidate set downstream).
    """
    violations = []
    symbols = set(inst.presentation.generators)

    def check_word(w, where):
        if not isinstance(w, str) or not w:
            violations.append(Violation("empty-word", f"{where} is empty"))
            return
        for ch in w:
            if ch not in symbols:
                violations.append(
                    Violation("unknown-symbol", f"{where} uses undeclared symbol {ch!r}")
                )

    for i, (lhs, rhs) in enumerate(inst.presentation.relations):
        check_word(lhs, f"relation {i + 1} left side")
        check_word(rhs, f"relation {i + 1} right side")

    if not inst.probes:
        violations.append(Violation("empty-word", "instance has no probes"))
    for i, probe in enumerate(inst.probes):
        check_word(probe.word, f"probe {i + 1} word")
        try:
            inst.target.validate(probe.value)
        except ValueError as exc:
            violations.append(
                Violation("invalid-target-element", f"probe {i + 1}: {exc}")
            )

    covered = set()
    for probe in inst.probes:
        if isinstance(probe.word, str):
            covered.update(probe.word)
    for g in inst.presentation.generators:
        if g not in covered:
            violations.append(
                Violation("missing-coverage", f"generator {g!r} occurs in no probe word")
            )
    return tuple(violations)


@dataclass(frozen=True)
class RewriteStep:
    """One relation application: replace ``relation``'s matched side at
    ``position`` by the other side (``forward`` = left-to-right)."""

    relation: int
    forward: bool
    position: int


@dataclass(frozen=True)
class DerivedWord:
    word: str
    steps: tuple = field(default_factory=tuple)


def apply_step(pres: Presentation, word: str, step: RewriteStep) -> str:
    lhs, rhs = pres.relations[step.relation]
    src, dst = (lhs, rhs) if step.forward else (rhs, lhs)
    end = step.position + len(src)
    if word[step.position:end] != src:
        raise ValueError(
            f"step does not apply: {src!r} not at position {step.position} of {word!r}"
        )
    return word[: step.position] + dst + word[end:]


def replay_steps(pres: Presentation, word: str, steps) -> str:
    """Replay a rewrite trace from ``word``; raises if any step misapplies."""
    for step in steps:
        word = apply_step(pres, word, step)
    return word


def rewrite_closure(
    pres: Presentation,
    word: str,
    length_bound: int,
    count_bound: int = DEFAULT_COUNT_BOUND,
) -> tuple:
    """Words provably equal to ``word``, found by breadth-first application
    of the relations at every position in both directions.

    The result always contains ``word`` itself, is capped by ``length_bound``
    on word length and ``count_bound`` on the number of distinct words, and
    is returned sorted length-then-lexicographically.  Each entry carries the
    first-found trace from ``word``.
    """
    if length_bound < 1 or count_bound < 1:
        raise ValueError("rewrite bounds must be positive")
    seen = {word: ()}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for idx, (lhs, rhs) in enumerate(pres.relations):
            for src, forward in ((lhs, True), (rhs, False)):
                start = 0
                while True:
                    pos = current.find(src, start)
                    if pos < 0:
                        break
                    step = RewriteStep(idx, forward, pos)
                    there = apply_step(pres, current, step)
                    if len(there) <= length_bound and there not in seen:
                        if len(seen) >= count_bound:
                            return _closure_result(seen)
                        seen[there] = seen[current] + (step,)
                        queue.append(there)
                    start = pos + 1
    return _closure_result(seen)


def _closure_result(seen: dict) -> tuple:
    ordered = sorted(seen.items(), key=lambda item: (len(item[0]), item[0]))
    return tuple(DerivedWord(w, steps) for w, steps in ordered)


def default_length_bound(inst: ProblemInstance) -> int:
    return 2 * max(len(p.word) for p in inst.probes)


def derived_probes(
    inst: ProblemInstance,
    length_bound: int | None = None,
    count_bound: int = DEFAULT_COUNT_BOUND,
) -> tuple:
    """The instance's probes enriched with every bounded rewrite of each
    probe word, carrying the same value.  Deduplicated, original order first."""
    if length_bound is None:
        length_bound = default_length_bound(inst)
    out = []
    seen = set()
    for probe in inst.probes:
        key = (probe.word, probe.value)
        if key not in seen:
            seen.add(key)
            out.append(probe)
    for probe in inst.probes:
        for derived in rewrite_closure(
            inst.presentation, probe.word, length_bound, count_bound
        ):
            key = (derived.word, probe.value)
            if key not in seen:
                seen.add(key)
                out.append(Probe(probe.value, derived.word))
    return tuple(out)
