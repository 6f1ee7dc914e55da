"""Line-oriented input grammar for rank and extension problem files.

Rank files::

    # comment
    modules: A B
    relation: R = A + 2 B
    relation: R = 2 A + B

Sides are ``+``-separated terms ``[coeff] name``; ``R`` is reserved for the
distinguished free symbol and needs no declaration.

Extension files::

    target: nat | posnat | scalednat(N) | free[a,b] | freecomm[a,b]
            | subfree[xx,xxx,y] | rational[1/2,2/3]
    generators: x y
    probe: 1 = x y
    srelation: x y = y x

Words are sequences of single-character generator symbols; whitespace
between symbols is optional.  Probe left sides are element literals of the
declared target (numbers, fractions, or words).  ``parse`` then ``format``
then ``parse`` is the identity on valid documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .presentation import Presentation, Probe, ProblemInstance
from .rank import R, RankProblem, vec
from .targets import (
    FreeCommTarget,
    FreeWordTarget,
    NatTarget,
    PosNatTarget,
    RationalAddTarget,
    ScaledNatTarget,
    SubOfFreeTarget,
    Target,
)


class GrammarError(ValueError):
    """A parse failure with the 1-based source line."""

    def __init__(self, line: int, message: str):
        super().__init__(message)
        self.line = line
        self.message = message

    def __str__(self):
        return f"line {self.line}: {self.message}"


def _logical_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _split_directive(number: int, line: str) -> tuple:
    if ":" not in line:
        raise GrammarError(number, f"expected 'keyword: ...', got {line!r}")
    keyword, rest = line.split(":", 1)
    return keyword.strip(), rest.strip()


# ----------------------------------------------------------------------
# target specs and element literals
# ----------------------------------------------------------------------


def parse_target_spec(text: str) -> Target:
    """Build a target from a spec literal such as ``free[a,b]``."""
    spec = text.strip()
    if spec == "nat":
        return NatTarget()
    if spec == "posnat":
        return PosNatTarget()
    if spec.startswith("scalednat(") and spec.endswith(")"):
        body = spec[len("scalednat("):-1].strip()
        try:
            denominator = int(body)
        except ValueError:
            raise ValueError(f"scalednat needs an integer denominator, got {body!r}")
        return ScaledNatTarget(denominator)
    for name, builder in (
        ("free", _build_free),
        ("freecomm", _build_freecomm),
        ("subfree", _build_subfree),
        ("rational", _build_rational),
    ):
        prefix = name + "["
        if spec.startswith(prefix) and spec.endswith("]"):
            items = [s.strip() for s in spec[len(prefix):-1].split(",") if s.strip()]
            return builder(items)
    raise ValueError(f"unknown target spec {text!r}")


def _build_free(items):
    return FreeWordTarget(tuple(items))


def _build_freecomm(items):
    return FreeCommTarget(tuple(items))


def _build_subfree(items):
    if not items:
        raise ValueError("subfree needs at least one generator word")
    alphabet = tuple(sorted({ch for word in items for ch in word}))
    return SubOfFreeTarget(alphabet, tuple(items))


def _build_rational(items):
    return RationalAddTarget(tuple(Fraction(s) for s in items))


def format_target_spec(target: Target) -> str:
    return target.describe()


# ----------------------------------------------------------------------
# extension documents
# ----------------------------------------------------------------------


def _parse_word(number: int, text: str, generators) -> str:
    word = "".join(text.split())
    if not word:
        raise GrammarError(number, "empty word")
    known = set(generators)
    for ch in word:
        if ch not in known:
            raise GrammarError(number, f"undeclared generator symbol {ch!r}")
    return word


def parse_extension_document(text: str) -> ProblemInstance:
    target = None
    generators: tuple | None = None
    probes = []
    relations = []
    for number, line in _logical_lines(text):
        keyword, rest = _split_directive(number, line)
        if keyword == "target":
            try:
                target = parse_target_spec(rest)
            except ValueError as exc:
                raise GrammarError(number, str(exc))
        elif keyword == "generators":
            symbols = tuple(rest.split())
            for sym in symbols:
                if len(sym) != 1:
                    raise GrammarError(
                        number, f"generator symbols are single characters, got {sym!r}"
                    )
            if not symbols:
                raise GrammarError(number, "no generator symbols given")
            if len(set(symbols)) != len(symbols):
                raise GrammarError(number, "duplicate generator symbol")
            generators = symbols
        elif keyword == "probe":
            if target is None or generators is None:
                raise GrammarError(number, "probe before target and generators")
            if "=" not in rest:
                raise GrammarError(number, "probe needs the form '<value> = <word>'")
            literal, word_text = rest.split("=", 1)
            try:
                value = target.parse_element(literal.strip())
            except ValueError as exc:
                raise GrammarError(number, f"bad element literal: {exc}")
            probes.append(Probe(value, _parse_word(number, word_text, generators)))
        elif keyword == "srelation":
            if generators is None:
                raise GrammarError(number, "srelation before generators")
            if "=" not in rest:
                raise GrammarError(number, "srelation needs the form '<word> = <word>'")
            lhs, rhs = rest.split("=", 1)
            relations.append((
                _parse_word(number, lhs, generators),
                _parse_word(number, rhs, generators),
            ))
        else:
            raise GrammarError(number, f"unknown keyword {keyword!r}")
    if target is None:
        raise GrammarError(1, "missing 'target:' line")
    if generators is None:
        raise GrammarError(1, "missing 'generators:' line")
    if not probes:
        raise GrammarError(1, "missing 'probe:' lines")
    return ProblemInstance(
        Presentation(generators, tuple(relations)), target, tuple(probes)
    )


def format_extension_document(inst: ProblemInstance) -> str:
    lines = [
        f"target: {format_target_spec(inst.target)}",
        "generators: " + " ".join(inst.presentation.generators),
    ]
    for probe in inst.probes:
        literal = inst.target.format_element(probe.value)
        lines.append(f"probe: {literal} = " + " ".join(probe.word))
    for lhs, rhs in inst.presentation.relations:
        lines.append(f"srelation: {' '.join(lhs)} = {' '.join(rhs)}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# rank documents
# ----------------------------------------------------------------------


def _parse_sum(number: int, text: str, declared) -> dict:
    vector: dict = {}
    for term in text.split("+"):
        tokens = term.split()
        if not tokens:
            raise GrammarError(number, f"empty term in {text!r}")
        if len(tokens) == 1:
            coeff, name = 1, tokens[0]
        elif len(tokens) == 2:
            try:
                coeff = int(tokens[0])
            except ValueError:
                raise GrammarError(number, f"bad coefficient {tokens[0]!r}")
            name = tokens[1]
        else:
            raise GrammarError(number, f"term {term.strip()!r} is not '[coeff] name'")
        if coeff < 0:
            raise GrammarError(number, f"negative coefficient in {term.strip()!r}")
        if name != R and name not in declared:
            raise GrammarError(number, f"undeclared module {name!r}")
        if coeff:
            vector[name] = vector.get(name, 0) + coeff
    if not vector:
        raise GrammarError(number, f"side {text.strip()!r} is the zero vector")
    return vec(vector)


def parse_rank_document(
    text: str, mode: str = "nonneg", denominator: int = 1
) -> RankProblem:
    modules: tuple | None = None
    relations = []
    for number, line in _logical_lines(text):
        keyword, rest = _split_directive(number, line)
        if keyword == "modules":
            names = tuple(rest.split())
            if len(set(names)) != len(names):
                raise GrammarError(number, "duplicate module label")
            if R in names:
                raise GrammarError(number, f"{R!r} is reserved")
            modules = names
        elif keyword == "relation":
            if modules is None:
                raise GrammarError(number, "relation before modules")
            if "=" not in rest:
                raise GrammarError(number, "relation needs the form '<sum> = <sum>'")
            lhs, rhs = rest.split("=", 1)
            relations.append((
                _parse_sum(number, lhs, modules),
                _parse_sum(number, rhs, modules),
            ))
        else:
            raise GrammarError(number, f"unknown keyword {keyword!r}")
    if modules is None:
        raise GrammarError(1, "missing 'modules:' line")
    return RankProblem(modules, tuple(relations), mode, denominator)


def _format_sum(vector: dict, order) -> str:
    labels = [R] if R in vector else []
    labels += [x for x in order if x in vector]
    terms = []
    for label in labels:
        coeff = vector[label]
        terms.append(label if coeff == 1 else f"{coeff} {label}")
    return " + ".join(terms)


def format_rank_document(problem: RankProblem) -> str:
    lines = ["modules: " + " ".join(problem.modules)]
    for lhs, rhs in problem.relations:
        lines.append(
            "relation: "
            f"{_format_sum(lhs, problem.modules)} = {_format_sum(rhs, problem.modules)}"
        )
    return "\n".join(lines) + "\n"
