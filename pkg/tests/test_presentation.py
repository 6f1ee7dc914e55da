"""Presentations, probes, validation and bounded rewriting."""

import itertools

import pytest

from semidiv.presentation import (
    Presentation,
    Probe,
    ProblemInstance,
    derived_probes,
    replay_steps,
    rewrite_closure,
    validate_instance,
)
from semidiv.targets import FreeCommTarget, NatTarget

NAT = NatTarget()


def _fixpoint_closure(relations, word, length_bound):
    """Independent oracle: saturate a set by single rewrites, no traces."""
    words = {word}
    while True:
        fresh = set()
        for w in words:
            for lhs, rhs in relations:
                for src, dst in ((lhs, rhs), (rhs, lhs)):
                    for i in range(len(w) - len(src) + 1):
                        if w[i:i + len(src)] == src:
                            new = w[:i] + dst + w[i + len(src):]
                            if len(new) <= length_bound and new not in words:
                                fresh.add(new)
        if not fresh:
            return words
        words |= fresh


def test_presentation_normalizes_relations():
    pres = Presentation(("x", "y"), (("xy", "yx"), ("yx", "xy"), ("xy", "xy")))
    assert pres.relations == (("xy", "yx"),)


def test_presentation_structural_errors():
    with pytest.raises(ValueError):
        Presentation(())
    with pytest.raises(ValueError):
        Presentation(("x", "x"))
    with pytest.raises(ValueError):
        Presentation(("xx",))


def test_validate_instance_examples():
    pres = Presentation(("x", "y"))
    only_x = ProblemInstance(pres, NAT, (Probe(3, "xx"),))
    kinds = [v.kind for v in validate_instance(only_x)]
    assert kinds == ["missing-coverage"]

    ok = ProblemInstance(pres, NAT, (Probe(3, "xyx"),))
    assert validate_instance(ok) == ()

    comm = FreeCommTarget(("a", "b"))
    zero = ProblemInstance(pres, comm, (Probe((0, 0), "xy"),))
    kinds = [v.kind for v in validate_instance(zero)]
    assert kinds == ["invalid-target-element"]

    stray = ProblemInstance(pres, NAT, (Probe(1, "xzy"),))
    assert [v.kind for v in validate_instance(stray)] == ["unknown-symbol"]


def test_rewrite_closure_examples():
    swap = Presentation(("x", "y"), (("xy", "yx"),))
    words = {d.word for d in rewrite_closure(swap, "xy", 10, 100)}
    assert words == {"xy", "yx"}

    free = Presentation(("x", "y"))
    assert [d.word for d in rewrite_closure(free, "xyx", 10, 100)] == ["xyx"]

    squares = Presentation(("x",), (("xx", "xxx"),))
    words = {d.word for d in rewrite_closure(squares, "xxx", 5, 100)}
    assert words == {"xx", "xxx", "xxxx", "xxxxx"}
    assert words == _fixpoint_closure(squares.relations, "xxx", 5)


def test_rewrite_closure_matches_fixpoint_oracle():
    pres = Presentation(("x", "y"), (("xy", "yx"), ("xx", "y")))
    for n in range(1, 5):
        for tup in itertools.product("xy", repeat=n):
            word = "".join(tup)
            ours = {d.word for d in rewrite_closure(pres, word, 6, 1000)}
            assert ours == _fixpoint_closure(pres.relations, word, 6)


def test_rewrite_traces_replay():
    pres = Presentation(("x", "y"), (("xy", "yx"), ("xx", "xxx")))
    for derived in rewrite_closure(pres, "xxy", 8, 500):
        assert replay_steps(pres, "xxy", derived.steps) == derived.word


def test_rewrite_closure_contains_input_and_is_monotone():
    pres = Presentation(("x",), (("xx", "xxx"),))
    small = {d.word for d in rewrite_closure(pres, "xx", 4, 100)}
    larger = {d.word for d in rewrite_closure(pres, "xx", 6, 100)}
    more = {d.word for d in rewrite_closure(pres, "xx", 6, 1000)}
    assert "xx" in small
    assert small <= larger <= more


def test_rewrite_closure_respects_count_bound():
    pres = Presentation(("x",), (("xx", "xxx"),))
    out = rewrite_closure(pres, "xx", 50, 5)
    assert len(out) == 5


def test_rewrite_closure_rejects_bad_bounds():
    pres = Presentation(("x",))
    with pytest.raises(ValueError):
        rewrite_closure(pres, "x", 0, 10)
    with pytest.raises(ValueError):
        rewrite_closure(pres, "x", 5, 0)


def test_derived_probes_examples():
    swap = Presentation(("x", "y"), (("xy", "yx"),))
    inst = ProblemInstance(swap, NAT, (Probe(3, "xy"),))
    assert [(p.value, p.word) for p in derived_probes(inst)] == [(3, "xy"), (3, "yx")]

    free = Presentation(("x", "y"))
    inst = ProblemInstance(free, NAT, (Probe(3, "xy"),))
    assert derived_probes(inst) == inst.probes

    squares = Presentation(("x",), (("xx", "xxx"),))
    inst = ProblemInstance(squares, NAT, (Probe(2, "xx"),))
    got = {(p.value, p.word) for p in derived_probes(inst, length_bound=4)}
    assert got == {(2, "xx"), (2, "xxx"), (2, "xxxx")}


def test_derived_probes_default_bound_doubles_longest_word():
    squares = Presentation(("x",), (("xx", "xxx"),))
    inst = ProblemInstance(squares, NAT, (Probe(2, "xxx"),))
    words = {p.word for p in derived_probes(inst)}
    assert max(len(w) for w in words) == 6
