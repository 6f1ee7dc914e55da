"""Target semigroups: operations, divisor witnesses, weak-divisor forms."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semidiv.targets import (
    FreeCommTarget,
    FreeWordTarget,
    NatTarget,
    PosNatTarget,
    RationalAddTarget,
    ScaledNatTarget,
    SubOfFreeTarget,
    _convex_dominates,
    recompose,
)

from oracles import naive_weak_divisor_exponent, naive_weak_divisors

NAT = NatTarget()
POS = PosNatTarget()
THIRDS = ScaledNatTarget(3)
FREE = FreeWordTarget(("a", "b"))
COMM = FreeCommTarget(("a", "b"))
SUB = SubOfFreeTarget(("x", "y"), ("xx", "xxx", "y"))
RAT = RationalAddTarget((Fraction(1, 2), Fraction(2, 3)))

CATALOG = [
    (NAT, [0, 1, 2, 3, 5]),
    (POS, [1, 2, 3, 5]),
    (THIRDS, [0, 1, 2, 5, 6]),
    (FREE, ["a", "b", "ab", "ba", "aba"]),
    (COMM, [(1, 0), (0, 1), (1, 1), (2, 1)]),
    (SUB, ["y", "xx", "xxx", "xxy", "xxxy"]),
    (RAT, [Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(7, 6)]),
]


def test_multiply_examples():
    assert NAT.multiply(2, 3) == 5
    assert FREE.multiply("ab", "ba") == "abba"
    assert COMM.multiply((1, 0), (0, 2)) == (1, 2)
    assert RAT.multiply(Fraction(1, 2), Fraction(2, 3)) == Fraction(7, 6)


def test_power_examples():
    assert NAT.power(2, 3) == 6
    assert FREE.power("ab", 2) == "abab"
    for target, elements in CATALOG:
        for x in elements:
            assert target.power(x, 1) == x
    with pytest.raises(ValueError):
        NAT.power(2, 0)


def test_divisor_examples():
    assert NAT.is_divisor(2, 5) == (None, 3)
    assert FREE.is_divisor("ba", "abab") == ("a", "b")
    # both cuts of xx inside xxxy leave a non-member flank
    assert SUB.is_divisor("xx", "xxxy") is None


def test_divisors_examples():
    assert NAT.divisors(3) == (0, 1, 2, 3)
    assert POS.divisors(3) == (1, 2, 3)
    assert FREE.divisors("ab") == ("a", "b", "ab")
    assert COMM.divisors((1, 1)) == ((0, 1), (1, 0), (1, 1))
    assert SUB.divisors("xxxy") == ("y", "xxx", "xxxy")
    assert RAT.divisors(Fraction(1)) == (Fraction(1, 2), Fraction(1))


def test_divisor_witnesses_recompose():
    for target, elements in CATALOG:
        for t in elements:
            divisors = target.divisors(t)
            assert len(set(divisors)) == len(divisors)
            for s in divisors:
                flanks = target.is_divisor(s, t)
                assert flanks is not None
                assert recompose(target, flanks[0], s, flanks[1]) == t
            # anything outside the divisor set must get no witness
            for s in elements:
                if s not in divisors:
                    assert target.is_divisor(s, t) is None


def test_divisors_are_weak_divisors_at_one():
    for target, elements in CATALOG:
        for t in elements:
            for s in target.divisors(t):
                verdict = target.is_weak_divisor(s, (t,), 1)
                assert verdict.is_yes and verdict.exponent == 1


def test_canonical_order():
    for target, elements in CATALOG:
        for t in elements:
            out = target.divisors(t)
            assert list(out) == sorted(out, key=target.sort_key)


# ----------------------------------------------------------------------
# subsemigroup membership
# ----------------------------------------------------------------------


def _naive_member(generators, word):
    if word == "":
        return False
    return any(
        word == g or (word.startswith(g) and _naive_member(generators, word[len(g):]))
        for g in generators
    )


def test_subfree_membership_examples():
    assert SUB.is_member("xxy")
    assert not SUB.is_member("xy")
    assert SUB.is_member("xxxxx")


def test_subfree_membership_matches_naive():
    for n in range(1, 8):
        for tup in itertools.product("xy", repeat=n):
            word = "".join(tup)
            assert SUB.is_member(word) == _naive_member(SUB.generators, word)


def test_subfree_member_characterization():
    # every x must be adjacent to another x
    for n in range(1, 8):
        for tup in itertools.product("xy", repeat=n):
            word = "".join(tup)
            lonely = any(
                ch == "x"
                and (i == 0 or word[i - 1] != "x")
                and (i == n - 1 or word[i + 1] != "x")
                for i, ch in enumerate(word)
            )
            assert SUB.is_member(word) == (not lonely)


# ----------------------------------------------------------------------
# weak divisors
# ----------------------------------------------------------------------


def test_weak_divisor_examples():
    assert NAT.is_weak_divisor(2, (3,), 4) == NAT.is_weak_divisor(2, (3,), 1)
    assert NAT.is_weak_divisor(2, (3,), 4).exponent == 1
    verdict = SUB.is_weak_divisor("xx", ("xxx",), 4)
    assert verdict.is_yes and verdict.exponent == 2
    assert SUB.is_weak_divisor("xx", ("xxxy",), 6).status == "no-within-bound"


def test_weak_divisor_witness_replays():
    cases = [
        (NAT, 2, (3, 5)),
        (COMM, (1, 1), ((2, 1), (1, 2))),
        (SUB, "xx", ("xxx",)),
        (RAT, Fraction(1, 2), (Fraction(7, 6),)),
    ]
    for target, s, members in cases:
        verdict = target.is_weak_divisor(s, members, 6)
        assert verdict.is_yes
        product = verdict.factors[0]
        for m in verdict.factors[1:]:
            product = target.multiply(product, m)
        assert all(m in members for m in verdict.factors)
        assert len(verdict.factors) == verdict.exponent
        power = target.power(s, verdict.exponent)
        assert recompose(target, verdict.flanks[0], power, verdict.flanks[1]) == product


def test_weak_divisors_nat_closed_form_vs_brute():
    # brute force over d <= 4 agrees with the closed form s <= max
    result = NAT.weak_divisors((2, 3), 4)
    assert result.elements == (0, 1, 2, 3) and result.exact
    scanned = naive_weak_divisors(NAT, (2, 3), range(0, 8), 4)
    assert scanned == set(result.elements)


@given(st.sets(st.integers(min_value=0, max_value=8), min_size=1, max_size=3))
def test_weak_divisors_nat_property(members):
    members = tuple(sorted(members))
    result = NAT.weak_divisors(members, 3)
    assert result.elements == tuple(range(max(members) + 1))
    scanned = naive_weak_divisors(NAT, members, range(0, 12), 3)
    assert scanned == set(result.elements)


_words = st.text(alphabet="ab", min_size=1, max_size=6)


@given(_words, _words)
def test_freeword_divisor_witness_property(s, t):
    flanks = FREE.is_divisor(s, t)
    if flanks is None:
        assert s not in t
    else:
        assert recompose(FREE, flanks[0], s, flanks[1]) == t


def test_weak_divisors_nat_monotone():
    small = NAT.weak_divisors((2,), 3).elements
    large = NAT.weak_divisors((2, 3), 3).elements
    assert set(small) <= set(large)


def test_weak_divisors_freeword_matches_factors():
    result = FREE.weak_divisors(("ab",), 4)
    assert result.elements == ("a", "b", "ab") and result.exact
    words = ["a", "b", "ab", "ba", "aab", "abab"]
    for pair in itertools.combinations(words, 2):
        closed = set(FREE.weak_divisors(pair, 3).elements)
        factors = set(FREE.divisors(pair[0])) | set(FREE.divisors(pair[1]))
        assert closed == factors
        candidates = [
            "".join(t) for n in range(1, 5) for t in itertools.product("ab", repeat=n)
        ]
        assert naive_weak_divisors(FREE, pair, candidates, 3) == closed


def test_weak_divisors_freecomm_example():
    result = COMM.weak_divisors(((1, 1),), 4)
    assert result.elements == ((0, 1), (1, 0), (1, 1)) and result.exact
    scanned = naive_weak_divisors(
        COMM, ((1, 1),), [v for v in itertools.product(range(4), repeat=2) if any(v)], 4
    )
    assert scanned == set(result.elements)


def test_freecomm_convex_test_vs_scan():
    # the inequality test must agree with a deep naive scan
    vectors = [v for v in itertools.product(range(4), repeat=2) if any(v)]
    member_sets = [((3, 1), (1, 3)), ((2, 0), (0, 2)), ((3, 0),), ((2, 1), (1, 2))]
    for members in member_sets:
        for s in vectors:
            verdict = COMM.is_weak_divisor(s, members, 4)
            deep = naive_weak_divisor_exponent(COMM, s, members, 12)
            if verdict.is_yes:
                assert deep is not None and deep <= verdict.exponent
            else:
                assert verdict.status == "no"
                assert deep is None


def test_freecomm_weak_divisors_idempotent_small():
    for members in [((2, 1),), ((1, 2), (2, 1)), ((3, 0), (0, 2))]:
        once = COMM.weak_divisors(members, 4)
        twice = COMM.weak_divisors(once.elements, 4)
        assert once.elements == twice.elements


def _deduped_scan_exponent(target, s, members, d_max):
    layer = set(members)
    for d in range(1, d_max + 1):
        if d > 1:
            layer = {target.multiply(p, m) for p in layer for m in members}
        sd = target.power(s, d)
        if any(target.is_divisor(sd, v) is not None for v in layer):
            return d
    return None


def test_freecomm_convex_test_vs_scan_3dim():
    import random

    rng = random.Random(314)
    comm3 = FreeCommTarget(("a", "b", "c"))
    for _ in range(60):
        members = []
        while len(members) < rng.randint(1, 4):
            v = tuple(rng.randint(0, 3) for _ in range(3))
            if any(v) and v not in members:
                members.append(v)
        s = (rng.randint(0, 3), rng.randint(0, 3), rng.randint(1, 3))
        verdict = comm3.is_weak_divisor(s, tuple(members), 4)
        deep = _deduped_scan_exponent(comm3, s, members, 14)
        if verdict.is_yes:
            assert deep is not None and deep <= verdict.exponent
        else:
            assert verdict.status == "no" and deep is None


def test_subfree_weak_divisors_flagged_approximate():
    result = SUB.weak_divisors(("xxxy",), 6)
    assert result.elements == ("y", "xxx", "xxxy")
    assert not result.exact


def test_rational_weak_divisors_closed_form():
    result = RAT.weak_divisors((Fraction(1),), 6)
    assert result.elements == (Fraction(1, 2), Fraction(2, 3), Fraction(1))
    assert result.exact
    # small witnesses exist here, so the naive scan agrees exactly
    scanned = naive_weak_divisors(
        RAT, (Fraction(1),), RAT.elements_up_to(Fraction(1)), 6
    )
    assert scanned == set(result.elements)


def test_rational_semigroup_contains_integers():
    gens = tuple(Fraction(n, n + 1) for n in range(1, 4))
    target = RationalAddTarget(gens)
    for k in range(1, 6):
        assert target.is_member(Fraction(k))


def test_weak_divisor_rejects_bad_bounds():
    with pytest.raises(ValueError):
        NAT.is_weak_divisor(1, (2,), 0)
    with pytest.raises(ValueError):
        NAT.is_weak_divisor(1, (), 3)


# ----------------------------------------------------------------------
# the exact convex test itself
# ----------------------------------------------------------------------


def test_convex_dominates_hand_cases():
    assert _convex_dominates([(3, 1), (1, 3)], (2, 2))
    assert not _convex_dominates([(3, 1), (1, 3)], (3, 3))
    assert _convex_dominates([(2, 2)], (1, 1))
    assert not _convex_dominates([(0, 3), (3, 0)], (2, 2))
    assert _convex_dominates([(0, 3), (3, 0)], (1, 2))
    assert _convex_dominates([(1, 0, 2), (2, 2, 0)], (1, 1, 1))


# ----------------------------------------------------------------------
# validation
# ----------------------------------------------------------------------


def test_element_validation():
    with pytest.raises(ValueError):
        NAT.validate(-1)
    with pytest.raises(ValueError):
        POS.validate(0)
    with pytest.raises(ValueError):
        COMM.validate((0, 0))
    with pytest.raises(ValueError):
        FREE.validate("")
    with pytest.raises(ValueError):
        FREE.validate("ac")
    with pytest.raises(ValueError):
        SUB.validate("xy")
    with pytest.raises(ValueError):
        RAT.validate(Fraction(1, 3))
    with pytest.raises(ValueError):
        RAT.validate(0.5)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        FreeWordTarget(())
    with pytest.raises(ValueError):
        FreeWordTarget(("a", "a"))
    with pytest.raises(ValueError):
        SubOfFreeTarget(("x",), ("",))
    with pytest.raises(ValueError):
        RationalAddTarget((Fraction(-1, 2),))
    with pytest.raises(ValueError):
        ScaledNatTarget(0)


def test_parse_format_roundtrip():
    for target, elements in CATALOG:
        for x in elements:
            assert target.parse_element(target.format_element(x)) == x


def test_scalednat_literals():
    assert THIRDS.parse_element("2/3") == 2
    assert THIRDS.parse_element("2") == 6
    assert THIRDS.format_element(5) == "5/3"
    assert THIRDS.format_element(6) == "2"
    with pytest.raises(ValueError):
        THIRDS.parse_element("1/2")
