"""Worked examples and sample-checked laws for the weak-divisor machinery.

Each suite returns a ``LabReport`` whose assertions carry their own
recomputable evidence: verified claims embed witnesses, bound-limited
claims record the bound, and a failed claim (never expected) embeds a
concrete counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

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

VERIFIED = "verified"
VERIFIED_AT_BOUND = "verified-at-bound"
FAILED = "failed"


@dataclass(frozen=True)
class Assertion:
    name: str
    status: str
    bound: int | None = None
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "bound": self.bound,
            "evidence": _jsonable(self.evidence),
        }


@dataclass(frozen=True)
class LabReport:
    suite: str
    assertions: tuple

    @property
    def ok(self) -> bool:
        return all(a.status != FAILED for a in self.assertions)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "assertions": [a.to_dict() for a in self.assertions],
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    return value


# ----------------------------------------------------------------------
# rational additive semigroups
# ----------------------------------------------------------------------


def rational_elements(generators, ceiling) -> list:
    """All nonempty natural combinations of the generators with value at
    most ``ceiling``, exact and sorted ascending."""
    gens = tuple(sorted({Fraction(g) for g in generators}))
    if not gens:
        return []
    if any(g <= 0 for g in gens):
        raise ValueError("generators must be positive rationals")
    return list(RationalAddTarget(gens).elements_up_to(Fraction(ceiling)))


def unit_fraction_generators(k: int) -> tuple:
    """The generators n/(n+1) for n = 1..k."""
    if k < 1:
        raise ValueError("need at least one generator")
    return tuple(Fraction(n, n + 1) for n in range(1, k + 1))


def weak_divisors_of_one(k: int, d_max: int) -> tuple:
    """Weak divisors of {1} in the semigroup generated by n/(n+1) for
    n <= k, found with exponents up to d_max, sorted ascending.

    Candidates are the elements of value at most 1; for each, the scan
    looks for an exponent d whose slack d*(1 - s) stays in the semigroup,
    replaying the common-denominator padding argument at small scale.
    """
    target = RationalAddTarget(unit_fraction_generators(k))
    one = Fraction(1)
    found = [
        s
        for s in target.elements_up_to(one)
        if target.is_weak_divisor(s, (one,), d_max).is_yes
    ]
    return tuple(found)


# ----------------------------------------------------------------------
# ordered-semigroup laws
# ----------------------------------------------------------------------

_ORDERED_KINDS = ("nat", "posnat", "scalednat", "rational")


def _ordered_sample(target: Target, sample_bound: int) -> list:
    if target.kind == "nat":
        return list(range(sample_bound + 1))
    if target.kind == "posnat":
        return list(range(1, sample_bound + 1))
    if target.kind == "scalednat":
        return list(range(sample_bound * target.denominator + 1))
    return list(target.elements_up_to(Fraction(sample_bound)))


def _value(target: Target, x):
    if target.kind == "scalednat":
        return target.value_of(x)
    return Fraction(x)


def check_ordered_laws(target: Target, sample_bound: int = 20) -> LabReport:
    """Sample-check three laws that hold in semigroups ordered like the
    naturals: idempotents are identities, products strictly grow, and
    divisors never exceed what they divide."""
    if target.kind not in _ORDERED_KINDS:
        raise ValueError(f"ordered-law checks do not support kind {target.kind!r}")
    sample = _ordered_sample(target, sample_bound)
    assertions = []

    idempotents = [e for e in sample if target.multiply(e, e) == e]
    bad = [
        (e, a)
        for e in idempotents
        for a in sample
        if target.multiply(e, a) != a
    ]
    assertions.append(_law(
        "idempotents-are-identities",
        not bad,
        {"sample_bound": sample_bound, "checked": len(sample) * max(len(idempotents), 1),
         "idempotents": [target.format_element(e) for e in idempotents]},
        bad and {"counterexample": [target.format_element(x) for x in bad[0]]},
    ))

    identity_values = set(idempotents)
    bad = [
        (a, b)
        for a in sample
        for b in sample
        if a not in identity_values and _value(target, target.multiply(a, b)) <= _value(target, b)
    ]
    assertions.append(_law(
        "products-strictly-grow",
        not bad,
        {"sample_bound": sample_bound, "checked": len(sample) ** 2},
        bad and {"counterexample": [target.format_element(x) for x in bad[0]]},
    ))

    bad = [
        (a, b)
        for a in sample
        for b in sample
        if target.is_divisor(a, b) is not None and _value(target, a) > _value(target, b)
    ]
    assertions.append(_law(
        "divisor-implies-below",
        not bad,
        {"sample_bound": sample_bound, "checked": len(sample) ** 2},
        bad and {"counterexample": [target.format_element(x) for x in bad[0]]},
    ))
    return LabReport("ordered-laws", tuple(assertions))


def _law(name, ok, evidence, failure) -> Assertion:
    if ok:
        return Assertion(name, VERIFIED, evidence=evidence)
    return Assertion(name, FAILED, evidence={**evidence, **failure})


# ----------------------------------------------------------------------
# the non-idempotence example
# ----------------------------------------------------------------------


def non_idempotence_demo(d_max: int = 6) -> LabReport:
    """Inside the subsemigroup of a free semigroup generated by xx, xxx
    and y, the weak-divisor operation fails to be idempotent: xx is not a
    weak divisor of {xxxy} (checked up to d_max), yet it is a weak divisor
    of the weak divisors of {xxxy}."""
    target = SubOfFreeTarget(("x", "y"), ("xx", "xxx", "y"))
    word = "xxxy"
    assertions = []

    verdict = target.is_weak_divisor("xx", (word,), d_max)
    blocks = _blocked_cut_counts(target, "xx", word, d_max)
    ok = verdict.status == "no-within-bound" and all(
        failed == total for _, total, failed in blocks
    )
    assertions.append(Assertion(
        "square-not-weak-divisor-of-cube-y",
        VERIFIED_AT_BOUND if ok else FAILED,
        bound=d_max,
        evidence={
            "verdict": verdict.status,
            "cut_checks": [
                {"d": d, "candidate_cuts": total, "rejected": failed}
                for d, total, failed in blocks
            ],
        },
    ))

    verdict = target.is_weak_divisor("xxx", (word,), d_max)
    ok = verdict.is_yes and verdict.exponent == 1
    assertions.append(Assertion(
        "cube-divides-cube-y",
        VERIFIED if ok else FAILED,
        evidence=_witness_evidence(target, "xxx", verdict),
    ))

    first_level = target.weak_divisors((word,), d_max)
    verdict = target.is_weak_divisor("xx", first_level.elements, d_max)
    ok = verdict.is_yes and verdict.exponent == 2
    assertions.append(Assertion(
        "square-is-second-level-weak-divisor",
        VERIFIED if ok else FAILED,
        evidence={
            "first_level": list(first_level.elements),
            **_witness_evidence(target, "xx", verdict),
        },
    ))
    return LabReport("non-idempotence", tuple(assertions))


def _blocked_cut_counts(target, s, word, d_max):
    """For each exponent d, count the occurrences of s^d inside word^d and
    how many are rejected because a flank leaves the subsemigroup."""
    rows = []
    for d in range(1, d_max + 1):
        power = s * d
        product = word * d
        total = failed = 0
        for pos in range(len(product) - len(power) + 1):
            if product[pos:pos + len(power)] != power:
                continue
            total += 1
            left = product[:pos]
            right = product[pos + len(power):]
            if not (target._flank_ok(left) and target._flank_ok(right)):
                failed += 1
        rows.append((d, total, failed))
    return rows


def _witness_evidence(target, s, verdict) -> dict:
    if not verdict.is_yes:
        return {"verdict": verdict.status}
    left, right = verdict.flanks
    return {
        "verdict": "yes",
        "exponent": verdict.exponent,
        "factors": list(verdict.factors),
        "left_flank": left if left is not None else "identity",
        "right_flank": right if right is not None else "identity",
    }


# ----------------------------------------------------------------------
# structural claims: free factors, commutative idempotence
# ----------------------------------------------------------------------


def bounded_weak_divisors(target: Target, members, candidates, d_max: int) -> set:
    """Brute-force weak divisors among ``candidates``: for each exponent
    d <= d_max, test s^d against every distinct d-fold product.  Built only
    from multiply/power/is_divisor, independently of any closed form."""
    members = target.sorted_elements(members)
    found = set()
    products = list(members)
    for d in range(1, d_max + 1):
        if d > 1:
            products = sorted(
                {target.multiply(p, m) for p in products for m in members},
                key=target.sort_key,
            )
        for s in candidates:
            if s in found:
                continue
            sd = target.power(s, d)
            if any(target.is_divisor(sd, p) is not None for p in products):
                found.add(s)
    return found


def structural_claims_suite(
    member_length: int = 4,
    set_size: int = 2,
    d_max: int = 4,
    vector_entry: int = 3,
) -> LabReport:
    """Exhaustively check two structural claims at small scale:

    * free words: the weak divisors of a set are exactly the factors of its
      members (the bounded scan finds nothing more);
    * free commutative: taking weak divisors twice adds nothing.
    """
    assertions = []

    free = FreeWordTarget(("a", "b"))
    words = [
        "".join(w)
        for n in range(1, member_length + 1)
        for w in itertools.product("ab", repeat=n)
    ]
    candidates = sorted(words, key=free.sort_key)
    families = [(w,) for w in words] + [
        pair for pair in itertools.combinations(words, 2)
    ]
    discrepancies = []
    for family in families:
        factors = set()
        for m in family:
            factors.update(free.divisors(m))
        scanned = bounded_weak_divisors(free, family, candidates, d_max)
        if scanned != factors:
            discrepancies.append((family, sorted(scanned ^ factors)))
    spot = free.weak_divisors(("ab",), d_max).elements
    spot_ok = spot == ("a", "b", "ab")
    assertions.append(Assertion(
        "free-weak-divisors-are-factors",
        VERIFIED if not discrepancies and spot_ok else FAILED,
        evidence={
            "families": len(families),
            "member_length": member_length,
            "d_max": d_max,
            "discrepancies": len(discrepancies),
            "spot_case": list(spot),
            **({"first_discrepancy": repr(discrepancies[0])} if discrepancies else {}),
        },
    ))

    comm = FreeCommTarget(("a", "b"))
    vectors = [
        v
        for v in itertools.product(range(vector_entry + 1), repeat=2)
        if any(v)
    ]
    box = sorted(vectors)
    families = [(v,) for v in vectors] + [
        pair for pair in itertools.combinations(vectors, 2)
    ]
    discrepancies = []
    for family in families:
        once = bounded_weak_divisors(comm, family, box, d_max)
        twice = bounded_weak_divisors(comm, sorted(once), box, d_max)
        if once != twice:
            discrepancies.append((family, sorted(once ^ twice)))
    assertions.append(Assertion(
        "commutative-weak-divisors-idempotent",
        VERIFIED if not discrepancies else FAILED,
        evidence={
            "families": len(families),
            "vector_entry": vector_entry,
            "d_max": d_max,
            "discrepancies": len(discrepancies),
            **({"first_discrepancy": repr(discrepancies[0])} if discrepancies else {}),
        },
    ))
    return LabReport("structural-claims", tuple(assertions))


# ----------------------------------------------------------------------
# growth of the rational counterexample
# ----------------------------------------------------------------------


def rational_growth_suite(max_k: int = 9, d_max: int = 12) -> LabReport:
    """Measure how the weak divisors of {1} grow with the number of
    n/(n+1) generators; unbounded growth is what distinguishes this
    semigroup from those where weak-divisor sets stay finite."""
    counts = []
    previous: tuple = ()
    monotone = True
    all_elements_in = True
    for k in range(1, max_k + 1):
        found = weak_divisors_of_one(k, d_max)
        counts.append(len(found))
        if set(previous) - set(found):
            monotone = False
        target = RationalAddTarget(unit_fraction_generators(k))
        if set(target.elements_up_to(Fraction(1))) - set(found):
            all_elements_in = False
        previous = found
    assertions = [
        Assertion(
            "weak-divisors-of-one-grow-with-generators",
            VERIFIED_AT_BOUND if monotone else FAILED,
            bound=d_max,
            evidence={"counts_by_k": counts, "max_k": max_k, "d_max": d_max},
        ),
        Assertion(
            "every-element-below-one-is-found",
            VERIFIED_AT_BOUND if all_elements_in else FAILED,
            bound=d_max,
            evidence={
                "largest_set": [str(s) for s in previous],
                "count": len(previous),
            },
        ),
    ]
    return LabReport("rational-growth", tuple(assertions))
