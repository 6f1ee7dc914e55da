"""Divisor-bounded decision procedures over concrete semigroups.

The package decides two kinds of questions exactly, with checkable
certificates either way:

* whether a partial map into a built-in computable target semigroup
  extends to a homomorphism of a finitely presented source semigroup
  (``solver.extend_homomorphism``);
* whether a finitely presented monoid of module labels admits an
  integer-valued rank function (``rank.decide``), with a replayable
  witness relation certifying nonexistence.

``targets`` holds the built-in semigroups and their exact divisor and
weak-divisor computations; ``lab`` re-derives the structural facts the
machinery rests on at small scale.
"""

from .presentation import Presentation, Probe, ProblemInstance, validate_instance
from .rank import RankFunction, RankProblem, WitnessRelation, decide
from .solver import SolveReport, extend_homomorphism
from .targets import (
    FreeCommTarget,
    FreeWordTarget,
    NatTarget,
    PosNatTarget,
    RationalAddTarget,
    ScaledNatTarget,
    SubOfFreeTarget,
)

__version__ = "0.1.0"

__all__ = [
    "FreeCommTarget",
    "FreeWordTarget",
    "NatTarget",
    "PosNatTarget",
    "Presentation",
    "Probe",
    "ProblemInstance",
    "RankFunction",
    "RankProblem",
    "RationalAddTarget",
    "ScaledNatTarget",
    "SolveReport",
    "SubOfFreeTarget",
    "WitnessRelation",
    "decide",
    "extend_homomorphism",
    "validate_instance",
]
