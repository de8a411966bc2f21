"""
Rule Registry
All property laws available to the check runner, grouped into suites
"""
from typing import Dict, List

from .base_rule import BaseRule
from .warping_laws import (
    ReverseSumRule,
    CuttingNumberRule,
    MirrorReverseRule,
    AdjacentClassRule,
    AlternatingMinimumRule,
    CrossingBoundRule,
    ProfileSpreadRule,
)
from .simplification_laws import SmallCodesTrivialRule, DescendingTrivialRule
from .unknotting_laws import WarpingWitnessRule, HalfCrossingRule, MonotoneClosureRule
from .symmetry import InvolutionRule, RelabelInvarianceRule, ReverseTransportRule

RULE_CLASSES = [
    # Warping
    ReverseSumRule,
    CuttingNumberRule,
    MirrorReverseRule,
    AdjacentClassRule,
    AlternatingMinimumRule,
    CrossingBoundRule,
    ProfileSpreadRule,

    # Simplification
    SmallCodesTrivialRule,
    DescendingTrivialRule,

    # Unknotting
    WarpingWitnessRule,
    HalfCrossingRule,
    MonotoneClosureRule,

    # Symmetry
    InvolutionRule,
    RelabelInvarianceRule,
    ReverseTransportRule,
]

SUITES: Dict[str, List[type]] = {}
for _rule in RULE_CLASSES:
    SUITES.setdefault(_rule.suite, []).append(_rule)

SUITE_NAMES = sorted(SUITES) + ["all"]

# Suites whose rules make up `invariants --check`
INVARIANT_SUITES = ("lemma41", "lemma42", "lemma43", "thm41")


def rules_for(suite: str) -> List[BaseRule]:
    """Fresh rule instances for a suite name, or every rule for "all"

    Raises:
        KeyError: unknown suite
    """
    if suite == "all":
        return [cls() for cls in RULE_CLASSES]
    return [cls() for cls in SUITES[suite]]


DEFAULT_RULES = rules_for("all")

__all__ = [
    'BaseRule',
    'DEFAULT_RULES',
    'INVARIANT_SUITES',
    'RULE_CLASSES',
    'SUITES',
    'SUITE_NAMES',
    'rules_for',
    # Warping
    'ReverseSumRule',
    'CuttingNumberRule',
    'MirrorReverseRule',
    'AdjacentClassRule',
    'AlternatingMinimumRule',
    'CrossingBoundRule',
    'ProfileSpreadRule',
    # Simplification
    'SmallCodesTrivialRule',
    'DescendingTrivialRule',
    # Unknotting
    'WarpingWitnessRule',
    'HalfCrossingRule',
    'MonotoneClosureRule',
    # Symmetry
    'InvolutionRule',
    'RelabelInvarianceRule',
    'ReverseTransportRule',
]
